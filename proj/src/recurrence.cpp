#include "holonomic/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace holonomic {

PRecurrence::PRecurrence(std::vector<IntPolynomial> coeffs, long offset)
    : coeffs_(std::move(coeffs)), offset_(offset) {
    if (coeffs_.size() < 2) {
        throw DomainError("a recurrence needs order >= 1");
    }
    if (coeffs_.front().is_zero() || coeffs_.back().is_zero()) {
        throw DomainError("recurrence coefficients p_0 and p_d must be nonzero");
    }
    Integer g = 0;
    for (const auto& p : coeffs_) {
        Integer c = p.content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (coeffs_.back().leading() < 0) {
        g = -g;
    }
    for (auto& p : coeffs_) {
        p = p.divexact(g);
    }
}

int PRecurrence::degree() const {
    int d = 0;
    for (const auto& p : coeffs_) {
        d = std::max(d, p.degree());
    }
    return d;
}

Rational PRecurrence::apply(long n, const Rational* window) const {
    Rational acc = 0;
    const Integer x(n);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        acc += Rational(coeffs_[i].evaluate(x)) * window[i];
    }
    acc.canonicalize();
    return acc;
}

bool PRecurrence::proportional_to(const PRecurrence& other) const {
    // Both sides are primitive with positive leading p_d, so proportional
    // recurrences have identical coefficients.
    return coeffs_ == other.coeffs_;
}

std::string PRecurrence::serialize() const {
    std::ostringstream out;
    out << "precurrence 1\n";
    out << "order " << order() << "\n";
    out << "offset " << offset_ << "\n";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out << "p" << i;
        if (coeffs_[i].is_zero()) {
            out << " 0";
        }
        for (const auto& c : coeffs_[i].coefficients()) {
            out << " " << c.get_str();
        }
        out << "\n";
    }
    return out.str();
}

PRecurrence PRecurrence::parse(const std::string& text) {
    // Comment ('#') and blank lines may appear anywhere.
    std::string body;
    {
        std::istringstream raw(text);
        for (std::string line; std::getline(raw, line);) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            body += line + "\n";
        }
    }
    std::istringstream in(body);
    std::string key;
    int version = 0;
    int order = 0;
    long offset = 0;
    if (!(in >> key >> version) || key != "precurrence" || version != 1) {
        throw DomainError("recurrence text must start with 'precurrence 1'");
    }
    if (!(in >> key >> order) || key != "order" || order < 1) {
        throw DomainError("recurrence text: expected 'order <d>' with d >= 1");
    }
    if (!(in >> key >> offset) || key != "offset") {
        throw DomainError("recurrence text: expected 'offset <n0>'");
    }
    std::string rest;
    std::getline(in, rest);
    std::vector<IntPolynomial> coeffs;
    for (int i = 0; i <= order; ++i) {
        std::string line;
        if (!std::getline(in, line)) {
            throw DomainError("recurrence text: missing line for p" + std::to_string(i));
        }
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag != "p" + std::to_string(i)) {
            throw DomainError("recurrence text: expected 'p" + std::to_string(i) + "', got '" + tag + "'");
        }
        std::vector<Integer> cs;
        std::string token;
        while (fields >> token) {
            Rational q = parse_rational(token);
            if (!is_integer(q)) {
                throw DomainError("recurrence text: non-integer coefficient '" + token + "'");
            }
            cs.push_back(q.get_num());
        }
        coeffs.emplace_back(std::move(cs));
    }
    return PRecurrence(std::move(coeffs), offset);
}

std::string PRecurrence::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        if (i > 0) {
            out << " + ";
        }
        out << "(" << coeffs_[i].to_string("n") << ")*u(n";
        if (i > 0) {
            out << "+" << i;
        }
        out << ")";
    }
    out << " = 0";
    return out.str();
}

namespace {

IntPolynomial product(std::initializer_list<IntPolynomial> factors) {
    IntPolynomial r({1});
    for (const auto& f : factors) {
        r *= f;
    }
    return r;
}

IntPolynomial cube(const IntPolynomial& p) { return p * p * p; }

}  // namespace

PRecurrence a_recurrence() {
    const IntPolynomial n = IntPolynomial::linear(1, 0);
    const auto lin = IntPolynomial::linear;
    return PRecurrence(
        {
            product({cube(n), lin(1, 1), lin(2, 5)}),
            -product({lin(1, 1), lin(2, 5), IntPolynomial({62, 191, 152, 35})}),
            product({lin(1, 2), lin(2, 1), IntPolynomial({88, 224, 163, 35})}),
            -product({lin(1, 2), cube(lin(1, 3)), lin(2, 1)}),
        },
        1);
}

PRecurrence b_recurrence() {
    const IntPolynomial n = IntPolynomial::linear(1, 0);
    const auto lin = IntPolynomial::linear;
    return PRecurrence(
        {
            product({lin(1, 1), lin(2, 5), IntPolynomial({11, 12, 3}), IntPolynomial({25, 24, 6}), cube(n)}),
            -product({lin(1, 1), lin(2, 5),
                      IntPolynomial({3076, 21646, 59512, 82777, 64134, 28137, 6552, 630})}),
            product({IntPolynomial({5072, 30640, 73445, 93469, 68751, 29271, 6678, 630}), lin(2, 1),
                     lin(1, 2)}),
            -product({lin(1, 2), lin(2, 1), IntPolynomial({2, 6, 3}), IntPolynomial({7, 12, 6}),
                      cube(lin(1, 3))}),
        },
        1);
}

AnalysisReport verify_recurrence(const PRecurrence& rec, const SequenceValues& vals, IndexRange range) {
    if (range.first < rec.offset()) {
        throw DomainError("verify_recurrence: range starts at " + std::to_string(range.first) +
                          " before the recurrence offset " + std::to_string(rec.offset()));
    }
    if (!vals.covers(range.first, range.last + rec.order())) {
        throw CoverageError("verify_recurrence: values for " + std::to_string(range.first) + ".." +
                            std::to_string(range.last + rec.order()) + " required, have " +
                            std::to_string(vals.first_index()) + ".." + std::to_string(vals.last_index()));
    }
    const std::string property = "recurrence (order " + std::to_string(rec.order()) + ", degree " +
                                 std::to_string(rec.degree()) + ")";
    for (long n = range.first; n <= range.last; ++n) {
        Rational residue = rec.apply(n, &vals.values[static_cast<std::size_t>(n - vals.offset)]);
        if (residue != 0) {
            auto r = AnalysisReport::violation(vals.name, property, range, n, residue);
            r.notes.push_back("witness is the residue sum_i p_i(n) u_(n+i)");
            return r;
        }
    }
    return AnalysisReport::pass(vals.name, property, range);
}

IntPolynomial characteristic_poly(const PRecurrence& rec) {
    const int top = rec.degree();
    std::vector<Integer> cs;
    for (const auto& p : rec.coeffs()) {
        cs.push_back(p.coefficient(top));
    }
    return primitive_part(IntPolynomial(std::move(cs)));
}

RatioLimit ratio_limit(const PRecurrence& rec, const SequenceValues& vals, long precision) {
    CharPolyResult spectrum = roots_real(characteristic_poly(rec), precision);
    if (spectrum.roots.empty()) {
        throw AmbiguityError("characteristic polynomial has no real root");
    }
    const RealRoot& dom = spectrum.roots[spectrum.dominant];
    const HPFloat dom_abs = abs(dom.value);
    HPFloat tol(precision);
    mpfr_set_ui_2exp(tol.get(), 1, -precision / 2, MPFR_RNDN);
    for (std::size_t i = 0; i < spectrum.roots.size(); ++i) {
        if (i != spectrum.dominant && abs(dom_abs - abs(spectrum.roots[i].value)) <= tol * dom_abs) {
            throw AmbiguityError("two characteristic roots share the maximal modulus " + dom_abs.to_string(20));
        }
    }
    for (double m : spectrum.complex_moduli) {
        if (m >= dom_abs.to_double() * (1 - 1e-9)) {
            throw AmbiguityError("a non-real characteristic root has modulus >= the largest real root");
        }
    }
    long n = vals.last_index() - 1;
    while (n >= vals.first_index() && vals.at(n) == 0) {
        --n;
    }
    if (n < vals.first_index()) {
        throw CoverageError("ratio_limit: need two consecutive terms with nonzero denominator term");
    }
    Rational tail = vals.at(n + 1) / vals.at(n);
    RatioLimit out{dom.value, dom.exact, n, HPFloat(tail, precision), HPFloat(precision), {}};
    out.gap = abs(out.tail_ratio - out.limit);
    std::ostringstream note;
    note << "dominant characteristic root " << (dom.exact.empty() ? dom.value.to_string(30) : dom.exact)
         << "; empirical ratio u(" << n + 1 << ")/u(" << n << ") differs by " << out.gap.to_string(6)
         << ". Poincare-Perron names this root as the candidate limit; it does not by itself prove"
            " convergence for an arbitrary solution.";
    out.note = note.str();
    return out;
}

}  // namespace holonomic
