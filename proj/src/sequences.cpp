#include "holonomic/sequences.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>

namespace holonomic {

const Rational& SequenceValues::at(long n) const {
    if (n < offset || n > last_index()) {
        throw CoverageError("sequence '" + name + "' has no term at index " + std::to_string(n) +
                            " (stored range " + std::to_string(offset) + ".." +
                            std::to_string(last_index()) + ")");
    }
    return values[static_cast<std::size_t>(n - offset)];
}

SequenceValues SequenceValues::slice(long from, long to) const {
    if (!covers(from, to)) {
        throw CoverageError("sequence '" + name + "' does not cover " + std::to_string(from) + ".." +
                            std::to_string(to));
    }
    SequenceValues r{name, from, {}};
    r.values.assign(values.begin() + (from - offset), values.begin() + (to - offset + 1));
    return r;
}

long natural_offset(SequenceId id) {
    return id == SequenceId::apery ? 0 : 1;
}

std::string sequence_name(SequenceId id) {
    switch (id) {
        case SequenceId::a: return "a";
        case SequenceId::b: return "b";
        case SequenceId::apery: return "apery";
        case SequenceId::s: return "s";
    }
    return "?";
}

SequenceId parse_sequence_id(const std::string& name) {
    if (name == "a") return SequenceId::a;
    if (name == "b") return SequenceId::b;
    if (name == "apery" || name == "A") return SequenceId::apery;
    if (name == "s" || name == "S") return SequenceId::s;
    throw DomainError("unknown sequence '" + name + "' (expected a, b, apery or s)");
}

namespace {

void require_positive(long n, const char* what) {
    if (n < 1) {
        throw DomainError(std::string(what) + ": index must be >= 1, got " + std::to_string(n));
    }
}

// Walks P_k = C(n-1,k) C(n+k,k) for k = 0..n-1 via
// P_{k+1} = P_k (n-1-k)(n+k+1) / (k+1)^2, calling f(k, P_k^2).
template <typename F>
void for_each_core_term(long n, F&& f) {
    Integer p = 1;
    Integer sq;
    for (long k = 0; k < n; ++k) {
        sq = p * p;
        f(k, sq);
        p *= (n - 1 - k);
        p *= (n + k + 1);
        mpz_divexact_ui(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>((k + 1) * (k + 1)));
    }
}

}  // namespace

Rational a_direct(long n, AForm form) {
    require_positive(n, "a_direct");
    Rational sum = 0;
    if (form == AForm::dual) {
        for (long k = 0; k < n; ++k) {
            Integer c1 = binomial(n - 1, k);
            Integer c2 = binomial(-n - 1, k);
            Integer num = c1 * c1 * c2 * c2;
            sum += make_rational(num, Integer(4 * k * k - 1));
        }
    } else {
        for_each_core_term(n, [&](long k, const Integer& t) {
            sum += make_rational(t, Integer(4 * k * k - 1));
        });
    }
    sum /= n;
    sum.canonicalize();
    return sum;
}

Rational a_transformed(long n) {
    require_positive(n, "a_transformed");
    Rational sum = 0;
    for (long k = 1; k <= n; ++k) {
        Integer c = binomial(n, k) * binomial(n + k, k);
        Integer num = c * c * pow(Integer(k), 4);
        Integer den = Integer(4 * (k - 1) * (k - 1) - 1) * (n + k) * (n + k);
        sum += make_rational(num, den);
    }
    sum /= pow(Integer(n), 3);
    sum.canonicalize();
    return sum;
}

Rational b_direct(long n) {
    require_positive(n, "b_direct");
    Integer sum = 0;
    for_each_core_term(n, [&](long k, const Integer& t) { sum += t * (3 * k * k + 3 * k + 1); });
    return make_rational(sum, pow(Integer(n), 3));
}

Integer apery(long n) {
    if (n < 0) {
        throw DomainError("apery: index must be >= 0, got " + std::to_string(n));
    }
    // Q_k = C(n,k) C(n+k,k); Q_{k+1} = Q_k (n-k)(n+k+1) / (k+1)^2.
    Integer q = 1;
    Integer sum = 0;
    for (long k = 0; k <= n; ++k) {
        sum += q * q;
        q *= (n - k);
        q *= (n + k + 1);
        mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>((k + 1) * (k + 1)));
    }
    return sum;
}

Integer s_sum(long n) {
    require_positive(n, "s_sum");
    Integer sum = 0;
    for_each_core_term(n, [&](long, const Integer& t) { sum += t; });
    return sum;
}

namespace {

Rational evaluate_named(SequenceId id, long n) {
    switch (id) {
        case SequenceId::a: return a_direct(n);
        case SequenceId::b: return b_direct(n);
        case SequenceId::apery: return Rational(apery(n));
        case SequenceId::s: return Rational(s_sum(n));
    }
    throw DomainError("unknown sequence");
}

struct SequenceCache {
    std::mutex mutex;
    std::array<std::vector<Rational>, 4> prefixes;
};

SequenceCache& cache() {
    static SequenceCache instance;
    return instance;
}

}  // namespace

SequenceValues sequence_table(SequenceId id, long from, long to) {
    const long base = natural_offset(id);
    if (from < base || to < from) {
        throw DomainError("invalid range " + std::to_string(from) + ".." + std::to_string(to) +
                          " for sequence " + sequence_name(id));
    }
    auto& c = cache();
    std::lock_guard lock(c.mutex);
    auto& prefix = c.prefixes[static_cast<std::size_t>(id)];
    for (long n = base + static_cast<long>(prefix.size()); n <= to; ++n) {
        prefix.push_back(evaluate_named(id, n));
    }
    SequenceValues r{sequence_name(id), from, {}};
    r.values.assign(prefix.begin() + (from - base), prefix.begin() + (to - base + 1));
    return r;
}

void clear_sequence_cache() {
    auto& c = cache();
    std::lock_guard lock(c.mutex);
    for (auto& p : c.prefixes) {
        p.clear();
    }
}

SequenceValues extend_by_recurrence(const PRecurrence& rec, const SequenceValues& seed, long count) {
    const int d = rec.order();
    if (seed.size() < d) {
        throw CoverageError("extend_by_recurrence: need at least " + std::to_string(d) +
                            " seed values, got " + std::to_string(seed.size()));
    }
    if (count < 1) {
        throw DomainError("extend_by_recurrence: count must be positive");
    }
    SequenceValues out = seed;
    out.values.reserve(out.values.size() + static_cast<std::size_t>(count));
    for (long added = 0; added < count; ++added) {
        // New term u_{n+d} with n = last_index - d + 1.
        const long n = out.last_index() - d + 1;
        if (n < rec.offset()) {
            throw CoverageError("extend_by_recurrence: index " + std::to_string(n) +
                                " precedes the recurrence offset " + std::to_string(rec.offset()));
        }
        const Integer lead = rec.coeff(d).evaluate(Integer(n));
        if (lead == 0) {
            throw SingularityError(n, "extend_by_recurrence: leading coefficient vanishes at n = " +
                                          std::to_string(n));
        }
        Rational acc = 0;
        const Rational* window = &out.values[static_cast<std::size_t>(n - out.offset)];
        for (int i = 0; i < d; ++i) {
            acc += Rational(rec.coeff(i).evaluate(Integer(n))) * window[i];
        }
        Rational next = -acc / Rational(lead);
        next.canonicalize();
        out.values.push_back(std::move(next));
    }
    return out;
}

void write_sequence(std::ostream& out, const SequenceValues& values) {
    for (long n = values.first_index(); n <= values.last_index(); ++n) {
        out << n << '\t' << to_string(values.at(n)) << '\n';
    }
}

SequenceValues read_sequence(std::istream& in, const std::string& name) {
    SequenceValues r{name, 0, {}};
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        std::istringstream fields(line);
        long index = 0;
        std::string value;
        std::string extra;
        if (!(fields >> index >> value) || (fields >> extra)) {
            throw DomainError("sequence file line " + std::to_string(line_no) +
                              ": expected 'index<TAB>value'");
        }
        if (r.values.empty()) {
            r.offset = index;
        } else if (index != r.last_index() + 1) {
            throw DomainError("sequence file line " + std::to_string(line_no) + ": index " +
                              std::to_string(index) + " breaks contiguity (expected " +
                              std::to_string(r.last_index() + 1) + ")");
        }
        r.values.push_back(parse_rational(value));
    }
    return r;
}

SequenceValues read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot read sequence file '" + path + "'");
    }
    return read_sequence(in, path);
}

void write_sequence_file(const std::string& path, const SequenceValues& values) {
    std::ofstream out(path);
    if (!out) {
        throw DomainError("cannot write sequence file '" + path + "'");
    }
    write_sequence(out, values);
}

}  // namespace holonomic
