#include "holonomic/int_polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace holonomic {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) {
        coeffs_.emplace_back(c);
    }
    trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, int power) {
    std::vector<Integer> v(static_cast<std::size_t>(power) + 1, Integer(0));
    v.back() = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(long a, long b) {
    return IntPolynomial({b, a});
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Integer IntPolynomial::coefficient(int i) const {
    if (i < 0 || i > degree()) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

const Integer& IntPolynomial::leading() const {
    if (is_zero()) {
        throw DomainError("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

Integer IntPolynomial::evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + Rational(*it);
    }
    acc.canonicalize();
    return acc;
}

Integer IntPolynomial::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    return g;
}

IntPolynomial IntPolynomial::derivative() const {
    std::vector<Integer> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
    }
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::shifted(long s) const {
    // Horner in polynomial arithmetic: p(x+s).
    IntPolynomial acc;
    const IntPolynomial step = linear(1, s);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= step;
        acc += IntPolynomial(std::vector<Integer>{*it});
    }
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), Integer(0));
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), Integer(0));
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> r(coeffs_.size() + other.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            r[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
    for (auto& x : coeffs_) {
        x *= c;
    }
    trim();
    return *this;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& x : r.coeffs_) {
        x = -x;
    }
    return r;
}

IntPolynomial IntPolynomial::divexact(const Integer& c) const {
    if (c == 0) {
        throw DomainError("polynomial division by zero");
    }
    IntPolynomial r = *this;
    for (auto& x : r.coeffs_) {
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return r;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) {
            continue;
        }
        Integer mag = abs(c);
        if (first) {
            if (c < 0) {
                out << "-";
            }
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) {
            out << mag.get_str();
        }
        if (i >= 1) {
            out << var;
        }
        if (i >= 2) {
            out << "^" << i;
        }
    }
    return out.str();
}

IntPolynomial poly_arith(const IntPolynomial& p, const IntPolynomial& q, PolyOp op) {
    switch (op) {
        case PolyOp::add: return p + q;
        case PolyOp::sub: return p - q;
        case PolyOp::mul: return p * q;
    }
    throw DomainError("unknown polynomial operation");
}

PseudoDivision pseudo_divide(const IntPolynomial& p, const IntPolynomial& d) {
    if (d.is_zero()) {
        throw DomainError("pseudo-division by the zero polynomial");
    }
    IntPolynomial r = p;
    IntPolynomial q;
    const Integer& lc = d.leading();
    int steps = std::max(p.degree() - d.degree() + 1, 0);
    while (!r.is_zero() && r.degree() >= d.degree()) {
        IntPolynomial t = IntPolynomial::monomial(r.leading(), r.degree() - d.degree());
        q = q * lc + t;
        r = r * lc - t * d;
        --steps;
    }
    // Normalise to exactly lc^(deg p - deg d + 1) * p = q*d + r.
    for (; steps > 0; --steps) {
        q *= lc;
        r *= lc;
    }
    return {q, r};
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) {
        return p;
    }
    IntPolynomial r = p.divexact(p.content());
    if (r.leading() < 0) {
        r = -r;
    }
    return r;
}

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        IntPolynomial r = primitive_part(pseudo_divide(a, b).remainder);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace holonomic
