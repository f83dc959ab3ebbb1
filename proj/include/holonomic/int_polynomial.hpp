#pragma once

#include "holonomic/exact.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace holonomic {

/// Dense univariate polynomial with integer coefficients.
///
/// coefficients()[i] multiplies x^i. Trailing zero coefficients are
/// stripped on construction, so the zero polynomial has no coefficients
/// and degree() == -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    /// The monomial c*x^power.
    static IntPolynomial monomial(const Integer& c, int power);
    /// The linear factor (a*x + b).
    static IntPolynomial linear(long a, long b);

    const std::vector<Integer>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^i; zero outside the stored range.
    Integer coefficient(int i) const;
    const Integer& leading() const;

    Integer evaluate(const Integer& x) const;
    Rational evaluate(const Rational& x) const;

    /// gcd of all coefficients (0 for the zero polynomial).
    Integer content() const;
    IntPolynomial derivative() const;
    IntPolynomial shifted(long s) const;  ///< p(x + s)

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    IntPolynomial& operator*=(const IntPolynomial& other);
    IntPolynomial& operator*=(const Integer& c);
    IntPolynomial operator-() const;

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Exact division by an integer that divides every coefficient.
    IntPolynomial divexact(const Integer& c) const;

    /// Human-readable form in variable `var`, e.g. "x^3 - 35x^2 + 35x - 1".
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

enum class PolyOp { add, sub, mul };

IntPolynomial poly_arith(const IntPolynomial& p, const IntPolynomial& q, PolyOp op);
inline Integer poly_eval(const IntPolynomial& p, const Integer& n) { return p.evaluate(n); }

/// Quotient and remainder of p / d over the rationals, scaled to stay integral:
/// lc(d)^(deg p - deg d + 1) * p = q*d + r (pseudo-division).
struct PseudoDivision {
    IntPolynomial quotient;
    IntPolynomial remainder;
};
PseudoDivision pseudo_divide(const IntPolynomial& p, const IntPolynomial& d);

/// Primitive gcd of two polynomials over Z (content removed, positive leading coefficient).
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);

/// Divides out the content and makes the leading coefficient positive.
IntPolynomial primitive_part(const IntPolynomial& p);

}  // namespace holonomic
