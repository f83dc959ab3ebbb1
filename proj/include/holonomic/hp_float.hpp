#pragma once

#include "holonomic/exact.hpp"

#include <mpfr.h>

#include <string>

namespace holonomic {

/// Default working precision in bits. HOLONOMIC_PRECISION overrides it.
inline constexpr long kDefaultPrecision = 256;
long default_precision();

/// Binary floating point with an explicit precision (bits), backed by MPFR.
///
/// Every value carries its own precision. Binary arithmetic produces a result
/// at the larger of the two operand precisions; transcendental functions take
/// the precision of their argument. All roundings are to nearest unless a
/// directed variant is used.
class HPFloat {
public:
    explicit HPFloat(long precision = kDefaultPrecision);
    HPFloat(long value, long precision);
    HPFloat(double value, long precision);
    /// Correctly rounded conversion.
    HPFloat(const Rational& value, long precision, mpfr_rnd_t rnd = MPFR_RNDN);
    HPFloat(const Integer& value, long precision, mpfr_rnd_t rnd = MPFR_RNDN);

    HPFloat(const HPFloat& other);
    HPFloat(HPFloat&& other) noexcept;
    HPFloat& operator=(const HPFloat& other);
    HPFloat& operator=(HPFloat&& other) noexcept;
    ~HPFloat();

    long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    static HPFloat pi(long precision);

    HPFloat& operator+=(const HPFloat& o);
    HPFloat& operator-=(const HPFloat& o);
    HPFloat& operator*=(const HPFloat& o);
    HPFloat& operator/=(const HPFloat& o);
    HPFloat operator-() const;

    friend HPFloat operator+(const HPFloat& a, const HPFloat& b);
    friend HPFloat operator-(const HPFloat& a, const HPFloat& b);
    friend HPFloat operator*(const HPFloat& a, const HPFloat& b);
    friend HPFloat operator/(const HPFloat& a, const HPFloat& b);

    friend bool operator<(const HPFloat& a, const HPFloat& b) { return mpfr_less_p(a.value_, b.value_); }
    friend bool operator>(const HPFloat& a, const HPFloat& b) { return mpfr_greater_p(a.value_, b.value_); }
    friend bool operator<=(const HPFloat& a, const HPFloat& b) { return mpfr_lessequal_p(a.value_, b.value_); }
    friend bool operator>=(const HPFloat& a, const HPFloat& b) { return mpfr_greaterequal_p(a.value_, b.value_); }
    friend bool operator==(const HPFloat& a, const HPFloat& b) { return mpfr_equal_p(a.value_, b.value_); }

    int sign() const { return mpfr_sgn(value_); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

    /// Scientific notation with `digits` significant decimal digits, e.g. "3.39705627e1".
    /// digits == 0 picks enough digits to round-trip the precision.
    std::string to_string(int digits = 0) const;
    /// Fixed-point notation with `decimals` digits after the point.
    std::string to_fixed(int decimals) const;

private:
    mpfr_t value_;
};

HPFloat abs(const HPFloat& x);
HPFloat sqrt(const HPFloat& x);
HPFloat log(const HPFloat& x, mpfr_rnd_t rnd = MPFR_RNDN);
HPFloat exp(const HPFloat& x);
HPFloat pow(const HPFloat& base, const HPFloat& exponent);
HPFloat pow(const HPFloat& base, long exponent);
HPFloat floor(const HPFloat& x);

/// ln(value) for a positive rational at `precision`, rounded in direction `rnd`.
/// With MPFR_RNDD / MPFR_RNDU the result is a guaranteed lower / upper bound.
HPFloat log_rational(const Rational& value, long precision, mpfr_rnd_t rnd = MPFR_RNDN);

}  // namespace holonomic
