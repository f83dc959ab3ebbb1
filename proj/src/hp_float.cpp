#include "holonomic/hp_float.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

namespace holonomic {

long default_precision() {
    if (const char* env = std::getenv("HOLONOMIC_PRECISION")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= MPFR_PREC_MIN && v <= 1 << 20) {
            return v;
        }
    }
    return kDefaultPrecision;
}

namespace {

void check_precision(long precision) {
    if (precision < MPFR_PREC_MIN || precision > MPFR_PREC_MAX) {
        throw DomainError("invalid precision: " + std::to_string(precision));
    }
}

long joint(const HPFloat& a, const HPFloat& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

HPFloat::HPFloat(long precision) {
    check_precision(precision);
    mpfr_init2(value_, precision);
    mpfr_set_zero(value_, 1);
}

HPFloat::HPFloat(long value, long precision) : HPFloat(precision) {
    mpfr_set_si(value_, value, MPFR_RNDN);
}

HPFloat::HPFloat(double value, long precision) : HPFloat(precision) {
    mpfr_set_d(value_, value, MPFR_RNDN);
}

HPFloat::HPFloat(const Rational& value, long precision, mpfr_rnd_t rnd) : HPFloat(precision) {
    mpfr_set_q(value_, value.get_mpq_t(), rnd);
}

HPFloat::HPFloat(const Integer& value, long precision, mpfr_rnd_t rnd) : HPFloat(precision) {
    mpfr_set_z(value_, value.get_mpz_t(), rnd);
}

HPFloat::HPFloat(const HPFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

HPFloat::HPFloat(HPFloat&& other) noexcept {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_swap(value_, other.value_);
}

HPFloat& HPFloat::operator=(const HPFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

HPFloat& HPFloat::operator=(HPFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

HPFloat::~HPFloat() { mpfr_clear(value_); }

HPFloat HPFloat::pi(long precision) {
    HPFloat r(precision);
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
}

#define HOLONOMIC_BINARY(op, fn)                                   \
    HPFloat operator op(const HPFloat& a, const HPFloat& b) {      \
        HPFloat r(joint(a, b));                                    \
        fn(r.get(), a.get(), b.get(), MPFR_RNDN);                  \
        return r;                                                  \
    }                                                              \
    HPFloat& HPFloat::operator op##=(const HPFloat & o) {          \
        *this = *this op o;                                        \
        return *this;                                              \
    }

HOLONOMIC_BINARY(+, mpfr_add)
HOLONOMIC_BINARY(-, mpfr_sub)
HOLONOMIC_BINARY(*, mpfr_mul)
HOLONOMIC_BINARY(/, mpfr_div)
#undef HOLONOMIC_BINARY

HPFloat HPFloat::operator-() const {
    HPFloat r(precision());
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
}

std::string HPFloat::to_string(int digits) const {
    if (mpfr_nan_p(value_)) {
        return "nan";
    }
    if (mpfr_inf_p(value_)) {
        return sign() < 0 ? "-inf" : "inf";
    }
    if (digits <= 0) {
        digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30103)) + 1;
    }
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
    return std::string(buf.data());
}

std::string HPFloat::to_fixed(int decimals) const {
    int size = mpfr_snprintf(nullptr, 0, "%.*Rf", decimals, value_);
    std::vector<char> buf(static_cast<std::size_t>(size) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", decimals, value_);
    return std::string(buf.data());
}

HPFloat abs(const HPFloat& x) {
    HPFloat r(x.precision());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

HPFloat sqrt(const HPFloat& x) {
    HPFloat r(x.precision());
    mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
    return r;
}

HPFloat log(const HPFloat& x, mpfr_rnd_t rnd) {
    HPFloat r(x.precision());
    mpfr_log(r.get(), x.get(), rnd);
    return r;
}

HPFloat exp(const HPFloat& x) {
    HPFloat r(x.precision());
    mpfr_exp(r.get(), x.get(), MPFR_RNDN);
    return r;
}

HPFloat pow(const HPFloat& base, const HPFloat& exponent) {
    HPFloat r(joint(base, exponent));
    mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
    return r;
}

HPFloat pow(const HPFloat& base, long exponent) {
    HPFloat r(base.precision());
    mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
    return r;
}

HPFloat floor(const HPFloat& x) {
    HPFloat r(x.precision());
    mpfr_floor(r.get(), x.get());
    return r;
}

HPFloat log_rational(const Rational& value, long precision, mpfr_rnd_t rnd) {
    if (sgn(value) <= 0) {
        throw DomainError("logarithm of a nonpositive value " + holonomic::to_string(value));
    }
    const bool lower = rnd == MPFR_RNDD;
    const bool upper = rnd == MPFR_RNDU;
    if (!lower && !upper) {
        HPFloat x(value, precision + 32);
        HPFloat r(precision);
        mpfr_log(r.get(), x.get(), MPFR_RNDN);
        return r;
    }
    // ln(p) - ln(q) with each piece rounded so the difference is a bound.
    const mpfr_rnd_t away = lower ? MPFR_RNDU : MPFR_RNDD;
    HPFloat p(value.get_num(), precision, rnd);
    HPFloat q(value.get_den(), precision, away);
    HPFloat lp(precision);
    HPFloat lq(precision);
    mpfr_log(lp.get(), p.get(), rnd);
    mpfr_log(lq.get(), q.get(), away);
    HPFloat r(precision);
    mpfr_sub(r.get(), lp.get(), lq.get(), rnd);
    return r;
}

}  // namespace holonomic
