#include "holonomic/exact.hpp"

#include <cctype>

namespace holonomic {

Rational make_rational(const Integer& p, const Integer& q) {
    if (q == 0) {
        throw DomainError("rational with zero denominator");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        ++i;
    }
    if (i == text.size()) {
        throw DomainError("malformed number: '" + std::string(whole) + "'");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw DomainError("malformed number: '" + std::string(whole) + "'");
        }
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    return make_rational(parse_integer(text.substr(0, slash), text),
                         parse_integer(text.substr(slash + 1), text));
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) {
        return r.get_num().get_str(10);
    }
    return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

Integer binomial(const Integer& m, long k) {
    if (k < 0) {
        throw DomainError("binomial: negative lower index " + std::to_string(k));
    }
    if (m >= 0 && m.fits_ulong_p()) {
        Integer r;
        mpz_bin_uiui(r.get_mpz_t(), m.get_ui(), static_cast<unsigned long>(k));
        return r;
    }
    // Falling factorial m(m-1)...(m-k+1) / k!, each partial quotient exact.
    Integer r = 1;
    for (long j = 1; j <= k; ++j) {
        r *= m - (j - 1);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(j));
    }
    return r;
}

Integer binomial(long m, long k) { return binomial(Integer(m), k); }

Integer pow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return r;
}

}  // namespace holonomic
