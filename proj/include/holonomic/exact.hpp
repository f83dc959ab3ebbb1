#pragma once

// Exact integer and rational arithmetic on top of GMP.
//
// Integer and Rational are GMP's C++ value types; mpq_class is kept
// canonical (lowest terms, positive denominator) at every construction
// site in this library so that equality is a plain comparison.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace holonomic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when an operation is handed fewer values than it needs.
class CoverageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a stated precondition (squarefree input, constant sign, ...) fails.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Builds p/q in canonical form. Throws DomainError for q == 0.
Rational make_rational(const Integer& p, const Integer& q);

/// Parses "p" or "p/q" (decimal, optional sign). Result is canonical.
Rational parse_rational(std::string_view text);

/// Exact decimal text: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Generalised binomial coefficient prod_{j=1..k} (m-j+1)/j for any signed m.
/// binomial(m, 0) == 1; for m >= 0 and k > m the result is 0.
Integer binomial(const Integer& m, long k);
Integer binomial(long m, long k);

/// Sign of a rational: -1, 0 or +1.
inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

/// Least common multiple of the denominators; 1 for an empty range.
template <typename Range>
Integer denominator_lcm(const Range& values) {
    Integer l = 1;
    for (const Rational& v : values) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    return l;
}

}  // namespace holonomic
