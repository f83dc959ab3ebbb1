#pragma once

#include "holonomic/int_polynomial.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace holonomic {

/// Linear recurrence with polynomial coefficients:
///     sum_{i=0..d} p_i(n) * u_{n+i} = 0    for n >= offset.
///
/// Construction canonicalizes: the integer content across all p_i is divided
/// out and the sign is fixed so that p_d has a positive leading coefficient.
class PRecurrence {
public:
    PRecurrence(std::vector<IntPolynomial> coeffs, long offset);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    long offset() const { return offset_; }
    const std::vector<IntPolynomial>& coeffs() const { return coeffs_; }
    const IntPolynomial& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    /// Largest degree among the p_i.
    int degree() const;

    /// sum_i p_i(n) u_{n+i} for the window u[0..d] = (u_n, ..., u_{n+d}).
    Rational apply(long n, const Rational* window) const;

    /// True when the two recurrences differ only by a nonzero constant factor.
    bool proportional_to(const PRecurrence& other) const;

    friend bool operator==(const PRecurrence&, const PRecurrence&) = default;

    /// Stable text form:
    ///   precurrence 1
    ///   order <d>
    ///   offset <n0>
    ///   p<i> <c_0> <c_1> ... <c_deg>     (one line per i, ascending powers; "p<i> 0" for zero)
    std::string serialize() const;
    /// Inverse of serialize(); blank lines and lines starting with '#' are ignored.
    static PRecurrence parse(const std::string& text);

    /// Display form, e.g. "(n^2 + 1)*u(n) - ... = 0".
    std::string to_string() const;

private:
    std::vector<IntPolynomial> coeffs_;
    long offset_;
};

/// The four-term recurrence for a_n (valid from n = 1).
PRecurrence a_recurrence();
/// The four-term recurrence for b_n (valid from n = 1).
PRecurrence b_recurrence();

}  // namespace holonomic
