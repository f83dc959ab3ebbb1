#pragma once

#include "holonomic/hp_float.hpp"
#include "holonomic/report.hpp"
#include "holonomic/sequences.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace holonomic {

enum class AsymptoticOrder { main, corrected };

/// Classical expansion A_n ~ (1+sqrt2)^(4n+2) / (2 pi n sqrt2)^(3/2) * (1 - (48 - 15 sqrt2)/(64 n))
/// paired with the exact Apery number.
struct AsymptoticEval {
    long n = 0;
    Rational exact;
    HPFloat formula;
    AsymptoticOrder order = AsymptoticOrder::corrected;

    /// |formula / exact - 1|, recomputed on every call.
    HPFloat relative_error() const;
};

AsymptoticEval apery_asymptotic(long n, AsymptoticOrder order = AsymptoticOrder::corrected,
                                long precision = kDefaultPrecision);

/// (n, exact, formula, relative error) rows as CSV with a header line.
void write_asymptotic_csv(std::ostream& out, const std::vector<AsymptoticEval>& rows, int digits = 20);

enum class WeightKind { a_profile, b_profile };

/// a-profile: h_k = k^2/(4(k-1)^2 - 1) * k^2/(n+k)^2, k >= 1.
/// b-profile: f_k = (n-k)(3k^2+3k+1)/n^4, 0 <= k <= n-1.
/// Throws DomainError outside those index ranges.
Rational weight_profile_eval(WeightKind kind, long n, long k);

/// (1/n^3) sum_{k=1}^{n} C(n,k)^2 C(n+k,k)^2 h_k; equals a_n exactly.
Rational a_weighted_sum(long n);
/// sum_{k=0}^{n-1} f_k (n-k)/n C(n,k)^2 C(n+k,k)^2; equals b_n exactly.
Rational b_weighted_sum(long n);
/// sum_{k=0}^{n-1} f_k C(n,k)^2 C(n+k,k)^2 without the (n-k)/n factor.
/// Agrees with b_n only at n = 1.
Rational b_weighted_sum_unscaled(long n);

/// Weight profile at fixed n with the claimed bounds next to the true extrema.
struct BoundProfile {
    WeightKind kind = WeightKind::a_profile;
    long n = 0;
    Rational claimed_lower;   ///< a: 1/(4n^2); b: 1/(4n^2)
    Rational claimed_upper;   ///< a: 1/16;     b: 4/9
    Rational min_value;       ///< exact discrete minimum over the admissible k
    long argmin = 0;
    Rational max_value;       ///< exact discrete maximum
    long argmax = 0;
    /// b only: stationary points k = (n - 1 ± sqrt(n^2 + n))/3 and f there.
    std::optional<HPFloat> critical_plus;
    std::optional<HPFloat> critical_minus;
    std::optional<HPFloat> f_at_critical_plus;
    std::optional<HPFloat> f_at_critical_minus;
};

BoundProfile bound_profile(WeightKind kind, long n, long precision = kDefaultPrecision);
/// f(k) = (n-k)(3k^2+3k+1)/n^4 at real k.
HPFloat b_profile_at(long n, const HPFloat& k);

/// Per-n bound function; nullopt means "no bound on this side".
using BoundFn = std::function<std::optional<Rational>(long n)>;

/// Exact check of lower(n) <= u_n <= upper(n) for n in range. Lists every
/// violation per side and the least N from which each side holds to range.last.
AnalysisReport audit_bounds(const SequenceValues& vals, const std::string& property, IndexRange range,
                            const BoundFn& lower, const BoundFn& upper);

/// A_n/(4 n^5) <= a_n <= A_n/(16 n^3).
AnalysisReport a_bounds_audit(IndexRange range);
/// S_n/(4 n^2) <= b_n <= (4/9) S_n, plus weight-profile facts.
AnalysisReport b_bounds_audit(IndexRange range);

struct DecayFit {
    HPFloat exponent;   ///< t in u_n ~ K growth^n / n^t
    HPFloat intercept;  ///< ln K
    IndexRange window;
    HPFloat residual;   ///< max |fitted - observed| of ln(u_n / growth^n)
};

/// Least-squares slope of ln(u_n / growth^n) against ln n on `window`, negated.
DecayFit decay_exponent_fit(const SequenceValues& vals, const HPFloat& growth_base, IndexRange window,
                            long precision = kDefaultPrecision);

/// 17 + 12 sqrt(2) = (1 + sqrt 2)^4 at `precision`.
HPFloat apery_growth(long precision = kDefaultPrecision);

}  // namespace holonomic
