#pragma once

#include "holonomic/hp_float.hpp"
#include "holonomic/report.hpp"
#include "holonomic/sequences.hpp"

#include <optional>
#include <string>
#include <vector>

namespace holonomic {

/// R u_n = u_{n+1} / u_n for n = offset .. last-1. Throws DomainError on a zero term.
SequenceValues ratio_seq(const SequenceValues& vals);
/// R^2 u_n = u_n u_{n+2} / u_{n+1}^2 for n = offset .. last-2.
SequenceValues ratio2_seq(const SequenceValues& vals);
/// L^k, with L u_n = u_{n+2} u_n - u_{n+1}^2. Each application drops two terms.
SequenceValues L_operator(const SequenceValues& vals, int k);

/// k-fold backward difference, Delta u_n = u_n - u_{n-1}. Element i of the
/// result belongs to input position i + k. Throws CoverageError if size <= k.
template <typename T>
std::vector<T> delta_op(std::vector<T> series, int k) {
    if (k < 1) {
        throw DomainError("delta_op: k must be positive");
    }
    if (static_cast<long>(series.size()) <= k) {
        throw CoverageError("delta_op: " + std::to_string(k) + "-fold difference needs more than " +
                            std::to_string(k) + " values");
    }
    for (int pass = 0; pass < k; ++pass) {
        for (std::size_t i = series.size() - 1; i > 0; --i) {
            series[i] = series[i] - series[i - 1];
        }
        series.erase(series.begin());
    }
    return series;
}

/// Log-convexity / log-concavity of the positive tail, read off the signs of L.
/// Finds the least N with L u_n of one sign on [N, horizon-2]; reports "mixed"
/// when no such N < horizon - 10 exists.
AnalysisReport classify_log_behavior(const SequenceValues& vals, long horizon);

enum class Direction { increasing, decreasing };

/// Exact check that u_{n+1}/u_n is strictly monotone for n in `range`
/// (uses terms up to range.last + 1). The report also records the least
/// index from which the property holds up to range.last.
AnalysisReport monotone_ratio_certify(const SequenceValues& vals, Direction direction, IndexRange range);

enum class NthRootMode {
    exact,          ///< integer comparison for every n
    certified_log,  ///< directed-rounding logs, escalating precision, exact fallback
    automatic,      ///< exact for n <= kExactNthRootLimit, certified_log above
};

inline constexpr long kExactNthRootLimit = 120;

/// Strict decrease of n -> u_{n+1}^{1/(n+1)} / u_n^{1/n} on `range`, i.e.
/// u_{n+1}^{n(n-1)} u_{n-1}^{n(n+1)} < u_n^{2(n^2-1)} for every n in range.
/// Requires range.first >= 2 and u_m > 0 for m in [range.first - 1, range.last + 1];
/// a nonpositive term raises DomainError naming its index.
AnalysisReport nth_root_ratio_certify(const SequenceValues& vals, IndexRange range,
                                      NthRootMode mode = NthRootMode::automatic);

/// Single exact comparison behind nth_root_ratio_certify at index n.
bool nth_root_step_exact(const Rational& prev, const Rational& cur, const Rational& next, long n);

struct RootRatioSample {
    long n;
    HPFloat ratio;     ///< u_{n+1}^{1/(n+1)} / u_n^{1/n}
    HPFloat distance;  ///< ratio - 1
};

/// Root-ratio values and their distance to 1 on `range`.
std::vector<RootRatioSample> nth_root_limit_probe(const SequenceValues& vals, IndexRange range,
                                                  long precision = kDefaultPrecision);

/// Fitted leading term of R^2 v_n = 1 + c / n^alpha + ... .
struct PuiseuxFit {
    HPFloat c;
    HPFloat alpha;
    HPFloat beta;      ///< expansion horizon; alpha + 1 unless supplied
    IndexRange window; ///< indices n of the R^2 values used
    HPFloat residual;  ///< max relative deviation of the fitted curve
    bool beta_supplied = false;
};

/// Default fit window over R^2 indices [first, last]: the last 75% of them,
/// at least 32 points (or all when fewer are available).
IndexRange default_fit_window(IndexRange available);

/// Least-squares line through (ln(n+1), ln|R^2 u_n - 1|) on `window`; the
/// abscissa is the centre of the three-term stencil u_n, u_{n+1}, u_{n+2}.
/// slope -> -alpha, intercept -> ln|c|, sign of c from the data.
/// Throws PreconditionError if R^2 - 1 changes sign (or vanishes) on the window.
PuiseuxFit puiseux_fit(const SequenceValues& ratio2, std::optional<IndexRange> window = std::nullopt,
                       std::optional<HPFloat> beta = std::nullopt, long precision = kDefaultPrecision);

enum class LogFlavor { convex, concave };
std::string to_string(LogFlavor f);

struct ROrder {
    long r;
    LogFlavor flavor;
    friend bool operator==(const ROrder&, const ROrder&) = default;
};

/// Raised when the parameters fall outside the cases covered by the criterion.
class OutOfScopeError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Order r of asymptotic r-log-convexity/concavity for R^2 v_n = 1 + c/n^alpha + ... + o(n^-beta):
///   c > 0, alpha < 2:  r = floor(beta/alpha), convex
///   c > 0, alpha >= 2: r = floor((beta - alpha)/2) + 1, convex
///   c < 0, alpha < 2:  r = floor(beta/alpha), concave
ROrder r_order(const PuiseuxFit& fit);
ROrder r_order(double c, double alpha, double beta);

}  // namespace holonomic
