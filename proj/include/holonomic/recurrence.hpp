#pragma once

#include "holonomic/hp_float.hpp"
#include "holonomic/int_polynomial.hpp"
#include "holonomic/p_recurrence.hpp"
#include "holonomic/report.hpp"
#include "holonomic/sequences.hpp"

#include <optional>
#include <string>
#include <vector>

namespace holonomic {

/// Checks sum_i p_i(n) u_{n+i} == 0 exactly for every n in `range`.
/// Needs values on [range.first, range.last + order]; throws CoverageError otherwise.
/// On failure the report carries the first n and its (nonzero) residue.
AnalysisReport verify_recurrence(const PRecurrence& rec, const SequenceValues& vals, IndexRange range);

/// Terms withheld from the linear system and used only to confirm a candidate.
inline constexpr long kGuessMargin = 10;

/// Smallest (order, then degree) recurrence annihilating all of `vals`,
/// via an exact integer nullspace. Returns nullopt when nothing exists within
/// the bounds. Throws CoverageError when vals is shorter than
/// (max_order+1)(max_degree+1) + max_order + kGuessMargin.
std::optional<PRecurrence> guess_recurrence(const SequenceValues& vals, int max_order, int max_degree);

/// sum_i [n^D] p_i * x^i with D the largest degree among the p_i, made
/// primitive with positive leading coefficient.
IntPolynomial characteristic_poly(const PRecurrence& rec);

enum class RootKind { rational, quadratic_surd, numeric };
std::string to_string(RootKind k);

struct RealRoot {
    HPFloat value;
    RootKind kind = RootKind::numeric;
    /// Exact description: "p/q" or "(a ± b*sqrt(d))/c" simplified; empty for numeric roots.
    std::string exact;
    /// Irreducible factor over Z that vanishes at the root (degree 1 or 2),
    /// or the isolated factor for numeric roots.
    IntPolynomial factor;
};

struct CharPolyResult {
    IntPolynomial poly;
    std::vector<RealRoot> roots;  ///< ascending
    /// Index into roots of the root of largest modulus.
    std::size_t dominant = 0;
    /// Number of non-real roots (counted with the real ones, sums to degree).
    int complex_count = 0;
    /// Moduli of the non-real roots, double precision (for dominance checks).
    std::vector<double> complex_moduli;
};

/// All real roots of a squarefree integer polynomial at `precision` bits.
/// Throws PreconditionError (naming the repeated factor) for non-squarefree input.
CharPolyResult roots_real(const IntPolynomial& poly, long precision = kDefaultPrecision);

class AmbiguityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RatioLimit {
    HPFloat limit;          ///< dominant characteristic root
    std::string exact;      ///< exact form when available
    long tail_index = 0;    ///< N of the empirical ratio u_{N+1}/u_N
    HPFloat tail_ratio;
    HPFloat gap;            ///< |tail_ratio - limit|
    std::string note;
};

/// Dominant characteristic root as the candidate limit of u_{n+1}/u_n,
/// compared against the last empirical ratio in `vals`.
/// Throws AmbiguityError when two roots share the maximal modulus.
RatioLimit ratio_limit(const PRecurrence& rec, const SequenceValues& vals, long precision = kDefaultPrecision);

}  // namespace holonomic
