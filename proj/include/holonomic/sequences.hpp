#pragma once

#include "holonomic/exact.hpp"
#include "holonomic/p_recurrence.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace holonomic {

/// A contiguous run of exact sequence terms u_offset, u_offset+1, ...
struct SequenceValues {
    std::string name;
    long offset = 0;
    std::vector<Rational> values;

    bool empty() const { return values.empty(); }
    long size() const { return static_cast<long>(values.size()); }
    long first_index() const { return offset; }
    /// Index of the last stored term (offset - 1 when empty).
    long last_index() const { return offset + size() - 1; }
    bool covers(long from, long to) const { return from >= offset && to <= last_index(); }
    /// Term u_n. Throws CoverageError outside the stored range.
    const Rational& at(long n) const;
    /// Copy restricted to [from, to].
    SequenceValues slice(long from, long to) const;
};

/// The named sequences with their natural offsets.
enum class SequenceId { a, b, apery, s };
long natural_offset(SequenceId id);
std::string sequence_name(SequenceId id);
SequenceId parse_sequence_id(const std::string& name);

enum class AForm { primary, dual };

/// a_n = (1/n) sum_{k=0}^{n-1} C(n-1,k)^2 C(n+k,k)^2 / (4k^2 - 1).
/// The dual form uses C(-n-1,k)^2 in place of C(n+k,k)^2.
Rational a_direct(long n, AForm form = AForm::primary);
/// a_n = (1/n^3) sum_{k=1}^{n} k^4 C(n,k)^2 C(n+k,k)^2 / ((4(k-1)^2 - 1)(n+k)^2).
Rational a_transformed(long n);
/// b_n = (1/n^3) sum_{k=0}^{n-1} (3k^2+3k+1) C(n-1,k)^2 C(n+k,k)^2.
Rational b_direct(long n);
/// Apery numbers A_n = sum_{k=0}^{n} C(n,k)^2 C(n+k,k)^2.
Integer apery(long n);
/// S_n = sum_{k=0}^{n-1} C(n-1,k)^2 C(n+k,k)^2.
Integer s_sum(long n);

/// Terms [from, to] of a named sequence by direct summation. Results are
/// memoized process-wide; the cache is safe for concurrent callers.
SequenceValues sequence_table(SequenceId id, long from, long to);
void clear_sequence_cache();

/// Raised when the leading coefficient p_d vanishes at an index the
/// recurrence needs.
class SingularityError : public std::domain_error {
public:
    SingularityError(long index, const std::string& what)
        : std::domain_error(what), index_(index) {}
    long index() const { return index_; }

private:
    long index_;
};

/// Appends `count` terms using u_{n+d} = -(sum_{i<d} p_i(n) u_{n+i}) / p_d(n).
/// Terms are exact rationals; integrality is never assumed.
SequenceValues extend_by_recurrence(const PRecurrence& rec, const SequenceValues& seed, long count);

/// One term per line: "index<TAB>numerator[/denominator]".
void write_sequence(std::ostream& out, const SequenceValues& values);
/// Reads the format written by write_sequence. Blank lines and lines starting
/// with '#' are skipped; indices must be contiguous.
SequenceValues read_sequence(std::istream& in, const std::string& name = "file");
SequenceValues read_sequence_file(const std::string& path);
void write_sequence_file(const std::string& path, const SequenceValues& values);

}  // namespace holonomic
