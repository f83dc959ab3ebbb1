#pragma once

#include "holonomic/exact.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace holonomic {

struct IndexRange {
    long first = 0;
    long last = -1;

    long length() const { return last - first + 1; }
    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Parses "a..b" (inclusive). Throws DomainError when malformed or empty.
IndexRange parse_range(const std::string& text);
std::string to_string(const IndexRange& r);

enum class Verdict {
    holds,            ///< property holds on the whole range
    first_violation,  ///< fails at `index`, `witness` is the exact offending value
    threshold,        ///< holds from `index` on, fails somewhere before it
    mixed,            ///< no stable tail found
};

std::string to_string(Verdict v);

/// Outcome of one certification or audit. A first_violation verdict always
/// carries an exact witness string that can be re-checked independently.
struct AnalysisReport {
    std::string sequence;
    std::string property;
    Verdict verdict = Verdict::holds;
    IndexRange range;
    std::optional<long> index;
    std::optional<std::string> witness;
    std::vector<std::string> notes;
    /// Operation-specific structured data (violation lists, fitted values, ...).
    nlohmann::ordered_json details = nlohmann::ordered_json::object();

    std::string subject() const { return sequence + ": " + property; }
    bool holds() const { return verdict == Verdict::holds; }

    static AnalysisReport pass(std::string sequence, std::string property, IndexRange range);
    static AnalysisReport violation(std::string sequence, std::string property, IndexRange range,
                                    long index, const Rational& witness);

    nlohmann::ordered_json to_json() const;
};

}  // namespace holonomic
