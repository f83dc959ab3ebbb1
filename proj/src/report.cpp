#include "holonomic/report.hpp"

#include <charconv>

namespace holonomic {

namespace {

long parse_long(std::string_view s, const std::string& whole) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw DomainError("malformed range '" + whole + "' (expected FIRST..LAST)");
    }
    return v;
}

}  // namespace

IndexRange parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw DomainError("malformed range '" + text + "' (expected FIRST..LAST)");
    }
    std::string_view sv(text);
    IndexRange r{parse_long(sv.substr(0, dots), text), parse_long(sv.substr(dots + 2), text)};
    if (r.last < r.first) {
        throw DomainError("empty range '" + text + "'");
    }
    return r;
}

std::string to_string(const IndexRange& r) {
    return std::to_string(r.first) + ".." + std::to_string(r.last);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::first_violation: return "first-violation";
        case Verdict::threshold: return "threshold";
        case Verdict::mixed: return "mixed";
    }
    return "?";
}

AnalysisReport AnalysisReport::pass(std::string sequence, std::string property, IndexRange range) {
    AnalysisReport r;
    r.sequence = std::move(sequence);
    r.property = std::move(property);
    r.verdict = Verdict::holds;
    r.range = range;
    return r;
}

AnalysisReport AnalysisReport::violation(std::string sequence, std::string property, IndexRange range,
                                         long index, const Rational& witness) {
    AnalysisReport r;
    r.sequence = std::move(sequence);
    r.property = std::move(property);
    r.verdict = Verdict::first_violation;
    r.range = range;
    r.index = index;
    r.witness = to_string(witness);
    return r;
}

nlohmann::ordered_json AnalysisReport::to_json() const {
    nlohmann::ordered_json j;
    j["subject"] = subject();
    j["verdict"] = to_string(verdict);
    j["range"] = {range.first, range.last};
    j["index"] = index ? nlohmann::ordered_json(*index) : nlohmann::ordered_json(nullptr);
    j["witness"] = witness ? nlohmann::ordered_json(*witness) : nlohmann::ordered_json(nullptr);
    j["notes"] = notes;
    if (!details.empty()) {
        j["details"] = details;
    }
    return j;
}

}  // namespace holonomic
