#pragma once

#include "holonomic/report.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace holonomic::cli {

enum class OutputFormat { text, json, csv };

/// Fully resolved settings for one run; echoed into every report header.
struct RunConfig {
    std::string subcommand;
    std::string sequence = "a";  ///< a | b | apery | s | file
    std::string file;            ///< sequence file when sequence == "file"
    IndexRange range{1, 200};
    long precision = 256;
    OutputFormat format = OutputFormat::text;
    std::string output;          ///< empty: standard output
    std::optional<IndexRange> window;
    std::optional<double> beta;
    std::string recurrence_file;
    std::string poly;            ///< comma-separated ascending coefficients
    int max_order = 3;
    int max_degree = 5;
    std::string direction = "increasing";
    std::string mode = "auto";   ///< exact | log | auto
    std::string order = "corrected";

    nlohmann::ordered_json to_json() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

const std::vector<std::string>& subcommands();

/// Executes one subcommand, writing the report to `out` (or config.output).
/// Returns kExitOk, kExitViolation when a certification fails on the data,
/// or kExitUsage for usage and domain errors (message on `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and calls run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace holonomic::cli
