#include "holonomic/cli.hpp"
#include "holonomic/sequences.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace holonomic;
using json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::vector<const char*> argv{"holoseq"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: eval in all formats") {
    auto text = run({"eval", "--seq", "a", "--range", "1..4"});
    CHECK(text.code == cli::kExitOk);
    CHECK(text.out.find("1\t-1\n2\t1\n3\t9\n4\t61\n") != std::string::npos);
    CHECK(text.out.rfind("# config: ", 0) == 0);

    auto csv = run({"eval", "--seq", "s", "--range", "1..3", "--format", "csv"});
    CHECK(csv.out.find("n,value\n1,1\n2,10\n3,165\n") != std::string::npos);

    auto js = run({"eval", "--seq", "b", "--range", "1..3", "--format", "json"});
    const json doc = json::parse(js.out);
    CHECK(doc.at("schema") == 1);
    CHECK(doc.at("config").at("range") == json::array({1, 3}));
    CHECK(doc.at("terms").at(2).at("value") == "87");
}

TEST_CASE("cli: exit codes") {
    CHECK(run({"certify-ratio", "--seq", "a", "--range", "2..50"}).code == cli::kExitViolation);
    CHECK(run({"certify-ratio", "--seq", "a", "--range", "3..50"}).code == cli::kExitOk);
    CHECK(run({"eval", "--seq", "zeta"}).code == cli::kExitUsage);
    CHECK(run({"eval", "--range", "9..1"}).code == cli::kExitUsage);
    CHECK(run({"nonsense"}).code == cli::kExitUsage);
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"char-poly", "--seq", "apery"}).code == cli::kExitUsage);
    CHECK(run({"classify", "--seq", "b", "--format", "csv"}).code == cli::kExitUsage);
    CHECK(run({"audit-bounds", "--seq", "a", "--range", "1..50"}).code == cli::kExitOk);
    CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("cli: recurrence subcommands") {
    auto v = run({"verify-rec", "--seq", "b", "--range", "1..100"});
    CHECK(v.code == 0);
    CHECK(v.out.find("holds") != std::string::npos);
    auto g = run({"guess-rec", "--seq", "a", "--range", "1..80", "--format", "json"});
    CHECK(json::parse(g.out).at("proportional_to_builtin") == true);
    auto r = run({"roots", "--poly", "-2,0,1"});
    CHECK(r.out.find("sqrt(2)") != std::string::npos);
    auto l = run({"ratio-limit", "--seq", "b", "--range", "1..100", "--format", "json"});
    CHECK(json::parse(l.out).at("ratio_limit").at("exact") == "17 + 12*sqrt(2)");
}

TEST_CASE("cli: sequence files and recurrence files") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto seq = (dir / "holonomic_cli_seq.txt").string();
    const auto rec = (dir / "holonomic_cli_rec.txt").string();
    write_sequence_file(seq, sequence_table(SequenceId::b, 1, 60));
    {
        auto out = run({"eval", "--seq", "b", "--range", "1..3", "--output", rec});
        CHECK(out.code == 0);
        CHECK(out.out.empty());
        std::ifstream written(rec);
        std::stringstream content;
        content << written.rdbuf();
        CHECK(content.str().find("1\t1\n2\t8\n3\t87\n") != std::string::npos);
    }
    auto from_file = run({"certify-ratio", "--seq", "file", "--file", seq, "--range", "1..50"});
    CHECK(from_file.code == 0);
    auto beyond = run({"certify-ratio", "--seq", "file", "--file", seq, "--range", "1..60"});
    CHECK(beyond.code == cli::kExitUsage);
    auto missing = run({"eval", "--seq", "file"});
    CHECK(missing.code == cli::kExitUsage);

    auto guessed = run({"guess-rec", "--seq", "file", "--file", seq, "--range", "1..60", "--max-degree", "9"});
    REQUIRE(guessed.code == 0);
    {
        std::ofstream f(rec);
        f << guessed.out;  // comment lines are accepted by the parser
    }
    auto verified = run({"verify-rec", "--seq", "b", "--rec", rec, "--range", "1..200"});
    CHECK(verified.code == 0);
    std::filesystem::remove(seq);
    std::filesystem::remove(rec);
}

TEST_CASE("cli: analysis subcommands") {
    auto fit = run({"fit-puiseux", "--seq", "a", "--range", "1..400", "--window", "100..400", "--format", "json"});
    REQUIRE(fit.code == 0);
    const json f = json::parse(fit.out);
    CHECK(f.at("fit").at("r") == 1);
    CHECK(std::abs(std::stod(f.at("fit").at("c").get<std::string>()) - 4.664058008) < 1e-8);
    auto beta = run({"fit-puiseux", "--seq", "b", "--range", "1..200", "--beta", "5", "--format", "json"});
    CHECK(json::parse(beta.out).at("config").at("beta") == 5.0);
    CHECK(json::parse(beta.out).at("fit").at("beta_supplied") == true);
    auto decay = run({"fit-decay", "--seq", "b", "--range", "100..400", "--window", "100..400", "--format", "csv"});
    CHECK(decay.out.find("2.50165") != std::string::npos);
    auto nth = run({"certify-nth-root", "--seq", "b", "--range", "1..80", "--mode", "log", "--format", "json"});
    const json n = json::parse(nth.out);
    CHECK(n.at("report").at("range") == json::array({3, 80}));
    CHECK(n.at("report").at("verdict") == "holds");
    auto cls = run({"classify", "--seq", "a", "--range", "1..100"});
    CHECK(cls.out.find("threshold at n=3") != std::string::npos);
    auto asym = run({"audit-apery-asym", "--range", "1..30", "--order", "main", "--format", "json"});
    CHECK(json::parse(asym.out).at("relative_error_decreasing") == true);
    CHECK(run({"audit-apery-asym", "--order", "third"}).code == cli::kExitUsage);
}

TEST_CASE("cli: report-all is deterministic") {
    auto first = run({"report-all", "--range", "1..80", "--format", "json"});
    clear_sequence_cache();
    auto second = run({"report-all", "--range", "1..80", "--format", "json"});
    CHECK(first.out == second.out);
    CHECK(first.code == cli::kExitViolation);  // a's ratio fails at n = 2
    const json doc = json::parse(first.out);
    CHECK(doc.at("sequences").at("a").at("ratio_limit").at("exact") == "17 + 12*sqrt(2)");
    CHECK(doc.at("all_certifications_hold") == false);
    CHECK(run({"report-all", "--range", "1..30"}).code == cli::kExitUsage);
}
