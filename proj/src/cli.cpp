#include "holonomic/cli.hpp"

#include "holonomic/asymptotics.hpp"
#include "holonomic/log_behavior.hpp"
#include "holonomic/recurrence.hpp"
#include "holonomic/sequences.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace holonomic::cli {

using json = nlohmann::ordered_json;

namespace {

std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::text: return "text";
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
    }
    return "?";
}

}  // namespace

json RunConfig::to_json() const {
    json j;
    j["subcommand"] = subcommand;
    const bool sequence_free =
        subcommand == "report-all" || subcommand == "audit-apery-asym" || (subcommand == "roots" && !poly.empty());
    if (!sequence_free) j["sequence"] = sequence;
    if (!file.empty()) j["file"] = file;
    j["range"] = {range.first, range.last};
    j["precision"] = precision;
    j["format"] = format_name(format);
    if (window) j["window"] = {window->first, window->last};
    if (beta) j["beta"] = *beta;
    if (!recurrence_file.empty()) j["recurrence_file"] = recurrence_file;
    if (!poly.empty()) j["poly"] = poly;
    if (subcommand == "guess-rec") {
        j["max_order"] = max_order;
        j["max_degree"] = max_degree;
    }
    if (subcommand == "certify-ratio") j["direction"] = direction;
    if (subcommand == "certify-nth-root") j["mode"] = mode;
    if (subcommand == "audit-apery-asym") j["order"] = order;
    return j;
}

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names{
        "eval",     "verify-rec",       "guess-rec",   "char-poly",  "roots",        "ratio-limit",      "classify",
        "certify-ratio", "certify-nth-root", "fit-puiseux", "fit-decay", "audit-bounds", "audit-apery-asym", "report-all",
    };
    return names;
}

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Output {
    json body = json::object();
    std::vector<std::string> text;
    std::vector<std::string> csv;  ///< empty: csv not available
    bool violation = false;
};

bool is_named(const std::string& s) { return s == "a" || s == "b" || s == "apery" || s == "s"; }

SequenceValues load_values(const RunConfig& c, long from, long to) {
    if (c.sequence == "file") {
        if (c.file.empty()) {
            throw UsageError("--seq file requires --file PATH");
        }
        SequenceValues v = read_sequence_file(c.file);
        v.name = c.file;
        return v.slice(std::max(from, v.first_index()), to);
    }
    if (!is_named(c.sequence)) {
        throw UsageError("unknown sequence '" + c.sequence + "' (expected a, b, apery, s or file)");
    }
    const SequenceId id = parse_sequence_id(c.sequence);
    return sequence_table(id, std::max(from, natural_offset(id)), to);
}

long sequence_start(const RunConfig& c) {
    if (c.sequence == "file") {
        if (c.file.empty()) {
            throw UsageError("--seq file requires --file PATH");
        }
        return read_sequence_file(c.file).first_index();
    }
    if (!is_named(c.sequence)) {
        throw UsageError("unknown sequence '" + c.sequence + "' (expected a, b, apery, s or file)");
    }
    return natural_offset(parse_sequence_id(c.sequence));
}

PRecurrence load_recurrence(const RunConfig& c) {
    if (!c.recurrence_file.empty()) {
        std::ifstream in(c.recurrence_file);
        if (!in) {
            throw UsageError("cannot read recurrence file '" + c.recurrence_file + "'");
        }
        std::stringstream buf;
        buf << in.rdbuf();
        return PRecurrence::parse(buf.str());
    }
    if (c.sequence == "a") return a_recurrence();
    if (c.sequence == "b") return b_recurrence();
    throw UsageError("no built-in recurrence for '" + c.sequence + "'; pass --rec FILE");
}

std::vector<std::string> report_lines(const AnalysisReport& r) {
    std::vector<std::string> lines;
    std::string head = r.subject() + " on " + to_string(r.range) + ": " + to_string(r.verdict);
    if (r.index) head += " at n=" + std::to_string(*r.index);
    lines.push_back(head);
    if (r.witness) {
        std::string w = *r.witness;
        if (w.size() > 200) w = w.substr(0, 200) + "... (" + std::to_string(w.size()) + " chars)";
        lines.push_back("  witness: " + w);
    }
    for (const auto& note : r.notes) lines.push_back("  note: " + note);
    for (const auto& [key, value] : r.details.items()) {
        lines.push_back("  " + key + ": " + value.dump());
    }
    return lines;
}

Output from_report(const AnalysisReport& r, bool certification) {
    Output o;
    o.body["report"] = r.to_json();
    o.text = report_lines(r);
    o.violation = certification && !r.holds();
    return o;
}

std::string decimal(const HPFloat& x, int digits = 30) { return x.to_string(digits); }

json root_json(const RealRoot& r) {
    json j;
    j["value"] = decimal(r.value);
    j["kind"] = to_string(r.kind);
    j["exact"] = r.exact.empty() ? json(nullptr) : json(r.exact);
    return j;
}

// --- subcommands ---------------------------------------------------------

Output cmd_eval(const RunConfig& c) {
    SequenceValues v = load_values(c, c.range.first, c.range.last);
    Output o;
    json terms = json::array();
    o.csv.push_back("n,value");
    for (long n = v.first_index(); n <= v.last_index(); ++n) {
        const std::string s = to_string(v.at(n));
        terms.push_back({{"n", n}, {"value", s}});
        o.text.push_back(std::to_string(n) + "\t" + s);
        o.csv.push_back(std::to_string(n) + "," + s);
    }
    o.body["terms"] = terms;
    return o;
}

Output cmd_verify_rec(const RunConfig& c) {
    PRecurrence rec = load_recurrence(c);
    const long first = std::max({c.range.first, rec.offset(), sequence_start(c)});
    SequenceValues v = load_values(c, first, c.range.last + rec.order());
    Output o = from_report(verify_recurrence(rec, v, {first, c.range.last}), true);
    o.body["recurrence"] = rec.serialize();
    return o;
}

Output cmd_guess_rec(const RunConfig& c) {
    SequenceValues v = load_values(c, c.range.first, c.range.last);
    auto rec = guess_recurrence(v, c.max_order, c.max_degree);
    Output o;
    if (!rec) {
        o.body["recurrence"] = nullptr;
        o.text.push_back("no recurrence with order <= " + std::to_string(c.max_order) + " and degree <= " +
                         std::to_string(c.max_degree));
        return o;
    }
    o.body["recurrence"] = rec->serialize();
    o.body["display"] = rec->to_string();
    o.body["order"] = rec->order();
    o.body["degree"] = rec->degree();
    if (c.sequence == "a" || c.sequence == "b") {
        const PRecurrence known = c.sequence == "a" ? a_recurrence() : b_recurrence();
        o.body["proportional_to_builtin"] = rec->proportional_to(known);
    }
    std::istringstream lines(rec->serialize());
    for (std::string line; std::getline(lines, line);) o.text.push_back(line);
    o.text.push_back("# " + rec->to_string());
    return o;
}

IntPolynomial poly_from_config(const RunConfig& c) {
    if (c.poly.empty()) {
        return characteristic_poly(load_recurrence(c));
    }
    std::vector<Integer> cs;
    std::stringstream ss(c.poly);
    for (std::string tok; std::getline(ss, tok, ',');) {
        Rational q = parse_rational(tok);
        if (!is_integer(q)) throw UsageError("--poly coefficients must be integers");
        cs.push_back(q.get_num());
    }
    return IntPolynomial(std::move(cs));
}

Output cmd_char_poly(const RunConfig& c) {
    IntPolynomial p = characteristic_poly(load_recurrence(c));
    Output o;
    o.body["poly"] = p.to_string();
    json coeffs = json::array();
    for (const auto& x : p.coefficients()) coeffs.push_back(x.get_str());
    o.body["coefficients"] = coeffs;
    o.text.push_back(p.to_string());
    return o;
}

Output cmd_roots(const RunConfig& c) {
    CharPolyResult res = roots_real(poly_from_config(c), c.precision);
    Output o;
    o.body["poly"] = res.poly.to_string();
    json roots = json::array();
    o.text.push_back("poly: " + res.poly.to_string());
    o.csv.push_back("value,kind,exact,dominant");
    for (std::size_t i = 0; i < res.roots.size(); ++i) {
        const auto& r = res.roots[i];
        json j = root_json(r);
        j["dominant"] = i == res.dominant;
        roots.push_back(j);
        o.text.push_back(decimal(r.value) + "  " + to_string(r.kind) + (r.exact.empty() ? "" : "  " + r.exact) +
                         (i == res.dominant ? "  (dominant)" : ""));
        o.csv.push_back(decimal(r.value) + "," + to_string(r.kind) + "," + r.exact + "," + (i == res.dominant ? "1" : "0"));
    }
    o.body["roots"] = roots;
    o.body["complex_count"] = res.complex_count;
    return o;
}

json ratio_limit_json(const RatioLimit& lim) {
    json j;
    j["limit"] = decimal(lim.limit);
    j["exact"] = lim.exact.empty() ? json(nullptr) : json(lim.exact);
    j["tail_index"] = lim.tail_index;
    j["tail_ratio"] = decimal(lim.tail_ratio);
    j["gap"] = lim.gap.to_string(12);
    j["note"] = lim.note;
    return j;
}

Output cmd_ratio_limit(const RunConfig& c) {
    PRecurrence rec = load_recurrence(c);
    SequenceValues v = load_values(c, c.range.first, c.range.last);
    RatioLimit lim = ratio_limit(rec, v, c.precision);
    Output o;
    o.body["ratio_limit"] = ratio_limit_json(lim);
    o.text.push_back("limit: " + (lim.exact.empty() ? std::string() : lim.exact + " ~ ") + decimal(lim.limit));
    o.text.push_back("u(" + std::to_string(lim.tail_index + 1) + ")/u(" + std::to_string(lim.tail_index) +
                     ") = " + decimal(lim.tail_ratio) + ", gap " + lim.gap.to_string(12));
    o.text.push_back("note: " + lim.note);
    return o;
}

Output cmd_classify(const RunConfig& c) {
    SequenceValues v = load_values(c, sequence_start(c), c.range.last);
    AnalysisReport r = classify_log_behavior(v, c.range.last);
    return from_report(r, r.verdict == Verdict::mixed);
}

Direction parse_direction(const std::string& s) {
    if (s == "increasing") return Direction::increasing;
    if (s == "decreasing") return Direction::decreasing;
    throw UsageError("--direction must be increasing or decreasing");
}

NthRootMode parse_mode(const std::string& s) {
    if (s == "exact") return NthRootMode::exact;
    if (s == "log") return NthRootMode::certified_log;
    if (s == "auto") return NthRootMode::automatic;
    throw UsageError("--mode must be exact, log or auto");
}

Output cmd_certify_ratio(const RunConfig& c) {
    const long first = std::max(c.range.first, sequence_start(c));
    SequenceValues v = load_values(c, first, c.range.last + 1);
    return from_report(monotone_ratio_certify(v, parse_direction(c.direction), {first, c.range.last}), true);
}

Output cmd_certify_nth_root(const RunConfig& c) {
    const long first = std::max({c.range.first, sequence_start(c) + 2, 2L});
    SequenceValues v = load_values(c, first - 1, c.range.last + 1);
    return from_report(nth_root_ratio_certify(v, {first, c.range.last}, parse_mode(c.mode)), true);
}

json fit_json(const PuiseuxFit& fit) {
    json j;
    j["c"] = fit.c.to_string(12);
    j["alpha"] = fit.alpha.to_string(12);
    j["beta"] = fit.beta.to_string(12);
    j["beta_supplied"] = fit.beta_supplied;
    j["window"] = {fit.window.first, fit.window.last};
    j["residual"] = fit.residual.to_string(6);
    try {
        ROrder r = r_order(fit);
        j["r"] = r.r;
        j["flavor"] = to_string(r.flavor);
    } catch (const DomainError& e) {
        j["r"] = nullptr;
        j["flavor"] = e.what();
    }
    return j;
}

Output cmd_fit_puiseux(const RunConfig& c) {
    const long first = std::max(c.range.first, sequence_start(c));
    SequenceValues v = load_values(c, first, c.range.last + 2);
    SequenceValues r2 = ratio2_seq(v).slice(first, c.range.last);
    std::optional<HPFloat> beta;
    if (c.beta) beta = HPFloat(*c.beta, c.precision);
    PuiseuxFit fit = puiseux_fit(r2, c.window, beta, c.precision);
    Output o;
    o.body["fit"] = fit_json(fit);
    o.text.push_back("R^2 u(n) = 1 + c/n^alpha + ...: c = " + fit.c.to_string(12) + ", alpha = " + fit.alpha.to_string(12));
    o.text.push_back("window " + to_string(fit.window) + ", beta = " + fit.beta.to_string(12) + ", max relative residual " +
                     fit.residual.to_string(6));
    const json& fj = o.body["fit"];
    o.text.push_back("r-order: " + (fj["r"].is_null() ? std::string("n/a") : std::to_string(fj["r"].get<long>())) + " (" +
                     fj["flavor"].get<std::string>() + ")");
    o.csv.push_back("n,r2_minus_1,fitted");
    for (long n = fit.window.first; n <= fit.window.last; ++n) {
        HPFloat d(Rational(r2.at(n) - 1), c.precision);
        HPFloat fitted = fit.c / pow(HPFloat(n + 1, c.precision), fit.alpha);
        o.csv.push_back(std::to_string(n) + "," + d.to_string(15) + "," + fitted.to_string(15));
    }
    return o;
}

Output cmd_fit_decay(const RunConfig& c) {
    const long first = std::max(c.range.first, std::max(sequence_start(c), 1L));
    SequenceValues v = load_values(c, first, c.range.last);
    IndexRange window = c.window ? *c.window : default_fit_window({first, c.range.last});
    HPFloat growth = apery_growth(c.precision);
    DecayFit fit = decay_exponent_fit(v, growth, window, c.precision);
    Output o;
    o.body["decay"] = {{"exponent", fit.exponent.to_string(12)},
                       {"log_constant", fit.intercept.to_string(12)},
                       {"growth_base", decimal(growth)},
                       {"window", {window.first, window.last}},
                       {"residual", fit.residual.to_string(6)}};
    o.text.push_back("u(n) ~ K (17+12sqrt2)^n / n^t: t = " + fit.exponent.to_string(12) + ", ln K = " +
                     fit.intercept.to_string(12));
    o.text.push_back("window " + to_string(window) + ", max residual " + fit.residual.to_string(6));
    o.csv.push_back("exponent,log_constant,window_first,window_last,residual");
    o.csv.push_back(fit.exponent.to_string(15) + "," + fit.intercept.to_string(15) + "," + std::to_string(window.first) +
                    "," + std::to_string(window.last) + "," + fit.residual.to_string(6));
    return o;
}

Output cmd_audit_bounds(const RunConfig& c) {
    const IndexRange range{std::max(c.range.first, 1L), c.range.last};
    if (c.sequence == "a") return from_report(a_bounds_audit(range), false);
    if (c.sequence == "b") return from_report(b_bounds_audit(range), false);
    throw UsageError("audit-bounds supports --seq a or --seq b");
}

AsymptoticOrder parse_order(const std::string& s) {
    if (s == "main") return AsymptoticOrder::main;
    if (s == "corrected") return AsymptoticOrder::corrected;
    throw UsageError("--order must be main or corrected");
}

Output cmd_audit_apery_asym(const RunConfig& c) {
    const AsymptoticOrder order = parse_order(c.order);
    std::vector<AsymptoticEval> rows;
    for (long n = std::max(c.range.first, 1L); n <= c.range.last; ++n) {
        rows.push_back(apery_asymptotic(n, order, c.precision));
    }
    Output o;
    json arr = json::array();
    bool decreasing = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        arr.push_back({{"n", r.n}, {"formula", r.formula.to_string(20)}, {"relative_error", r.relative_error().to_string(12)}});
        if (i > 0 && !(r.relative_error() < rows[i - 1].relative_error())) decreasing = false;
    }
    o.body["order"] = c.order;
    o.body["rows"] = arr;
    o.body["relative_error_decreasing"] = decreasing;
    std::ostringstream csv_out;
    write_asymptotic_csv(csv_out, rows);
    std::istringstream csv(csv_out.str());
    for (std::string line; std::getline(csv, line);) o.csv.push_back(line);
    o.text.push_back("n\trelative_error");
    for (const auto& r : rows) o.text.push_back(std::to_string(r.n) + "\t" + r.relative_error().to_string(12));
    o.text.push_back(std::string("relative error strictly decreasing: ") + (decreasing ? "yes" : "no"));
    return o;
}

// Full reproduction for both sequences.
Output cmd_report_all(const RunConfig& c) {
    Output o;
    const long last = c.range.last;
    if (last < 60) {
        throw UsageError("report-all needs a range reaching at least n = 60");
    }
    json seqs = json::object();
    for (const char* name : {"a", "b"}) {
        RunConfig sc = c;
        sc.sequence = name;
        const SequenceId id = parse_sequence_id(name);
        const PRecurrence rec = id == SequenceId::a ? a_recurrence() : b_recurrence();
        SequenceValues v = sequence_table(id, 1, last + 3);
        json s;
        o.text.push_back("== " + std::string(name) + " ==");

        bool integral = true;
        for (const auto& x : v.values) integral = integral && is_integer(x);
        s["integral_on_range"] = integral;

        auto add = [&](const std::string& key, const AnalysisReport& r, bool certification) {
            s[key] = r.to_json();
            auto lines = report_lines(r);
            o.text.insert(o.text.end(), lines.begin(), lines.end());
            if (certification && !r.holds()) o.violation = true;
        };
        add("recurrence", verify_recurrence(rec, v, {1, last}), true);

        auto guessed = guess_recurrence(v.slice(1, 80), 3, id == SequenceId::a ? 5 : 9);
        s["guessed_recurrence_matches"] = guessed && guessed->proportional_to(rec);
        o.text.push_back(std::string("guessed recurrence proportional to built-in: ") +
                         (guessed && guessed->proportional_to(rec) ? "yes" : "no"));
        if (!(guessed && guessed->proportional_to(rec))) o.violation = true;

        IntPolynomial cp = characteristic_poly(rec);
        s["characteristic_poly"] = cp.to_string();
        o.text.push_back("characteristic polynomial: " + cp.to_string());
        CharPolyResult roots = roots_real(cp, c.precision);
        json rj = json::array();
        for (const auto& r : roots.roots) rj.push_back(root_json(r));
        s["roots"] = rj;
        RatioLimit lim = ratio_limit(rec, v.slice(1, last), c.precision);
        s["ratio_limit"] = ratio_limit_json(lim);
        o.text.push_back("ratio limit: " + lim.exact + " ~ " + decimal(lim.limit) + " (gap at n=" +
                         std::to_string(lim.tail_index) + ": " + lim.gap.to_string(8) + ")");

        add("log_behavior", classify_log_behavior(v.slice(1, last), last), false);
        const long positive_from = id == SequenceId::a ? 2 : 1;
        add("ratio_increasing", monotone_ratio_certify(v, Direction::increasing, {positive_from, last}), true);
        add("root_ratio_decreasing", nth_root_ratio_certify(v, {3, last}, NthRootMode::automatic), true);

        auto probe = nth_root_limit_probe(v, {last - 1, last}, c.precision);
        s["root_ratio_distance_to_1"] = {{"n", probe.back().n}, {"distance", probe.back().distance.to_string(12)}};
        o.text.push_back("root ratio minus 1 at n=" + std::to_string(probe.back().n) + ": " +
                         probe.back().distance.to_string(10));

        SequenceValues r2 = ratio2_seq(v).slice(1, last);
        PuiseuxFit fit = puiseux_fit(r2, std::nullopt, std::nullopt, c.precision);
        s["puiseux_fit"] = fit_json(fit);
        o.text.push_back("R^2 fit: c = " + fit.c.to_string(10) + ", alpha = " + fit.alpha.to_string(10) + " on " +
                         to_string(fit.window));
        IndexRange dwin = default_fit_window({1, last});
        DecayFit decay = decay_exponent_fit(v, apery_growth(c.precision), dwin, c.precision);
        s["decay_exponent"] = {{"t", decay.exponent.to_string(12)}, {"window", {dwin.first, dwin.last}}};
        o.text.push_back("decay exponent t = " + decay.exponent.to_string(10) + " on " + to_string(dwin));

        add("bounds", id == SequenceId::a ? a_bounds_audit({1, last}) : b_bounds_audit({1, last}), false);
        seqs[name] = s;
    }
    o.body["sequences"] = seqs;

    json asym = json::array();
    o.text.push_back("== Apery asymptotics (corrected) ==");
    for (long n : {50L, 100L, 200L}) {
        if (n > last) break;
        AsymptoticEval e = apery_asymptotic(n, AsymptoticOrder::corrected, c.precision);
        HPFloat scaled = e.relative_error() * HPFloat(n * n, c.precision);
        asym.push_back({{"n", n}, {"relative_error", e.relative_error().to_string(12)}, {"n2_error", scaled.to_string(8)}});
        o.text.push_back("n=" + std::to_string(n) + " relative error " + e.relative_error().to_string(8) + ", n^2*error " +
                         scaled.to_string(8));
    }
    o.body["apery_asymptotic"] = asym;
    o.body["all_certifications_hold"] = !o.violation;
    return o;
}

using Handler = std::function<Output(const RunConfig&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table{
        {"eval", cmd_eval},
        {"verify-rec", cmd_verify_rec},
        {"guess-rec", cmd_guess_rec},
        {"char-poly", cmd_char_poly},
        {"roots", cmd_roots},
        {"ratio-limit", cmd_ratio_limit},
        {"classify", cmd_classify},
        {"certify-ratio", cmd_certify_ratio},
        {"certify-nth-root", cmd_certify_nth_root},
        {"fit-puiseux", cmd_fit_puiseux},
        {"fit-decay", cmd_fit_decay},
        {"audit-bounds", cmd_audit_bounds},
        {"audit-apery-asym", cmd_audit_apery_asym},
        {"report-all", cmd_report_all},
    };
    return table;
}

void render(const RunConfig& c, const Output& o, std::ostream& out) {
    switch (c.format) {
        case OutputFormat::json: {
            json doc;
            doc["schema"] = 1;
            doc["config"] = c.to_json();
            for (const auto& [k, v] : o.body.items()) doc[k] = v;
            doc["exit_status"] = o.violation ? kExitViolation : kExitOk;
            out << doc.dump(2) << "\n";
            break;
        }
        case OutputFormat::csv:
            out << "# config: " << c.to_json().dump() << "\n";
            for (const auto& line : o.csv) out << line << "\n";
            break;
        case OutputFormat::text:
            out << "# config: " << c.to_json().dump() << "\n";
            for (const auto& line : o.text) out << line << "\n";
            break;
    }
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        auto it = handlers().find(config.subcommand);
        if (it == handlers().end()) {
            throw UsageError("unknown subcommand '" + config.subcommand + "'");
        }
        Output o = it->second(config);
        if (config.format == OutputFormat::csv && o.csv.empty()) {
            throw UsageError("csv output is not available for " + config.subcommand);
        }
        if (config.output.empty()) {
            render(config, o, out);
        } else {
            std::ofstream file(config.output);
            if (!file) throw UsageError("cannot write '" + config.output + "'");
            render(config, o, file);
        }
        return o.violation ? kExitViolation : kExitOk;
    } catch (const std::exception& e) {
        err << "holoseq " << config.subcommand << ": " << e.what() << "\n";
        return kExitUsage;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact analysis of P-recursive sequences", "holoseq"};
    app.require_subcommand(1, 1);
    RunConfig config;
    config.precision = default_precision();
    std::string range;
    std::string window;
    std::string format = "text";
    double beta = 0;
    CLI::Option* beta_option = nullptr;

    static const std::map<std::string, std::string> descriptions{
        {"eval", "print exact terms"},
        {"verify-rec", "check a recurrence with exact residues"},
        {"guess-rec", "find the smallest recurrence annihilating the terms"},
        {"char-poly", "characteristic polynomial of a recurrence"},
        {"roots", "real roots of an integer polynomial"},
        {"ratio-limit", "dominant root versus the empirical term ratio"},
        {"classify", "log-convexity / log-concavity from the signs of L"},
        {"certify-ratio", "exact monotonicity of u(n+1)/u(n)"},
        {"certify-nth-root", "strict decrease of u(n+1)^(1/(n+1)) / u(n)^(1/n)"},
        {"fit-puiseux", "fit R^2 u(n) = 1 + c/n^alpha and derive the r-order"},
        {"fit-decay", "fit t in u(n) ~ K (17+12sqrt2)^n / n^t"},
        {"audit-bounds", "check the sandwich bounds for a or b"},
        {"audit-apery-asym", "relative error of the Apery asymptotic expansion"},
        {"report-all", "full deterministic report for a and b"},
    };
    for (const auto& name : subcommands()) {
        CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
        sub->add_option("--seq", config.sequence, "a | b | apery | s | file");
        sub->add_option("--file", config.file, "sequence file (index<TAB>value per line)");
        sub->add_option("--range", range, "index range FIRST..LAST");
        sub->add_option("--precision", config.precision, "working precision in bits");
        sub->add_option("--format", format, "text | json | csv");
        sub->add_option("--output,-o", config.output, "write the report to this file");
        if (name == "fit-puiseux" || name == "fit-decay") {
            sub->add_option("--window", window, "fit window FIRST..LAST");
        }
        if (name == "fit-puiseux") {
            beta_option = sub->add_option("--beta", beta, "expansion horizon exponent (default alpha + 1)");
        }
        if (name == "verify-rec" || name == "char-poly" || name == "roots" || name == "ratio-limit") {
            sub->add_option("--rec", config.recurrence_file, "recurrence file");
        }
        if (name == "roots") {
            sub->add_option("--poly", config.poly, "ascending integer coefficients, comma separated");
        }
        if (name == "guess-rec") {
            sub->add_option("--max-order", config.max_order);
            sub->add_option("--max-degree", config.max_degree);
        }
        if (name == "certify-ratio") {
            sub->add_option("--direction", config.direction, "increasing | decreasing");
        }
        if (name == "certify-nth-root") {
            sub->add_option("--mode", config.mode, "exact | log | auto");
        }
        if (name == "audit-apery-asym") {
            sub->add_option("--order", config.order, "main | corrected");
        }
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "holoseq: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        config.subcommand = app.get_subcommands().front()->get_name();
        CLI::App* sub = app.get_subcommands().front();
        if (!range.empty()) config.range = parse_range(range);
        if (!window.empty()) config.window = parse_range(window);
        if (beta_option != nullptr && beta_option->count() > 0) config.beta = beta;
        if (format == "text") config.format = OutputFormat::text;
        else if (format == "json") config.format = OutputFormat::json;
        else if (format == "csv") config.format = OutputFormat::csv;
        else throw UsageError("--format must be text, json or csv");
    } catch (const std::exception& e) {
        err << "holoseq: " << e.what() << "\n";
        return kExitUsage;
    }
    return run(config, out, err);
}

}  // namespace holonomic::cli
