#include "holonomic/asymptotics.hpp"
#include "holonomic/cli.hpp"
#include "holonomic/log_behavior.hpp"
#include "holonomic/recurrence.hpp"
#include "holonomic/sequences.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace pybind11::literals;
using namespace holonomic;

namespace {

// Rationals cross the boundary as int or fractions.Fraction.
py::object to_python(const Rational& q) {
    py::object as_int = py::module_::import("builtins").attr("int");
    if (q.get_den() == 1) {
        return as_int(q.get_num().get_str());
    }
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(as_int(q.get_num().get_str()), as_int(q.get_den().get_str()));
}

Rational from_python(const py::handle& obj) {
    return parse_rational(py::str(obj).cast<std::string>());
}

py::list to_list(const SequenceValues& v) {
    py::list out;
    for (const auto& x : v.values) out.append(to_python(x));
    return out;
}

SequenceValues from_list(const py::sequence& values, long offset) {
    SequenceValues v;
    v.name = "values";
    v.offset = offset;
    for (const auto& x : values) v.values.push_back(from_python(x));
    return v;
}

// Reports and other structured results are returned as plain dicts.
py::object to_dict(const nlohmann::ordered_json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

Direction parse_direction(const std::string& s) {
    if (s == "increasing") return Direction::increasing;
    if (s == "decreasing") return Direction::decreasing;
    throw py::value_error("direction must be 'increasing' or 'decreasing'");
}

NthRootMode parse_mode(const std::string& s) {
    if (s == "exact") return NthRootMode::exact;
    if (s == "log") return NthRootMode::certified_log;
    if (s == "auto") return NthRootMode::automatic;
    throw py::value_error("mode must be 'exact', 'log' or 'auto'");
}

PRecurrence builtin_recurrence(const std::string& name) {
    if (name == "a") return a_recurrence();
    if (name == "b") return b_recurrence();
    throw py::value_error("built-in recurrences exist for 'a' and 'b' only");
}

}  // namespace

PYBIND11_MODULE(_holonomic, m) {
    m.doc() = "Exact analysis of P-recursive sequences";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CoverageError>(m, "CoverageError", PyExc_IndexError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    m.def(
        "sequence",
        [](const std::string& name, long first, long last) {
            return to_list(sequence_table(parse_sequence_id(name), first, last));
        },
        "name"_a, "first"_a, "last"_a, "Terms first..last of 'a', 'b', 'apery' or 's'.");
    m.def("natural_offset", [](const std::string& name) { return natural_offset(parse_sequence_id(name)); }, "name"_a);
    m.def("binomial", [](long n, long k) { return to_python(Rational(binomial(n, k))); }, "n"_a, "k"_a);

    m.def("recurrence", [](const std::string& name) { return builtin_recurrence(name).serialize(); }, "name"_a,
          "Serialized built-in recurrence for 'a' or 'b'.");
    m.def(
        "verify_recurrence",
        [](const std::string& text, const py::sequence& values, long offset, long first, long last) {
            return to_dict(verify_recurrence(PRecurrence::parse(text), from_list(values, offset), {first, last}).to_json());
        },
        "recurrence"_a, "values"_a, "offset"_a, "first"_a, "last"_a);
    m.def(
        "guess_recurrence",
        [](const py::sequence& values, long offset, int max_order, int max_degree) -> py::object {
            auto rec = guess_recurrence(from_list(values, offset), max_order, max_degree);
            if (!rec) return py::none();
            return py::str(rec->serialize());
        },
        "values"_a, "offset"_a, "max_order"_a = 3, "max_degree"_a = 5);
    m.def(
        "characteristic_poly",
        [](const std::string& text) {
            const IntPolynomial poly = characteristic_poly(PRecurrence::parse(text));
            std::vector<std::string> out;
            for (const auto& c : poly.coefficients()) out.push_back(c.get_str());
            return out;
        },
        "recurrence"_a, "Ascending integer coefficients as decimal strings.");
    m.def(
        "roots",
        [](const std::vector<long long>& coeffs, long precision) {
            std::vector<Integer> cs;
            for (long long c : coeffs) cs.emplace_back(static_cast<long>(c));
            CharPolyResult res = roots_real(IntPolynomial(std::move(cs)), precision);
            py::list out;
            for (std::size_t i = 0; i < res.roots.size(); ++i) {
                const auto& r = res.roots[i];
                out.append(py::dict("value"_a = r.value.to_double(), "decimal"_a = r.value.to_string(40),
                                    "kind"_a = to_string(r.kind), "exact"_a = r.exact, "dominant"_a = i == res.dominant));
            }
            return out;
        },
        "coeffs"_a, "precision"_a = kDefaultPrecision, "Real roots of an ascending-coefficient integer polynomial.");

    m.def(
        "classify_log_behavior",
        [](const py::sequence& values, long offset, long horizon) {
            return to_dict(classify_log_behavior(from_list(values, offset), horizon).to_json());
        },
        "values"_a, "offset"_a, "horizon"_a);
    m.def(
        "certify_ratio",
        [](const py::sequence& values, long offset, long first, long last, const std::string& direction) {
            return to_dict(
                monotone_ratio_certify(from_list(values, offset), parse_direction(direction), {first, last}).to_json());
        },
        "values"_a, "offset"_a, "first"_a, "last"_a, "direction"_a = "increasing");
    m.def(
        "certify_nth_root",
        [](const py::sequence& values, long offset, long first, long last, const std::string& mode) {
            SequenceValues v = from_list(values, offset);
            const NthRootMode m = parse_mode(mode);
            nlohmann::ordered_json report;
            {
                py::gil_scoped_release release;
                report = nth_root_ratio_certify(v, {first, last}, m).to_json();
            }
            return to_dict(report);
        },
        "values"_a, "offset"_a, "first"_a, "last"_a, "mode"_a = "auto");
    m.def(
        "root_ratio_distances",
        [](const py::sequence& values, long offset, long first, long last) {
            std::vector<std::pair<long, double>> out;
            for (const auto& s : nth_root_limit_probe(from_list(values, offset), {first, last}, kDefaultPrecision)) {
                out.emplace_back(s.n, s.distance.to_double());
            }
            return out;
        },
        "values"_a, "offset"_a, "first"_a, "last"_a, "Pairs (n, u(n+1)^(1/(n+1))/u(n)^(1/n) - 1).");
    m.def(
        "puiseux_fit",
        [](const py::sequence& values, long offset, std::optional<std::pair<long, long>> window) {
            SequenceValues r2 = ratio2_seq(from_list(values, offset));
            std::optional<IndexRange> w;
            if (window) w = IndexRange{window->first, window->second};
            PuiseuxFit fit = puiseux_fit(r2, w, std::nullopt, kDefaultPrecision);
            py::dict out("c"_a = fit.c.to_double(), "alpha"_a = fit.alpha.to_double(), "beta"_a = fit.beta.to_double(),
                         "window"_a = std::make_pair(fit.window.first, fit.window.last),
                         "residual"_a = fit.residual.to_double());
            try {
                ROrder r = r_order(fit);
                out["r"] = r.r;
                out["flavor"] = to_string(r.flavor);
            } catch (const DomainError&) {
                out["r"] = py::none();
                out["flavor"] = py::none();
            }
            return out;
        },
        "values"_a, "offset"_a, "window"_a = py::none(),
        "Fit u(n+1)^2/(u(n) u(n+2)) = 1 + c/n^alpha on the given window.");
    m.def(
        "r_order", [](double c, double alpha, double beta) { return r_order(c, alpha, beta).r; }, "c"_a, "alpha"_a,
        "beta"_a);

    m.def(
        "audit_bounds",
        [](const std::string& name, long first, long last) {
            if (name == "a") return to_dict(a_bounds_audit({first, last}).to_json());
            if (name == "b") return to_dict(b_bounds_audit({first, last}).to_json());
            throw py::value_error("bound audits exist for 'a' and 'b' only");
        },
        "name"_a, "first"_a, "last"_a);
    m.def(
        "apery_relative_error",
        [](long n, const std::string& order) {
            if (order != "main" && order != "corrected") throw py::value_error("order must be 'main' or 'corrected'");
            auto o = order == "main" ? AsymptoticOrder::main : AsymptoticOrder::corrected;
            return apery_asymptotic(n, o, kDefaultPrecision).relative_error().to_double();
        },
        "n"_a, "order"_a = "corrected");

    m.def(
        "cli",
        [](const std::vector<std::string>& args) {
            std::vector<const char*> argv{"holoseq"};
            for (const auto& a : args) argv.push_back(a.c_str());
            std::ostringstream out;
            std::ostringstream err;
            int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        "args"_a, "Run a holoseq command line; returns (exit_code, stdout, stderr).");
}
