// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "holonomic/asymptotics.hpp"
#include "holonomic/cli.hpp"
#include "holonomic/log_behavior.hpp"
#include "holonomic/recurrence.hpp"
#include "holonomic/sequences.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace holonomic;

namespace {

struct Check {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

// Brute-force summation with GMP's own binomial, independent of the library.
Integer bin(long m, long k) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), Integer(m).get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Rational oracle_a(long n) {
    Rational s = 0;
    for (long k = 0; k < n; ++k) {
        Integer w = bin(n - 1, k) * bin(n + k, k);
        Rational term(w * w, 4 * k * k - 1);
        term.canonicalize();
        s += term;
    }
    return s / n;
}

Rational oracle_b(long n) {
    Rational s = 0;
    for (long k = 0; k < n; ++k) {
        Integer w = bin(n - 1, k) * bin(n + k, k);
        s += Rational(w * w * (3 * k * k + 3 * k + 1));
    }
    return s / (Integer(n) * n * n);
}

Integer oracle_apery(long n) {
    Integer s = 0;
    for (long k = 0; k <= n; ++k) {
        Integer w = bin(n, k) * bin(n + k, k);
        s += w * w;
    }
    return s;
}

Integer oracle_s(long n) {
    Integer s = 0;
    for (long k = 0; k < n; ++k) {
        Integer w = bin(n - 1, k) * bin(n + k, k);
        s += w * w;
    }
    return s;
}

bool prefix_is(const SequenceValues& v, const std::vector<long>& golden) {
    for (std::size_t i = 0; i < golden.size(); ++i) {
        if (v.values.at(i) != golden[i]) return false;
    }
    return true;
}

HPFloat to_hp(const Rational& q) { return HPFloat(q, kDefaultPrecision); }

void criterion1(Check& c) {
    for (long n = 1; n <= 300; ++n) {
        const Rational p = a_direct(n, AForm::primary);
        if (p != a_direct(n, AForm::dual) || p != a_transformed(n)) {
            c.expect(false, "a forms disagree at n=" + std::to_string(n));
            break;
        }
    }
    c.expect(prefix_is(sequence_table(SequenceId::a, 1, 7), {-1, 1, 9, 61, 587, 7575, 117485}), "a golden prefix");
    c.expect(prefix_is(sequence_table(SequenceId::b, 1, 7), {1, 8, 87, 1334, 25045, 529080, 12076435}), "b golden prefix");
    c.expect(prefix_is(sequence_table(SequenceId::apery, 0, 4), {1, 5, 73, 1445, 33001}), "A golden prefix");
    c.expect(prefix_is(sequence_table(SequenceId::s, 1, 4), {1, 10, 165, 3476}), "S golden prefix");
    const auto a = sequence_table(SequenceId::a, 1, 60);
    const auto b = sequence_table(SequenceId::b, 1, 60);
    const auto A = sequence_table(SequenceId::apery, 0, 60);
    const auto S = sequence_table(SequenceId::s, 1, 60);
    for (long n = 1; n <= 60; ++n) {
        c.expect(a.at(n) == oracle_a(n), "a vs brute force at n=" + std::to_string(n));
        c.expect(b.at(n) == oracle_b(n), "b vs brute force at n=" + std::to_string(n));
        c.expect(S.at(n) == oracle_s(n), "S vs brute force at n=" + std::to_string(n));
    }
    for (long n = 0; n <= 60; ++n) c.expect(A.at(n) == oracle_apery(n), "A vs brute force at n=" + std::to_string(n));
}

void criterion2(Check& c) {
    const long last = 500;
    for (SequenceId id : {SequenceId::a, SequenceId::b}) {
        const std::string name = sequence_name(id);
        const PRecurrence rec = id == SequenceId::a ? a_recurrence() : b_recurrence();
        const auto v = sequence_table(id, 1, last + 3);
        c.expect(verify_recurrence(rec, v, {1, last}).holds(), name + " recurrence residue on [1,500]");
        const auto guessed = guess_recurrence(v.slice(1, 80), 3, id == SequenceId::a ? 5 : 9);
        c.expect(guessed.has_value() && guessed->proportional_to(rec) && *guessed == rec,
                 name + " guessed recurrence equals the canonical built-in");
        const auto extended = extend_by_recurrence(rec, v.slice(1, 3), last - 3);
        c.expect(extended.slice(1, last).values == v.slice(1, last).values, name + " extension from 3 seeds");
    }
}

void criterion3(Check& c) {
    const IntPolynomial expected{-1, 35, -35, 1};
    c.expect(characteristic_poly(a_recurrence()) == expected, "a characteristic polynomial");
    c.expect(characteristic_poly(b_recurrence()) == expected, "b characteristic polynomial");
    const auto roots = roots_real(expected, 256);
    c.expect(roots.roots.size() == 3, "three real roots");
    if (roots.roots.size() == 3) {
        c.expect(roots.roots[0].exact == "17 - 12*sqrt(2)", "smallest root 17 - 12*sqrt(2)");
        c.expect(roots.roots[1].exact == "1", "middle root 1");
        c.expect(roots.roots[2].exact == "17 + 12*sqrt(2)", "largest root 17 + 12*sqrt(2)");
        const HPFloat bound = pow(HPFloat(2L, 256), -128L);
        for (const auto& r : roots.roots) {
            HPFloat x = r.value;
            HPFloat value = ((x - HPFloat(35L, 256)) * x + HPFloat(35L, 256)) * x - HPFloat(1L, 256);
            c.expect(abs(value) < bound, "root residual below 2^-128");
        }
    }
    for (SequenceId id : {SequenceId::a, SequenceId::b}) {
        const std::string name = sequence_name(id);
        const PRecurrence rec = id == SequenceId::a ? a_recurrence() : b_recurrence();
        const auto v = sequence_table(id, 1, 401);
        const RatioLimit lim = ratio_limit(rec, v, 256);
        c.expect(lim.exact == "17 + 12*sqrt(2)", name + " ratio limit 17 + 12*sqrt(2)");
        std::optional<HPFloat> previous;
        for (long n = 50; n <= 400; ++n) {
            HPFloat gap = abs(to_hp(v.at(n + 1) / v.at(n)) - lim.limit);
            if (previous && !(gap < *previous)) {
                c.expect(false, name + " gap not decreasing at n=" + std::to_string(n));
                break;
            }
            previous = gap;
        }
        c.expect(previous && previous->to_double() < 0.5, name + " gap at n=400 below 0.5");
    }
}

void criterion4(Check& c) {
    const auto a = sequence_table(SequenceId::a, 1, 401);
    const auto b = sequence_table(SequenceId::b, 1, 401);
    const auto ra = monotone_ratio_certify(a, Direction::increasing, {2, 400});
    std::string detail = "a ratio increasing on [2,400]";
    if (ra.index) detail += " (first violation at n=" + std::to_string(*ra.index) + ", witness " + ra.witness.value_or("") + ")";
    c.expect(ra.holds(), detail);
    c.expect(monotone_ratio_certify(b, Direction::increasing, {1, 400}).holds(), "b ratio increasing on [1,400]");
    for (const auto* v : {&a, &b}) {
        const std::string name = v == &a ? "a" : "b";
        c.expect(nth_root_ratio_certify(*v, {3, 200}, NthRootMode::exact).holds(), name + " root ratio exact [3,200]");
        c.expect(nth_root_ratio_certify(*v, {3, 400}, NthRootMode::certified_log).holds(),
                 name + " root ratio certified-log [3,400]");
        const auto probe = nth_root_limit_probe(*v, {100, 400});
        bool shrinking = true;
        for (std::size_t i = 0; i < probe.size(); ++i) {
            shrinking = shrinking && probe[i].distance.sign() > 0 && (i == 0 || probe[i].distance < probe[i - 1].distance);
        }
        c.expect(shrinking, name + " root-ratio distances positive and shrinking on [100,400]");
    }
}

SequenceValues synthetic(const std::function<Rational(long)>& f, long first, long last) {
    SequenceValues v;
    v.name = "synthetic";
    v.offset = first;
    for (long n = first; n <= last; ++n) v.values.push_back(f(n));
    return v;
}

bool within(double x, double target, double rel) { return std::fabs(x - target) <= rel * std::fabs(target); }

void criterion5(Check& c) {
    const auto syn = synthetic([](long n) { return Rational(pow(Integer(2), static_cast<unsigned long>(n)), n); }, 1, 402);
    const auto fs = puiseux_fit(ratio2_seq(syn), IndexRange{50, 400});
    c.expect(within(fs.alpha.to_double(), 2.0, 0.05) && within(fs.c.to_double(), 1.0, 0.05), "2^n/n fit alpha~2, c~1");
    const auto fa = puiseux_fit(ratio2_seq(sequence_table(SequenceId::a, 1, 402)), IndexRange{100, 400});
    c.expect(within(fa.alpha.to_double(), 2.0, 0.10) && within(fa.c.to_double(), 4.5, 0.10), "a fit alpha~2, c~4.5");
    c.expect(within(fa.c.to_double(), 4.664058008, 1e-6), "a fit c matches the frozen oracle value");
    const auto fb = puiseux_fit(ratio2_seq(sequence_table(SequenceId::b, 1, 402)), IndexRange{100, 400});
    c.expect(within(fb.c.to_double(), 2.5, 0.10), "b fit c~2.5");
    c.expect(within(fb.c.to_double(), 2.522972415, 1e-6), "b fit c matches the frozen oracle value");
    c.expect(r_order(1.0, 2.0, 3.0) == ROrder{1, LogFlavor::convex}, "r_order(c>0, 2, 3) = 1 convex");
    c.expect(r_order(1.0, 1.0, 3.0) == ROrder{3, LogFlavor::convex}, "r_order(c>0, 1, 3) = 3 convex");
    c.expect(r_order(-1.0, 1.0, 2.0) == ROrder{2, LogFlavor::concave}, "r_order(c<0, 1, 2) = 2 concave");
}

void criterion6(Check& c) {
    std::vector<double> scaled;
    for (long n : {50L, 100L, 200L}) {
        scaled.push_back(apery_asymptotic(n, AsymptoticOrder::corrected).relative_error().to_double() * n * n);
    }
    const double hi = std::max({scaled[0], scaled[1], scaled[2]});
    const double lo = std::min({scaled[0], scaled[1], scaled[2]});
    c.expect(lo > 0 && hi / lo <= 4.0, "n^2 * relative error within a factor of 4");
    for (long n = 1; n <= 300; ++n) {
        if (a_weighted_sum(n) != a_direct(n)) {
            c.expect(false, "a weighted-sum identity at n=" + std::to_string(n));
            break;
        }
        if (b_weighted_sum(n) != b_direct(n)) {
            c.expect(false, "b weighted-sum identity at n=" + std::to_string(n));
            break;
        }
    }
    const auto ra = a_bounds_audit({1, 400});
    const auto rb = b_bounds_audit({1, 400});
    auto contains = [](const nlohmann::ordered_json& list, long n) {
        for (const auto& x : list) {
            if (x.get<long>() == n) return true;
        }
        return false;
    };
    c.expect(contains(ra.details.at("lower_violations"), 1), "a lower bound violated at n=1");
    c.expect(contains(rb.details.at("upper_violations"), 1), "b upper bound violated at n=1");
    c.expect(ra.details.contains("lower_holds_from") && ra.details.contains("upper_holds_from"), "a thresholds recorded");
    c.expect(rb.details.contains("lower_holds_from") && rb.details.contains("upper_holds_from"), "b thresholds recorded");
}

void criterion7(Check& c) {
    cli::RunConfig config;
    config.subcommand = "report-all";
    config.range = {1, 400};
    config.format = cli::OutputFormat::json;
    std::ostringstream out1, out2, err;
    cli::run(config, out1, err);
    clear_sequence_cache();
    cli::run(config, out2, err);
    c.expect(!out1.str().empty() && out1.str() == out2.str(), "report-all output byte-identical across runs");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"exactness", criterion1},   {"recurrences", criterion2}, {"spectral", criterion3},
        {"certification", criterion4}, {"fits", criterion5},       {"asymptotic audit", criterion6},
        {"determinism", criterion7},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (check.failures.empty() ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " ("
             << static_cast<long>(seconds * 10) / 10.0 << " s)";
        for (const auto& f : check.failures) line << "\n    " << f;
        std::cout << line.str() << std::endl;
        if (!check.failures.empty()) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
