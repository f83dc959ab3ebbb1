#include "holonomic/asymptotics.hpp"
#include "holonomic/sequences.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace holonomic;

namespace {

bool close(const HPFloat& x, double target, double tol) { return std::abs(x.to_double() - target) < tol; }

}  // namespace

TEST_CASE("Apery asymptotics: frozen relative errors") {
    CHECK(close(apery_asymptotic(1).relative_error(), 0.1307, 1e-4));
    CHECK(close(apery_asymptotic(1, AsymptoticOrder::main).relative_error(), 0.495, 1e-3));
    CHECK(close(apery_asymptotic(50).relative_error(), 3.5505e-5, 1e-8));
    CHECK(close(apery_asymptotic(100).relative_error(), 8.8320e-6, 1e-9));
    CHECK(close(apery_asymptotic(200).relative_error(), 2.2025e-6, 1e-9));
    CHECK(close(apery_asymptotic(100, AsymptoticOrder::main).relative_error(), 0.00419, 1e-5));
    const auto e = apery_asymptotic(10);
    CHECK(e.exact == apery(10));
    CHECK_THROWS_AS(apery_asymptotic(0), DomainError);
}

TEST_CASE("Apery asymptotics: corrected error decreases like n^-2") {
    HPFloat previous = apery_asymptotic(20).relative_error();
    for (long n = 21; n <= 400; ++n) {
        HPFloat current = apery_asymptotic(n).relative_error();
        CHECK(current < previous);
        previous = current;
    }
    for (long n : {50L, 100L, 200L}) {
        const double scaled = apery_asymptotic(n).relative_error().to_double() * n * n;
        CHECK(scaled > 0.085);
        CHECK(scaled < 0.09);
    }
}

TEST_CASE("Apery asymptotics: CSV layout") {
    std::ostringstream out;
    write_asymptotic_csv(out, {apery_asymptotic(1), apery_asymptotic(2)});
    std::istringstream in(out.str());
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "n,exact,formula,relative_error,order");
    CHECK(row.rfind("1,5,", 0) == 0);
}

TEST_CASE("weighted-sum identities") {
    for (long n = 1; n <= 120; ++n) {
        CHECK(a_weighted_sum(n) == a_direct(n));
        CHECK(b_weighted_sum(n) == b_direct(n));
    }
    CHECK(b_weighted_sum_unscaled(1) == b_direct(1));
    for (long n = 2; n <= 30; ++n) CHECK(b_weighted_sum_unscaled(n) != b_direct(n));
}

TEST_CASE("weight profiles") {
    CHECK(weight_profile_eval(WeightKind::a_profile, 4, 1) == Rational(-1, 25));
    CHECK(weight_profile_eval(WeightKind::b_profile, 2, 0) == Rational(1, 8));
    CHECK_THROWS_AS(weight_profile_eval(WeightKind::a_profile, 4, 0), DomainError);
    CHECK_THROWS_AS(weight_profile_eval(WeightKind::b_profile, 4, 4), DomainError);
    for (long n = 2; n <= 100; ++n) {
        for (long k = 2; k <= n; ++k) CHECK(weight_profile_eval(WeightKind::a_profile, n, k) > Rational(1, 16 * n * n));
    }
    const auto pb = bound_profile(WeightKind::b_profile, 400);
    CHECK(pb.argmin == 0);
    CHECK(pb.argmax == 266);
    REQUIRE(pb.critical_plus.has_value());
    CHECK(close(*pb.critical_plus, 266.49989596, 1e-7));
    CHECK(pb.critical_minus->sign() < 0);
    CHECK(close(b_profile_at(400, *pb.critical_plus), pb.f_at_critical_plus->to_double(), 1e-15));
    const auto pa = bound_profile(WeightKind::a_profile, 400);
    CHECK(pa.min_value == Rational(-1, 160801));
    CHECK(pa.argmax == 400);
}

TEST_CASE("bound audits: violation sets and thresholds") {
    const auto ra = a_bounds_audit({1, 400});
    CHECK(ra.verdict == Verdict::threshold);
    CHECK(*ra.index == 9);
    CHECK(ra.details.at("lower_violations") == nlohmann::ordered_json::array({1}));
    CHECK(ra.details.at("upper_violations") == nlohmann::ordered_json::array({2, 3, 4, 5, 6, 7, 8}));
    CHECK(ra.details.at("lower_holds_from").get<long>() == 2);
    CHECK(ra.details.at("upper_holds_from").get<long>() == 9);

    const auto rb = b_bounds_audit({1, 400});
    CHECK(rb.verdict == Verdict::threshold);
    CHECK(*rb.index == 4);
    CHECK(rb.details.at("lower_violations").empty());
    CHECK(rb.details.at("upper_violations") == nlohmann::ordered_json::array({1, 2, 3}));
    CHECK(rb.details.at("upper_holds_from").get<long>() == 4);
}

TEST_CASE("audit_bounds: generic use") {
    SequenceValues v{"sq", 1, {}};
    for (long n = 1; n <= 20; ++n) v.values.emplace_back(n * n);
    const auto all = audit_bounds(v, "n <= u <= n^3", {1, 20}, [](long n) { return Rational(n); },
                                  [](long n) { return Rational(n * n * n); });
    CHECK(all.holds());
    const auto late = audit_bounds(v, "u >= 10", {1, 20}, [](long) { return Rational(10); },
                                   [](long) { return std::optional<Rational>{}; });
    CHECK(late.verdict == Verdict::threshold);
    CHECK(*late.index == 4);
    CHECK(*late.witness == "-9");
    const auto never = audit_bounds(v, "u <= 0", {1, 20}, [](long) { return std::optional<Rational>{}; },
                                    [](long) { return Rational(0); });
    CHECK(never.verdict == Verdict::mixed);
}

TEST_CASE("decay exponent fits") {
    const HPFloat growth = apery_growth();
    CHECK(growth.to_string(12) == "3.39705627485e+01");
    const auto fa = decay_exponent_fit(sequence_table(SequenceId::a, 100, 400), growth, {100, 400});
    CHECK(close(fa.exponent, 4.5122085, 1e-6));
    const auto fb = decay_exponent_fit(sequence_table(SequenceId::b, 100, 400), growth, {100, 400});
    CHECK(close(fb.exponent, 2.5016544, 1e-6));
    SequenceValues syn{"syn", 1, {}};
    for (long n = 1; n <= 200; ++n) syn.values.emplace_back(Rational(pow(Integer(34), static_cast<unsigned long>(n)), n * n));
    const auto fs = decay_exponent_fit(syn, HPFloat(34L, 256), {20, 200});
    CHECK(close(fs.exponent, 2.0, 1e-12));
}
