#include "holonomic/exact_linear_algebra.hpp"
#include "holonomic/recurrence.hpp"
#include "holonomic/sequences.hpp"

#include <doctest.h>

#include <random>

using namespace holonomic;

TEST_CASE("PRecurrence: canonical form, serialization and parsing") {
    PRecurrence r({IntPolynomial{2, 4}, IntPolynomial{-6}}, 1);
    CHECK(r.coeff(1) == IntPolynomial{3});
    CHECK(r.coeff(0) == IntPolynomial{-1, -2});
    CHECK(PRecurrence::parse(r.serialize()) == r);
    CHECK(PRecurrence::parse(a_recurrence().serialize()) == a_recurrence());
    CHECK(PRecurrence::parse(b_recurrence().serialize()) == b_recurrence());
    CHECK(r.proportional_to(PRecurrence({IntPolynomial{-5, -10}, IntPolynomial{15}}, 1)));
    CHECK_THROWS_AS(PRecurrence({IntPolynomial{}, IntPolynomial{1}}, 0), DomainError);
    CHECK_THROWS(PRecurrence::parse("precurrence 1\norder 1\n"));
    CHECK(PRecurrence::parse("# saved\n\n" + r.serialize() + "# trailing note\n") == r);
}

TEST_CASE("the a-recurrence by hand at n = 1") {
    const PRecurrence rec = a_recurrence();
    CHECK(rec.order() == 3);
    CHECK(rec.degree() == 5);
    // By hand: p_0(1) = 14, p_1(1) = -6160, p_2(1) = 4590, p_3(1) = -576 before the sign is made canonical.
    const Integer s = rec.coeff(3).evaluate(Integer(1)) > 0 ? 1 : -1;
    CHECK(rec.coeff(0).evaluate(Integer(1)) * s == -14);
    CHECK(rec.coeff(1).evaluate(Integer(1)) * s == 6160);
    CHECK(rec.coeff(2).evaluate(Integer(1)) * s == -4590);
    CHECK(rec.coeff(3).evaluate(Integer(1)) * s == 576);
}

TEST_CASE("verify_recurrence: both sequences to 400, perturbation detected") {
    for (SequenceId id : {SequenceId::a, SequenceId::b}) {
        const PRecurrence rec = id == SequenceId::a ? a_recurrence() : b_recurrence();
        CHECK(verify_recurrence(rec, sequence_table(id, 1, 403), {1, 400}).holds());
    }
    auto v = sequence_table(SequenceId::a, 1, 10);
    v.values[2] = 10;  // a_3 := 10
    const auto r = verify_recurrence(a_recurrence(), v, {1, 7});
    CHECK_FALSE(r.holds());
    REQUIRE(r.index.has_value());
    CHECK(*r.index == 1);
    // The residue is p_2(1) * (10 - 9), i.e. 4590 up to the canonical sign.
    CHECK(parse_rational(*r.witness) == Rational(a_recurrence().coeff(2).evaluate(Integer(1))));
    CHECK(abs(parse_rational(*r.witness)) == 4590);
    CHECK_THROWS_AS(verify_recurrence(a_recurrence(), sequence_table(SequenceId::a, 1, 10), {1, 9}), CoverageError);
}

TEST_CASE("guess_recurrence finds the minimal recurrences from 80 terms") {
    const auto ga = guess_recurrence(sequence_table(SequenceId::a, 1, 80), 3, 5);
    REQUIRE(ga.has_value());
    CHECK(*ga == a_recurrence());
    const auto gb = guess_recurrence(sequence_table(SequenceId::b, 1, 80), 3, 9);
    REQUIRE(gb.has_value());
    CHECK(gb->proportional_to(b_recurrence()));
    CHECK_FALSE(guess_recurrence(sequence_table(SequenceId::a, 1, 80), 2, 5).has_value());
    CHECK_THROWS_AS(guess_recurrence(sequence_table(SequenceId::a, 1, 20), 3, 5), CoverageError);
}

TEST_CASE("guess_recurrence: geometric and polynomial sequences") {
    SequenceValues geo{"geo", 0, {}};
    for (int n = 0; n < 30; ++n) geo.values.emplace_back(pow(Integer(3), static_cast<unsigned long>(n)));
    const auto g = guess_recurrence(geo, 2, 2);
    REQUIRE(g.has_value());
    CHECK(g->order() == 1);
    CHECK(g->degree() == 0);
    CHECK(g->coeff(0) == IntPolynomial{-3});
    CHECK(g->coeff(1) == IntPolynomial{1});
}

TEST_CASE("guess_recurrence round-trips random low-order recurrences") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> coeff(-6, 6);
    int checked = 0;
    for (int trial = 0; trial < 60 && checked < 20; ++trial) {
        const int order = 1 + static_cast<int>(rng() % 2);
        const int degree = static_cast<int>(rng() % 3);
        std::vector<IntPolynomial> ps;
        for (int i = 0; i <= order; ++i) {
            std::vector<Integer> cs(degree + 1);
            for (auto& c : cs) c = coeff(rng);
            ps.emplace_back(cs);
        }
        // Keep the leading coefficient free of roots in the range used.
        ps.back() = IntPolynomial::monomial(1, degree) + IntPolynomial{1};
        if (ps.front().is_zero()) continue;
        const PRecurrence rec(ps, 1);
        SequenceValues seed{"r", 1, {}};
        for (int i = 0; i < order; ++i) seed.values.emplace_back(coeff(rng) + 7);
        const auto v = extend_by_recurrence(rec, seed, 60);
        const auto g = guess_recurrence(v, order, degree);
        REQUIRE(g.has_value());
        CHECK(verify_recurrence(*g, v, {1, v.last_index() - g->order()}).holds());
        CHECK(g->order() <= order);
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("integer_nullspace: M x = 0 on random rank-deficient matrices") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 3 + rng() % 4;
        const std::size_t cols = rows + 1 + rng() % 3;
        IntMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
        }
        for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * 2 - m(1, c);  // dependent row
        const auto basis = integer_nullspace(m);
        CHECK(basis.size() >= cols - rows + 1);
        long previous_last = -1;
        for (const auto& x : basis) {
            for (std::size_t r = 0; r < rows; ++r) {
                Integer dot = 0;
                for (std::size_t c = 0; c < cols; ++c) dot += m(r, c) * x[c];
                CHECK(dot == 0);
            }
            long last = -1;
            for (std::size_t c = 0; c < cols; ++c) {
                if (x[c] != 0) last = static_cast<long>(c);
            }
            CHECK(last > previous_last);
            previous_last = last;
        }
    }
}

TEST_CASE("characteristic polynomial and roots") {
    const IntPolynomial expected{-1, 35, -35, 1};
    CHECK(characteristic_poly(a_recurrence()) == expected);
    CHECK(characteristic_poly(b_recurrence()) == expected);
    const auto res = roots_real(expected, 256);
    REQUIRE(res.roots.size() == 3);
    CHECK(res.roots[0].exact == "17 - 12*sqrt(2)");
    CHECK(res.roots[1].exact == "1");
    CHECK(res.roots[1].kind == RootKind::rational);
    CHECK(res.roots[2].exact == "17 + 12*sqrt(2)");
    CHECK(res.roots[2].kind == RootKind::quadratic_surd);
    CHECK(res.dominant == 2);
    CHECK(res.complex_count == 0);
    CHECK(res.roots[2].value.to_string(12) == "3.39705627485e+01");
}

TEST_CASE("roots_real: rational, surd, numeric and complex cases") {
    const auto r1 = roots_real(IntPolynomial{-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
    REQUIRE(r1.roots.size() == 3);
    CHECK(r1.roots[0].exact == "1");
    CHECK(r1.roots[2].exact == "3");
    const auto r2 = roots_real(IntPolynomial{1, 0, -2});  // 1 - 2x^2
    REQUIRE(r2.roots.size() == 2);
    CHECK(r2.roots[0].kind == RootKind::quadratic_surd);
    CHECK(std::abs(r2.roots[1].value.to_double() - 0.70710678118654752) < 1e-15);
    const auto r3 = roots_real(IntPolynomial{-2, 0, 0, 1});  // x^3 - 2
    REQUIRE(r3.roots.size() == 1);
    CHECK(r3.roots[0].kind == RootKind::numeric);
    CHECK(std::abs(r3.roots[0].value.to_double() - 1.2599210498948732) < 1e-15);
    CHECK(r3.complex_count == 2);
    const auto r4 = roots_real(IntPolynomial{1, 0, 1});  // x^2 + 1
    CHECK(r4.roots.empty());
    CHECK(r4.complex_count == 2);
    const auto r5 = roots_real(IntPolynomial{2, 3});  // 3x + 2
    REQUIRE(r5.roots.size() == 1);
    CHECK(r5.roots[0].exact == "-2/3");
    CHECK_THROWS_AS(roots_real(IntPolynomial{1, -2, 1}), PreconditionError);
}

TEST_CASE("ratio_limit: dominant root, gap and ties") {
    const auto v = sequence_table(SequenceId::a, 1, 201);
    const auto lim = ratio_limit(a_recurrence(), v);
    CHECK(lim.exact == "17 + 12*sqrt(2)");
    CHECK(lim.tail_index == 200);
    CHECK(std::abs(lim.gap.to_double() - 0.75598657) < 1e-7);
    const auto lb = ratio_limit(b_recurrence(), sequence_table(SequenceId::b, 1, 401));
    CHECK(std::abs(lb.gap.to_double() - 0.21146078) < 1e-7);
    // u_{n+2} = u_n has characteristic roots +1 and -1 of equal modulus.
    PRecurrence tie({IntPolynomial{-1}, IntPolynomial{0}, IntPolynomial{1}}, 0);
    SequenceValues ones{"ones", 0, {1, 1, 1, 1, 1}};
    CHECK_THROWS_AS(ratio_limit(tie, ones), AmbiguityError);
}
