#include "holonomic/p_recurrence.hpp"
#include "holonomic/sequences.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace holonomic;

namespace {

std::vector<Rational> ints(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("golden prefixes of the four sequences") {
    CHECK(sequence_table(SequenceId::a, 1, 7).values == ints({-1, 1, 9, 61, 587, 7575, 117485}));
    CHECK(sequence_table(SequenceId::b, 1, 7).values == ints({1, 8, 87, 1334, 25045, 529080, 12076435}));
    CHECK(sequence_table(SequenceId::apery, 0, 4).values == ints({1, 5, 73, 1445, 33001}));
    CHECK(sequence_table(SequenceId::s, 1, 4).values == ints({1, 10, 165, 3476}));
}

TEST_CASE("the three a-formulas agree and a, b stay integral") {
    for (long n = 1; n <= 120; ++n) {
        const Rational a = a_direct(n);
        CHECK(a == a_direct(n, AForm::dual));
        CHECK(a == a_transformed(n));
        CHECK(is_integer(a));
        CHECK(is_integer(b_direct(n)));
    }
}

TEST_CASE("b relates to S and S to the Apery numbers") {
    // b_n n^3 = sum (3k^2+3k+1) C(n-1,k)^2 C(n+k,k)^2 >= S_n.
    for (long n = 1; n <= 40; ++n) {
        CHECK(b_direct(n) * n * n * n >= s_sum(n));
        CHECK(s_sum(n) <= apery(n));
    }
}

TEST_CASE("sequence_table: ranges, offsets and errors") {
    const auto v = sequence_table(SequenceId::b, 5, 9);
    CHECK(v.first_index() == 5);
    CHECK(v.last_index() == 9);
    CHECK(v.at(5) == 25045);
    CHECK_THROWS_AS(v.at(4), CoverageError);
    CHECK_THROWS_AS(v.at(10), CoverageError);
    CHECK_THROWS_AS(sequence_table(SequenceId::a, 0, 3), DomainError);
    CHECK_THROWS_AS(sequence_table(SequenceId::a, 5, 3), DomainError);
    CHECK(natural_offset(SequenceId::apery) == 0);
    CHECK(parse_sequence_id("s") == SequenceId::s);
    CHECK_THROWS(parse_sequence_id("zeta"));
    clear_sequence_cache();
    CHECK(sequence_table(SequenceId::b, 5, 9).values == v.values);
}

TEST_CASE("extend_by_recurrence reproduces direct summation") {
    for (SequenceId id : {SequenceId::a, SequenceId::b}) {
        const PRecurrence rec = id == SequenceId::a ? a_recurrence() : b_recurrence();
        const auto direct = sequence_table(id, 1, 150);
        const auto extended = extend_by_recurrence(rec, direct.slice(1, 3), 147);
        CHECK(extended.values == direct.values);
    }
}

TEST_CASE("extend_by_recurrence stops at a vanishing leading coefficient") {
    // (n - 3) u_{n+1} - u_n = 0: p_1 vanishes at n = 3.
    PRecurrence rec({IntPolynomial{-1}, IntPolynomial{-3, 1}}, 1);
    SequenceValues seed{"t", 1, {Rational(1)}};
    try {
        extend_by_recurrence(rec, seed, 5);
        FAIL("expected a singularity");
    } catch (const SingularityError& e) {
        CHECK(e.index() == 3);
    }
}

TEST_CASE("extend_by_recurrence keeps non-integral terms exact") {
    // (n + 1) u_{n+1} = u_n from u_0 = 1 gives 1/n!.
    PRecurrence rec({IntPolynomial{-1}, IntPolynomial{1, 1}}, 0);
    const auto v = extend_by_recurrence(rec, SequenceValues{"t", 0, {Rational(1)}}, 5);
    CHECK(v.at(5) == Rational(1, 120));
}

TEST_CASE("sequence files round-trip and validate") {
    SequenceValues v = sequence_table(SequenceId::a, 1, 30);
    v.values.push_back(Rational(-7, 3));
    std::stringstream buf;
    write_sequence(buf, v);
    const auto back = read_sequence(buf);
    CHECK(back.offset == 1);
    CHECK(back.values == v.values);

    std::istringstream commented("# header\n\n3\t5\n4\t-1/2\n");
    const auto c = read_sequence(commented);
    CHECK(c.offset == 3);
    CHECK(c.at(4) == Rational(-1, 2));

    std::istringstream gap("1\t1\n3\t2\n");
    CHECK_THROWS(read_sequence(gap));
    std::istringstream garbage("1\tx\n");
    CHECK_THROWS(read_sequence(garbage));

    const auto path = std::filesystem::temp_directory_path() / "holonomic_sequence_roundtrip.txt";
    write_sequence_file(path.string(), v);
    CHECK(read_sequence_file(path.string()).values == v.values);
    std::filesystem::remove(path);
    CHECK_THROWS(read_sequence_file("/nonexistent/holonomic.txt"));
}
