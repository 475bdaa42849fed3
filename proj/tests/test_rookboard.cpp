#include "doctest.h"

#include <set>

#include "board_gen.hpp"
#include "rookcalc/oracles.hpp"
#include "rookcalc/rookboard.hpp"

using namespace rookcalc;

namespace {

LaurentPolynomial q_to(Exponent e) { return monomial(1, e); }

}  // namespace

TEST_CASE("boards from words") {
    CHECK(board_from_word("UVUUUVVU").column_lengths() == std::vector<int>{0, 2, 2, 2, 3});
    CHECK(board_from_word("VUVUVU").column_lengths() == std::vector<int>{0, 1, 2});
    CHECK(board_from_word("VUVUVUV").column_lengths() == std::vector<int>{1, 2, 3});
    CHECK(board_from_word("VVVUU").column_lengths() == std::vector<int>{0, 0});
    CHECK(board_jn(5).column_lengths() == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(board_jn(0).column_count() == 0);
    CHECK(board_jprime(4, 7).column_lengths() == std::vector<int>{1, 2, 3, 4});
    CHECK(board_jump(3, 2).column_lengths() == std::vector<int>{0, 2, 4});
}

TEST_CASE("board errors") {
    CHECK_THROWS_AS(board_from_word(""), BoardError);
    CHECK_THROWS_AS(board_from_word("UXV"), BoardError);
    PreweightAssignment outside;
    outside.overrides[{1, 1}] = 5;  // column 1 of J_3 is empty
    CHECK_THROWS_AS(board_from_word("VUVUVU", outside), BoardError);
    CHECK_THROWS_AS(Board({{1, 1}, {1}}), BoardError);
    CHECK_THROWS_AS(parse_rule("diagonal"), BoardError);
    CHECK_THROWS_AS(parse_board_spec("pre=1"), BoardError);
    CHECK_THROWS_AS(parse_board_spec("word=VU;pre=x"), BoardError);
    CHECK_THROWS_AS(parse_board_spec("word=VUVU;2=4"), BoardError);
}

TEST_CASE("board specs") {
    const Board b = parse_board_spec("word=VUVUV;pre=2;2,1=5");
    CHECK(b.column_lengths() == std::vector<int>{1, 2});
    CHECK(b.preweight(1, 1) == 2);
    CHECK(b.preweight(2, 1) == 5);
    CHECK(b.preweight(2, 2) == 2);
    const Board d = parse_board_spec("word=VUVUV;1,1=3");
    CHECK(d.preweight(1, 1) == 3);
    CHECK(d.preweight(2, 2) == 1);
    CHECK(parse_rule("same-row") == Rule::SameRow);
    CHECK(parse_rule("bottom-shift") == Rule::BottomShift);
    CHECK(to_string(Rule::BottomShift) == "bottom-shift");
}

TEST_CASE("column totals") {
    CHECK(column_totals(board_jn(4)) == std::vector<Preweight>{0, 1, 2, 3});
    CHECK(column_totals(board_jprime(4, -3)) == std::vector<Preweight>{-3, -2, -1, 0});
    CHECK(column_totals(board_jcd(4, 2, 5)) == std::vector<Preweight>{5, 7, 9, 11});
    CHECK(column_totals(board_jcd(3, -1, 0)) == std::vector<Preweight>{0, -1, -2});
}

TEST_CASE("placement formatting and validation") {
    CHECK(format_placement(RookPlacement{{0, 1, 2, 0, 1}}) == "2:1 3:2 5:1");
    CHECK(format_placement(RookPlacement{{0, 0}}) == "-");
    CHECK_THROWS_AS(validate_placement(board_jn(3), RookPlacement{{1, 0, 0}}), BoardError);
    CHECK_THROWS_AS(validate_placement(board_jn(3), RookPlacement{{0, 0}}), BoardError);
    CHECK_NOTHROW(validate_placement(board_jn(3), RookPlacement{{0, 1, 2}}));
}

TEST_CASE("placement on J_5 weighs q^{2s+2}[s]") {
    const RookPlacement p{{0, 1, 2, 0, 1}};
    for (std::int64_t s = -1; s <= 4; ++s) {
        CAPTURE(s);
        const auto expected = q_to(2 * s + 2) * bracket(s);
        CHECK(placement_weight(board_jn(5), p, Rule::SameRow, {s}) == expected);
        const auto f = placement_factors(board_jn(5), p, Rule::SameRow, {s});
        CHECK(f.exponent == 2 * s + 2);
        CHECK(f.rook_preweights == std::vector<Preweight>{1, s, 1});
    }
}

TEST_CASE("bottom-shift placement on J'_{4,alpha} weighs q^{2s+2alpha}[alpha]^2[s]") {
    const RookPlacement p{{1, 2, 0, 1}};
    for (std::int64_t s = -1; s <= 3; ++s) {
        for (Preweight alpha = -1; alpha <= 3; ++alpha) {
            CAPTURE(s);
            CAPTURE(alpha);
            const auto expected = q_to(2 * s + 2 * alpha) * bracket(alpha) * bracket(alpha) * bracket(s);
            CHECK(placement_weight(board_jprime(4, alpha), p, Rule::BottomShift, {s}) == expected);
        }
    }
}

TEST_CASE("placement counts") {
    // One rook per column and no row constraint, so J_n carries c(n,k) placements of n-k rooks.
    for (int n = 0; n <= 7; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto count = placement_count(board_jn(n), n - k);
            CHECK(count == oracle::cycles(n, k));
            CHECK(count == static_cast<long>(enumerate_placements(board_jn(n), n - k).size()));
        }
    }
    CHECK(placement_count(board_jn(3), 5) == 0);
    CHECK(placement_count(board_jn(3), -1) == 0);
    const Board odd = board_from_word("UVUUUVVU");
    for (int k = 0; k <= 5; ++k) CHECK(placement_count(odd, k) == static_cast<long>(enumerate_placements(odd, k).size()));
}

TEST_CASE("enumeration yields distinct valid placements") {
    const Board b = board_jprime(4, 1);
    for (int k = 0; k <= 4; ++k) {
        std::set<std::vector<int>> seen;
        for (const auto& p : enumerate_placements(b, k)) {
            CHECK(p.rook_count() == k);
            CHECK_NOTHROW(validate_placement(b, p));
            seen.insert(p.offsets);
        }
        CHECK(seen.size() == enumerate_placements(b, k).size());
    }
}

TEST_CASE("rook sums at q = 1 reproduce classical triangles") {
    for (int n = 0; n <= 7; ++n) {
        for (int k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(rook_sum(board_jn(n), n - k, Rule::SameRow, {0}).coefficient_sum() == oracle::partitions(n, k));
            CHECK(rook_sum(board_jn(n), n - k, Rule::SameRow, {1}).coefficient_sum() == oracle::cycles(n, k));
        }
    }
}

TEST_CASE("degenerate rook counts") {
    const Board b = parse_board_spec("word=VUVUVUV;pre=2");
    for (std::int64_t s = -1; s <= 2; ++s) {
        CHECK(rook_sum(b, 0, Rule::SameRow, {s}) == q_to(12));
        CHECK(rook_sum(b, 4, Rule::SameRow, {s}).is_zero());
        CHECK(rook_sum(b, -1, Rule::BottomShift, {s}).is_zero());
    }
}

TEST_CASE("rook sums depend only on column totals, under either rule") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 60; ++trial) {
        const auto pair = rookcalc::testing::random_board_pair(rng, 5, 5);
        REQUIRE(column_totals(pair.first) == column_totals(pair.second));
        for (std::int64_t s = -1; s <= 3; ++s) {
            for (int k = 0; k <= pair.first.column_count(); ++k) {
                CAPTURE(trial);
                CAPTURE(s);
                CAPTURE(k);
                const auto reference = rook_sum(pair.first, k, Rule::SameRow, {s});
                CHECK(rook_sum(pair.second, k, Rule::SameRow, {s}) == reference);
                CHECK(rook_sum(pair.first, k, Rule::BottomShift, {s}) == reference);
                CHECK(rook_sum(pair.second, k, Rule::BottomShift, {s}) == reference);
            }
        }
    }
}

TEST_CASE("bottom-shift needs the staircase condition") {
    // Two columns of length 1: the second rook has no cell at offset 2 to receive the increment.
    const Board flat({{1}, {1}});
    for (std::int64_t s = -1; s <= 3; ++s) {
        CAPTURE(s);
        CHECK(rook_sum(flat, 2, Rule::SameRow, {s}) == bracket(s));
        CHECK(rook_sum(flat, 2, Rule::BottomShift, {s}) == LaurentPolynomial(1L));
    }
}
