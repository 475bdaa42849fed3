#include "doctest.h"

#include "rookcalc/oracles.hpp"
#include "rookcalc/rookboard.hpp"
#include "rookcalc/stirling.hpp"

using namespace rookcalc;

TEST_CASE("recurrence agrees with rook sums on J_n") {
    for (std::int64_t s = -1; s <= 3; ++s) {
        for (int n = 0; n <= 6; ++n) {
            for (int k = 0; k <= n; ++k) {
                CAPTURE(s);
                CAPTURE(n);
                CAPTURE(k);
                CHECK(stirling_s(n, k, s) == rook_sum(board_jn(n), n - k, Rule::SameRow, {s}));
            }
        }
    }
}

TEST_CASE("(c,d) recurrence agrees with rook sums on the (c,d) board") {
    for (std::int64_t s = -1; s <= 2; ++s)
        for (std::int64_t c = -1; c <= 2; ++c)
            for (std::int64_t d = -1; d <= 2; ++d)
                for (int n = 0; n <= 5; ++n)
                    for (int k = 0; k <= n; ++k) {
                        CAPTURE(s);
                        CAPTURE(c);
                        CAPTURE(d);
                        CAPTURE(n);
                        CAPTURE(k);
                        CHECK(stirling_cd(n, k, s, c, d) == rook_sum(board_jcd(n, c, d), n - k, Rule::SameRow, {s}));
                    }
}

// J^{1,1}_n is J_{n+1} without its empty column.
TEST_CASE("(c,d) family contains the s family") {
    for (std::int64_t s = -1; s <= 3; ++s)
        for (int n = 0; n <= 7; ++n)
            for (int k = 0; k <= n; ++k) CHECK(stirling_cd(n, k, s, 1, 1) == stirling_s(n + 1, k + 1, s));
}

TEST_CASE("classical triangles at q = 1") {
    for (int n = 0; n <= 8; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(stirling_s(n, k, 0).coefficient_sum() == oracle::partitions(n, k));
            CHECK(stirling_s(n, k, 1).coefficient_sum() == oracle::cycles(n, k));
            CHECK(type2(n, k, 0, 1, 0).coefficient_sum() == oracle::partitions(n, k));
        }
        CHECK(bell_number(n, 0).coefficient_sum() == oracle::bell(n));
    }
}

TEST_CASE("known q-values") {
    CHECK(stirling_s(0, 0, 2) == LaurentPolynomial(1L));
    CHECK(stirling_s(3, 0, 2).is_zero());
    CHECK(stirling_s(3, 4, 2).is_zero());
    CHECK(stirling_s(2, 1, 0) == LaurentPolynomial(1L));
    CHECK(stirling_s(3, 2, 0) == parse_polynomial("2*q + q^2"));
    CHECK(to_string(bell_number(2, 0)) == "1 + q");
    CHECK(stirling_s(3, 1, 1) == bracket(2));
}

TEST_CASE("tables pass their own audit and expose parameters") {
    auto t = StirlingTable::type2_family(1, 2, -1);
    t.fill(9);
    CHECK(t.rows_filled() == 9);
    CHECK(t.audit().empty());
    CHECK(t.params() == ParamList{{"alpha", 1}, {"beta", 2}, {"rho", -1}});
    auto s = StirlingTable::s_family(3);
    CHECK(s.at(6, 3) == stirling_s(6, 3, 3));
    CHECK(s.audit().empty());
    CHECK_THROWS_AS(s.at(-1, 0), std::invalid_argument);
    CHECK(s.at(3, 7).is_zero());
}

TEST_CASE("type II numbers are the (c,d) numbers at (1-beta, beta-alpha, -rho)") {
    for (std::int64_t a = -1; a <= 2; ++a)
        for (std::int64_t b = -1; b <= 2; ++b)
            for (std::int64_t r = -1; r <= 2; ++r)
                for (int n = 0; n <= 5; ++n)
                    for (int k = 0; k <= n; ++k) CHECK(type2(n, k, a, b, r) == stirling_cd(n, k, 1 - b, b - a, -r));
}

TEST_CASE("column k = 0 is a product of brackets") {
    for (std::int64_t s = -1; s <= 2; ++s)
        for (std::int64_t c = -1; c <= 2; ++c)
            for (std::int64_t d = -2; d <= 2; ++d) {
                LaurentPolynomial expected(1L);
                for (int n = 0; n <= 5; ++n) {
                    CHECK(stirling_cd(n, 0, s, c, d) == expected);
                    expected *= bracket(d + n * (c + s - 1));
                }
            }
    for (int n = 1; n <= 5; ++n) CHECK(stirling_s(n, 0, 2).is_zero());
}

TEST_CASE("Bell polynomials") {
    const auto b = bell_poly(4, 0);
    CHECK(b.degree_bound() == 4);
    CHECK(b.evaluate(0).is_zero());
    CHECK(b.evaluate(1) == bell_number(4, 0));
    // At q = 1, B[n;x] is the Touchard polynomial: B[3;x] = x + 3x^2 + x^3.
    CHECK(bell_poly(3, 0).evaluate(2).coefficient_sum() == 2 + 12 + 8);
    for (int n = 0; n <= 6; ++n) {
        BigInt fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(bell_number(n, 1).coefficient_sum() == fact);
    }
    CHECK(bell_type2(5, 0, 1, 0).evaluate(1) == bell_number(5, 0));
}

TEST_CASE("scaled numbers") {
    for (int n = 0; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            LaurentPolynomial expected = stirling_s(n, k, 2);
            BigInt scale = 1;
            for (int i = k; i < n; ++i) scale *= 3;
            expected.multiply_monomial(scale, 0);
            CHECK(mssha(n, k, 2, 3) == expected);
        }
    }
    CHECK(mssha(2, 3, 1, 5).is_zero());
}

TEST_CASE("generalized falling factorials") {
    // (x+1|2)_3 = (x+1)(x-1)(x-3)
    CHECK(generalized_falling(1, 2, 3) == parse_polynomial("3 - q - 3*q^2 + q^3"));
    CHECK(generalized_falling(5, 1, 0) == LaurentPolynomial(1L));
}

TEST_CASE("Hsu-Shiue relation holds with the shift x + rho") {
    const auto classic = check_hsu_shiue(5, 0, 1, 0);
    CHECK(classic.minus_rho.holds);
    CHECK(classic.plus_rho.holds);
    CHECK(classic.convention() == "both");
    for (int n = 0; n <= 6; ++n)
        for (std::int64_t a = -1; a <= 2; ++a)
            for (std::int64_t b = -1; b <= 2; ++b)
                for (std::int64_t r = -1; r <= 2; ++r) {
                    const auto rep = check_hsu_shiue(n, a, b, r);
                    CAPTURE(n);
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(r);
                    CHECK(rep.plus_rho.holds);
                    CHECK(rep.holds_for_some());
                    if (rep.convention() != "both") CHECK(rep.convention() == "x+rho");
                }
    CHECK_FALSE(check_hsu_shiue(2, 0, 1, 1).minus_rho.holds);
}
