#include <doctest.h>

#include <set>

#include "h90/quotient.hpp"
#include "h90/strata.hpp"

using namespace h90;

TEST_CASE("linear stratum test: recorded cases") {
    CHECK(linear_stratum_test(11, 5, 2));
    CHECK_FALSE(linear_stratum_test(11, 5, 1));
    CHECK(linear_stratum_test(2, 7, 1));
    CHECK_FALSE(linear_stratum_test(7, 5, 4));
    CHECK(linear_stratum_test(7, 5, 5));
    CHECK_THROWS_AS(linear_stratum_test(5, 10, 2), std::invalid_argument);  // p | d
}

TEST_CASE("stratum enumeration: recorded sets") {
    CHECK(enumerate_stratum(2, 1, 127) == std::vector<unsigned>({1, 3, 7, 15, 31, 63, 127}));
    CHECK(enumerate_stratum(11, 2, 40) == std::vector<unsigned>({2, 5}));
    CHECK(enumerate_stratum(5, 2, 40) == std::vector<unsigned>({2}));
    CHECK(enumerate_stratum(2, 2, 40).empty());
    CHECK(enumerate_stratum(3, 2, 40).empty());
}

TEST_CASE("degree-zero stratum: the constant quotient in characteristic 3") {
    CHECK(enumerate_stratum(3, 0, 60) == std::vector<unsigned>({1}));
    for (std::uint64_t p : {2, 5, 7}) CHECK(enumerate_stratum(p, 0, 60).empty());
}

TEST_CASE("agreement with quotient degrees") {
    SUBCASE("positive characteristic") {
        for (std::uint64_t p : {2, 3, 5, 7}) {
            for (unsigned d = 1; d <= 60; ++d) {
                if (d % p == 0) continue;
                QuotientRecord rec = reduce_quotient(p, d);
                for (unsigned m = 0; m <= 4; ++m)
                    CHECK(linear_stratum_test(p, d, m) == (rec.degree <= m));
            }
        }
    }
    SUBCASE("characteristic zero with exact rationals") {
        for (unsigned d = 1; d <= 30; ++d) {
            QuotientRecord rec = reduce_quotient(0, d);
            for (unsigned m = 0; m <= 4; ++m)
                CHECK(linear_stratum_test(0, d, m) == (rec.degree <= m));
        }
    }
}

TEST_CASE("digit-periodicity smoke test against the closed classifications") {
    // membership in the exact strata for d <= 5000 matches the closed lists
    SUBCASE("p = 2, m = 1: the Mersenne exponents") {
        std::set<unsigned> expected;
        for (unsigned a = 1; (1u << a) - 1u <= 5000; ++a) expected.insert((1u << a) - 1u);
        for (unsigned d = 1; d <= 5000; d += 2) {
            bool member = stratum_member(2, d, 1);
            CHECK(member == (expected.count(d) > 0));
        }
    }
    SUBCASE("p = 3, m = 1: d = 3^a - 1") {
        std::set<unsigned> expected;
        for (unsigned v = 3; v - 1 <= 5000; v *= 3) expected.insert(v - 1);
        for (unsigned d = 1; d <= 5000; ++d) {
            if (d % 3 == 0) continue;
            CHECK(stratum_member(3, d, 1) == (expected.count(d) > 0));
        }
    }
    SUBCASE("p = 5, m = 2: only d = 2") {
        for (unsigned d = 1; d <= 5000; ++d) {
            if (d % 5 == 0) continue;
            CHECK(stratum_member(5, d, 2) == (d == 2));
        }
    }
    SUBCASE("p = 2, m = 2: empty") {
        for (unsigned d = 1; d <= 5000; d += 2) CHECK_FALSE(stratum_member(2, d, 2));
    }
    SUBCASE("p = 3, m = 2: empty") {
        for (unsigned d = 1; d <= 5000; ++d) {
            if (d % 3 == 0) continue;
            CHECK_FALSE(stratum_member(3, d, 2));
        }
    }
    SUBCASE("p = 5, m = 1: d in {1, 3} or d = 5^a - 1") {
        std::set<unsigned> expected = {1, 3};
        for (unsigned v = 5; v - 1 <= 5000; v *= 5) expected.insert(v - 1);
        for (unsigned d = 1; d <= 5000; ++d) {
            if (d % 5 == 0) continue;
            CHECK(stratum_member(5, d, 1) == (expected.count(d) > 0));
        }
    }
}
