#include <doctest.h>

#include <cmath>

#include "h90/cyclotomic.hpp"

using namespace h90;

TEST_CASE("defect counts: recorded values") {
    CHECK(cyclo_defect(1, 7, 1) == 5);   // Q - 2
    CHECK(cyclo_defect(2, 11, 1) == 3);  // (Q+1)/4 at Q = 3 mod 4
    CHECK(cyclo_defect(2, 13, 1) == 2);  // (Q-5)/4 at Q = 1 mod 4
}

TEST_CASE("index-three counts over tiny fields") {
    // Q = 7: cubes are {1, 6}; -1-1 = 5 and -1-6 = 0 are outside, so N_3 = 0
    CHECK(cyclo_defect_count(3, 7, 1) == 0);
    // Q = 4: the cube subgroup is {1}; -1-1 = 0 in characteristic two
    CHECK(cyclo_defect_count(3, 2, 2) == 0);
    CycloReport r7 = index_formula_check(3, 7, 1);
    CHECK(r7.formula_matches);
    CHECK(r7.within_bound);
    CycloReport r4 = index_formula_check(3, 2, 2);
    CHECK(r4.formula_matches);
}

TEST_CASE("closed formulas for indices one and two") {
    for (auto [p, j] : prime_powers_up_to(500)) {
        if (p == 2) continue;
        CHECK(index_formula_check(1, p, j).formula_matches);
        CHECK(index_formula_check(2, p, j).formula_matches);
    }
    // formula value equals the direct count at Q = 11
    CycloReport r = index_formula_check(2, 11, 1);
    CHECK(r.count == 3);
    CHECK(*r.formula_value == 3);
}

TEST_CASE("Jacobi bound") {
    CHECK(jacobi_bound_check(2, 101, 1));
    CHECK(jacobi_bound_check(4, 97, 1));
    for (auto [p, j] : prime_powers_up_to(300)) {
        BigInt Q = pow_u64(p, j);
        for (unsigned e = 1; e <= 6; ++e) {
            if ((Q - 1) % e != 0) continue;
            CHECK(jacobi_bound_check(e, p, j));
        }
    }
    // e = 1 attains the main term exactly
    for (auto [p, j] : prime_powers_up_to(200)) {
        BigInt Q = pow_u64(p, j);
        CHECK(cyclo_defect_count(1, p, j) == BigInt(Q - 2).get_si());
    }
}

TEST_CASE("full-unit index gives degree one") {
    for (auto [p, j] : prime_powers_up_to(200)) {
        BigInt Q = pow_u64(p, j);
        if (Q < 3) continue;
        BigInt dmax = Q - 1;
        QuotientRecord rec = reduce_quotient(p, static_cast<unsigned>(dmax.get_ui()));
        CHECK(rec.degree == 1);
    }
}

TEST_CASE("fixed-index lower bound") {
    SUBCASE("e = 2, Q = 49: degree 13 meets the bound") {
        FixedIndexBound b = fixed_index_bound(2, 7, 2);
        CHECK(b.degree == 13);  // (Q + 3)/4
        CHECK(b.satisfied);
    }
    SUBCASE("e = 3, Q = 13") {
        FixedIndexBound b = fixed_index_bound(3, 13, 1);
        CHECK(b.degree == static_cast<long long>(reduce_quotient(13, 4).degree));
        CHECK(b.satisfied);
    }
    SUBCASE("degree at most two in the index-two tower only at Q in {3,5,7,11}") {
        std::vector<std::uint64_t> low;
        for (auto [p, j] : prime_powers_up_to(200)) {
            if (p == 2) continue;
            BigInt Q = pow_u64(p, j);
            BigInt d = (Q - 1) / 2;
            if (d == 0) continue;
            if (reduce_quotient(p, static_cast<unsigned>(d.get_ui())).degree <= 2)
                low.push_back(Q.get_ui());
        }
        CHECK(low == std::vector<std::uint64_t>({3, 5, 7, 11}));
    }
    SUBCASE("bound holds across the small sweep") {
        for (auto [p, j] : prime_powers_up_to(120)) {
            BigInt Q = pow_u64(p, j);
            for (unsigned e = 2; e <= 4; ++e) {
                if ((Q - 1) % e != 0) continue;
                CHECK(fixed_index_bound(e, p, j).satisfied);
            }
        }
        // the root bound is exposed when a degree cap is supplied
        FixedIndexBound b = fixed_index_bound(2, 11, 1, 5);
        CHECK(b.t_bound.has_value());
        CHECK(*b.t_bound >= std::sqrt(11.0) - 1e-9);
    }
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(cyclo_defect_count(5, 7, 1), std::invalid_argument);   // 5 does not divide 6
    CHECK_THROWS_AS(index_formula_check(2, 2, 3), std::invalid_argument);  // even Q
    CHECK_THROWS_AS(fixed_index_bound(1, 7, 1), std::invalid_argument);    // e >= 2
}
