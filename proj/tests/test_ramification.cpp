#include <doctest.h>

#include <set>

#include "h90/ramification.hpp"

using namespace h90;

TEST_CASE("Wronskian: recorded factorizations") {
    SUBCASE("(2, 11)") {
        FieldCtxPtr F = FieldCtx::prime(2);
        Poly w = wronskian(reduce_quotient(2, 11));
        Poly q1 = Poly::from_ints(F, {1, 1, 1});
        Poly c1 = Poly::from_ints(F, {1, 1, 0, 1});
        Poly c2 = Poly::from_ints(F, {1, 0, 1, 1});
        CHECK(w == q1.pow(4) * c1.pow(2) * c2.pow(2));
    }
    SUBCASE("(2, 13)") {
        FieldCtxPtr F = FieldCtx::prime(2);
        Poly w = wronskian(reduce_quotient(2, 13));
        Poly c1 = Poly::from_ints(F, {1, 1, 0, 1});
        Poly c2 = Poly::from_ints(F, {1, 0, 1, 1});
        CHECK(w == c1.pow(4) * c2.pow(4));
    }
    SUBCASE("(7, 5)") {
        FieldCtxPtr F = FieldCtx::prime(7);
        Poly w = wronskian(reduce_quotient(7, 5));
        Poly expected = Poly::from_ints(F, {-2}) * Poly::from_ints(F, {-2, 1}) *
                        Poly::from_ints(F, {3, 1}) * Poly::from_ints(F, {1, 0, 1}) *
                        Poly::from_ints(F, {-3, 1, 1}) * Poly::from_ints(F, {2, 2, 1});
        CHECK(w == expected);
    }
    SUBCASE("constant quotient is rejected") {
        CHECK_THROWS_AS(wronskian(reduce_quotient(3, 1)), std::invalid_argument);
    }
}

TEST_CASE("skeleton identities") {
    SUBCASE("exact symbolic identities across the tame sweep") {
        for (std::uint64_t p : {0, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
            for (unsigned d = 2; d <= 40; ++d) {
                if (p > 0 && d % p == 0) continue;
                SkeletonChecks sc = skeleton_identities(p, d);
                CHECK(sc.derivative_identity);
                CHECK(sc.cancellation_identity);
                CHECK(sc.frobenius_identity);
            }
        }
    }
    SUBCASE("(2, 13): F_13 = F_4^4") {
        Poly f13 = skeleton_poly(2, 13);
        Poly f4 = skeleton_poly(2, 4);
        CHECK(f13 == f4.frobenius_power(2));
    }
    SUBCASE("(5, 7) and (3, 5) recorded identities") {
        CHECK(skeleton_identities(5, 7).derivative_identity);
        SkeletonChecks sc = skeleton_identities(3, 5);
        CHECK(sc.derivative_identity);
        CHECK(sc.cancellation_identity);
        CHECK(sc.frobenius_identity);  // vacuous: 3 does not divide 4
    }
}

TEST_CASE("branch polynomial and Morse detection") {
    SUBCASE("(7, 5): not Morse, simple values {2, -3}") {
        BranchData bd = branch_polynomial(7, 5);
        FieldCtxPtr F = FieldCtx::prime(7);
        CHECK_FALSE(bd.morse);
        REQUIRE(bd.simple_values.size() == 2);
        std::set<std::string> got = {bd.simple_values[0].key(), bd.simple_values[1].key()};
        std::set<std::string> want = {F->from_int(2).key(), F->from_int(-3).key()};
        CHECK(got == want);
        CHECK(bd.infinity_unramified);
    }
    SUBCASE("(0, 7): Morse over the rationals") {
        BranchData bd = branch_polynomial(0, 7);
        CHECK(bd.morse);
        CHECK(bd.infinity_unramified);
    }
    SUBCASE("degree-one quotients are rejected") {
        CHECK_THROWS_AS(branch_polynomial(2, 7), std::invalid_argument);
        CHECK_THROWS_AS(branch_polynomial(0, 1), std::invalid_argument);
    }
    SUBCASE("characteristic zero is Morse through d = 25") {
        for (unsigned d = 2; d <= 25; ++d) {
            QuotientRecord rec = reduce_quotient(0, d);
            if (rec.degree <= 1) continue;
            BranchData bd = branch_polynomial(0, d);
            CHECK(bd.morse);
            // finite critical points simple, and exactly one branch value per
            // finite critical point
            Poly w = bd.wronskian;
            CHECK(poly_gcd(w, w.derivative()).degree() == 0);
            CHECK(bd.branch_poly.degree() == w.degree());
            CHECK(bd.infinity_unramified);
        }
    }
    SUBCASE("no multiple Wronskian roots away from cancellation, tame window") {
        for (std::uint64_t p : {5, 7, 11, 13}) {
            for (unsigned d = 2; d <= 30; ++d) {
                if (d % p == 0 || (d - 1) % p == 0) continue;
                QuotientRecord rec = reduce_quotient(p, d);
                if (rec.degree <= 1) continue;
                Poly w = wronskian(rec);
                REQUIRE_FALSE(w.is_zero());
                Poly wp = w.derivative();
                if (wp.is_zero()) continue;  // wild thickening, outside this window
                Poly g = poly_gcd(w, wp);
                // multiple roots may only sit at canceled points
                if (g.degree() > 0) CHECK(poly_gcd(g, rec.cancel).degree() == g.degree());
                CHECK(rec.reduced.ramification_index(ProjPoint::infinity(w.ctx())) == 1);
            }
        }
    }
}

TEST_CASE("cross-ratio scan") {
    CHECK(crossratio_scan(3).violations.empty());
    CHECK(crossratio_scan(4).violations.empty());
    for (unsigned m = 2; m <= 30; ++m) {
        CrossRatioScan scan = crossratio_scan(m);
        CHECK(scan.violations.empty());
        if (m >= 3) CHECK(scan.min_residual >= 1e-3);
    }
    CHECK_THROWS_AS(crossratio_scan(1), std::invalid_argument);
}

TEST_CASE("lacunary profiles: recorded cases") {
    SUBCASE("(7, 1): degree 13, different exponent 12") {
        LacunaryProfile prof = lacunary_profile(7, 1);
        CHECK(prof.degree == 13);
        CHECK(prof.different_exponent == 12);
        CHECK(prof.branch_values_zero_infinity);
        CHECK(prof.primitive_certificate);
    }
    SUBCASE("(5, 1): degree 11, different exponent 10, pole pattern 5P + 6 points") {
        LacunaryProfile prof = lacunary_profile(5, 1);
        CHECK(prof.degree == 11);
        CHECK(prof.different_exponent == 10);
        CHECK(prof.wild_pole_mult == 5);
        CHECK(prof.simple_pole_count == 6);
        CHECK(gcd_u64(prof.wild_pole_mult, prof.degree) == 1);
    }
    SUBCASE("characteristics two and three are rejected") {
        CHECK_THROWS_AS(lacunary_profile(2, 1), std::invalid_argument);
        CHECK_THROWS_AS(lacunary_profile(3, 1), std::invalid_argument);
    }
    SUBCASE("the a = 2 tower keeps the exact different") {
        for (std::uint64_t p : {5, 7, 11, 13}) {
            LacunaryProfile prof = lacunary_profile(p, 2);
            unsigned r = prof.r;
            CHECK(prof.different_exponent == ((r % 3 == 1) ? 2 * r - 2 : 2 * r));
            CHECK(prof.degree == ((r % 3 == 1) ? 2 * r - 1 : 2 * r + 1));
        }
    }
}

TEST_CASE("good-reduction modulus") {
    SUBCASE("d = 2: primes outside the modulus give Morse reductions") {
        BigInt m2 = good_reduction_modulus(2);
        CHECK(m2 != 0);
        for (std::uint64_t p : primes_up_to(31)) {
            if (m2 % static_cast<unsigned long>(p) == 0) continue;
            BranchData bd = branch_polynomial(p, 2);
            CHECK(bd.morse);
        }
    }
    SUBCASE("d = 4: same property") {
        BigInt m4 = good_reduction_modulus(4);
        CHECK(m4 != 0);
        for (std::uint64_t p : primes_up_to(31)) {
            if (m4 % static_cast<unsigned long>(p) == 0) continue;
            if (4 % p == 0) continue;
            BranchData bd = branch_polynomial(p, 4);
            CHECK(bd.morse);
        }
    }
    SUBCASE("7 divides M_5 because (7, 5) is a bad Morse reduction") {
        BigInt m5 = good_reduction_modulus(5);
        CHECK(m5 % 7 == 0);
    }
    SUBCASE("degree-one inputs are rejected") {
        CHECK_THROWS_AS(good_reduction_modulus(1), std::invalid_argument);
        CHECK_THROWS_AS(good_reduction_modulus(3), std::invalid_argument);
    }
}
