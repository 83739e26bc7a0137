#include <doctest.h>

#include "h90/descent.hpp"
#include "h90/quotient.hpp"

using namespace h90;

TEST_CASE("raw quotient pairs") {
    FieldCtxPtr Q = FieldCtx::rationals();
    auto [n1, d1] = raw_quotient(0, 1);
    CHECK(n1 == Poly::from_ints(Q, {-1, -2}));
    CHECK(d1 == Poly::from_ints(Q, {-1, 1}));
    auto [n2, d2] = raw_quotient(0, 2);
    CHECK(n2 == Poly::from_ints(Q, {1, 2}));
    CHECK(d2 == Poly::from_ints(Q, {-1, 0, 1}));
    // characteristic two: all signs collapse to (z+1)^d + z^d
    FieldCtxPtr F2 = FieldCtx::prime(2);
    for (unsigned d : {3u, 4u, 7u, 10u}) {
        auto [nd, dd] = raw_quotient(2, d);
        Poly direct = Poly::from_ints(F2, {1, 1}).pow(d) + Poly::monomial(F2, d, F2->one());
        CHECK(nd == direct);
    }
}

TEST_CASE("reduced quotients: recorded cases") {
    SUBCASE("(11, 5): the sporadic degree-two case") {
        QuotientRecord rec = reduce_quotient(11, 5);
        FieldCtxPtr F = FieldCtx::prime(11);
        CHECK(rec.degree == 2);
        CHECK(rec.defect == 3);
        CHECK(rec.reduced == RatFunc(Poly::from_ints(F, {1, -2, -2}), Poly::from_ints(F, {1, 4, 1})));
    }
    SUBCASE("(0, 6): defect two") {
        QuotientRecord rec = reduce_quotient(0, 6);
        CHECK(rec.degree == 4);
        CHECK(rec.defect == 2);
    }
    SUBCASE("(2, 7): the Mersenne collapse to 1/(z+1)") {
        QuotientRecord rec = reduce_quotient(2, 7);
        FieldCtxPtr F = FieldCtx::prime(2);
        CHECK(rec.degree == 1);
        CHECK(rec.reduced == RatFunc(Poly::from_ints(F, {1}), Poly::from_ints(F, {1, 1})));
    }
    SUBCASE("(3, 1): constant quotient") {
        QuotientRecord rec = reduce_quotient(3, 1);
        CHECK(rec.constant);
        CHECK(rec.degree == 0);
    }
}

TEST_CASE("torsion defect: closed values and the wild scaling") {
    CHECK(torsion_defect(0, 6) == 2);
    CHECK(torsion_defect(7, 5) == 0);
    CHECK(reduce_quotient(7, 5).degree == 5);
    // (3, 6): 3 times the tame defect of d0 = 2; the tame part by hand:
    // mu_2 = {1, -1} in F_3, tau(1) = -2 = 1 lies in mu_2, tau(-1) = 0 does not
    unsigned tame_by_hand = 1;
    CHECK(torsion_defect(3, 6) == 3 * tame_by_hand);
    CHECK(torsion_defect(3, 2) == tame_by_hand);
}

TEST_CASE("degree equals d minus defect across the tame window") {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        for (unsigned d = 1; d <= 40; ++d) {
            if (d % p == 0) continue;
            QuotientRecord rec = reduce_quotient(p, d);
            CHECK(rec.degree == d - torsion_defect(p, d));
            // the reduced denominator carries the full morphism degree
            CHECK(static_cast<unsigned>(rec.reduced.den().degree()) == rec.separable_degree);
        }
    }
    for (unsigned d = 1; d <= 60; ++d) {
        QuotientRecord rec = reduce_quotient(0, d);
        CHECK(rec.degree == d - torsion_defect(0, d));
        CHECK(rec.degree != 3);
    }
}

TEST_CASE("p-power split and functional verification") {
    auto [s, d0] = split_p_power(3, 6);
    CHECK(s == 1);
    CHECK(d0 == 2);
    CHECK(p_power_split(3, 6).ok());
    CHECK(p_power_split(2, 12).ok());  // P_12 = P_3^4 pointwise
    CHECK(p_power_split(5, 7).ok());   // identity case s = 0
    CHECK(p_power_split(2, 12).s == 2);
    CHECK(p_power_split(2, 12).d0 == 3);

    // degree scaling: deg h_{p^s d0} = p^s deg h_{d0}
    for (std::uint64_t p : {2, 3, 5, 7}) {
        for (unsigned s2 = 0; s2 <= 2; ++s2) {
            unsigned ps = 1;
            for (unsigned i = 0; i < s2; ++i) ps *= static_cast<unsigned>(p);
            for (unsigned d0v = 1; d0v <= 12; ++d0v) {
                if (d0v % p == 0) continue;
                QuotientRecord full = reduce_quotient(p, ps * d0v);
                QuotientRecord part = reduce_quotient(p, d0v);
                CHECK(full.degree == ps * part.degree);
            }
        }
    }
}

TEST_CASE("tau equivariance") {
    FieldCtxPtr Q = FieldCtx::rationals();
    CHECK(check_tau_equivariant(RatFunc::identity(Q)));
    CHECK_FALSE(check_tau_equivariant(RatFunc::from_poly(Poly::monomial(Q, 2, Q->one()))));
    CHECK_THROWS_AS(check_tau_equivariant(RatFunc::constant(Q->one())), std::invalid_argument);
    for (std::uint64_t p : {0, 2, 3, 5, 7, 11}) {
        for (unsigned d = 1; d <= 30; ++d) {
            QuotientRecord rec = reduce_quotient(p, d);
            if (rec.constant) continue;
            CHECK(check_tau_equivariant(rec.reduced));
        }
    }
}

TEST_CASE("degree-one stratum over F_2 up to 127") {
    std::vector<unsigned> got;
    for (unsigned d = 1; d <= 127; d += 2)
        if (reduce_quotient(2, d).degree == 1) got.push_back(d);
    CHECK(got == std::vector<unsigned>({1, 3, 7, 15, 31, 63, 127}));
}

TEST_CASE("Mobius algebra") {
    FieldCtxPtr F = FieldCtx::prime(19);
    Mobius tau = Mobius::tau(F);
    Mobius tau2 = tau * tau;
    CHECK((tau * tau2).proj_equal(Mobius::identity(F)));
    CHECK_FALSE(tau.proj_equal(Mobius::identity(F)));
    // tau_x is phi tau phi^{-1}
    Mobius phi = Mobius::phi(F);
    CHECK((phi * tau * phi.inverse()).proj_equal(Mobius::tau_x(F)));
    // cube of the normalized matrices is the identity on the nose
    Mobius tx = Mobius::tau_x(F);
    Mobius tx3 = tx * tx * tx;
    CHECK(tx3.a() == F->one());
    CHECK(tx3.b().is_zero());
    CHECK(tx3.c().is_zero());
    CHECK(tx3.d() == F->one());
    CHECK_THROWS_AS(Mobius(F->one(), F->one(), F->one(), F->one()), std::invalid_argument);
}

TEST_CASE("sparse and lacunary normal forms: recorded cases") {
    SUBCASE("p=3, a=1 (d=4): the Artin-Schreier form -(u^3 + u + 1)") {
        NormalFormResult nf = conjugate_normal_form(3, NormalFormBranch::plus, 1);
        FieldCtxPtr F = FieldCtx::prime(3);
        CHECK(nf.equal);
        CHECK(nf.closed_form == RatFunc(Poly::from_ints(F, {-1, -1, 0, -1}), Poly::from_ints(F, {1})));
    }
    SUBCASE("p=5, a=1 (d=11): degree eleven with the two-branch form") {
        NormalFormResult nf = conjugate_normal_form(5, NormalFormBranch::lacunary, 1);
        CHECK(nf.equal);
        CHECK(nf.degree == 11);
        CHECK(nf.d == 11);
    }
    SUBCASE("p=7, a=1 (d=15): separable degree thirteen") {
        NormalFormResult nf = conjugate_normal_form(7, NormalFormBranch::lacunary, 1);
        CHECK(nf.equal);
        CHECK(nf.separable_degree == 13);
        CHECK(nf.degree == 13);
    }
    SUBCASE("minus branch collapses to the order-three automorphism") {
        for (std::uint64_t p : {2, 3, 5, 7}) {
            NormalFormResult nf = conjugate_normal_form(p, NormalFormBranch::minus, 1);
            CHECK(nf.equal);
            CHECK(nf.degree == 1);
        }
    }
    SUBCASE("lacunary branch rejects characteristics two and three") {
        CHECK_THROWS_AS(conjugate_normal_form(2, NormalFormBranch::lacunary, 1),
                        std::invalid_argument);
        CHECK_THROWS_AS(conjugate_normal_form(3, NormalFormBranch::lacunary, 1),
                        std::invalid_argument);
    }
}
