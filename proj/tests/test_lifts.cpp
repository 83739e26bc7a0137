#include <doctest.h>

#include <set>

#include "h90/lifts.hpp"

using namespace h90;

namespace {

std::set<std::uint64_t> support(const ExponentFunction& f) {
    std::set<std::uint64_t> s;
    for (const auto& [e, c] : f.terms) s.insert(e);
    return s;
}

}  // namespace

TEST_CASE("canonical exponents") {
    CHECK(canonical_exponent(511, 511) == 511);   // class 0 is represented by M
    CHECK(canonical_exponent(512, 511) == 1);
    CHECK(canonical_exponent(1536, 511) == 3);
    CHECK(canonical_exponent(1022, 511) == 511);
    CHECK_THROWS_AS(canonical_exponent(0, 511), std::invalid_argument);
}

TEST_CASE("delta on the recorded example over q = 8") {
    ExponentFunction f = ExponentFunction::zero(3);
    FElem one = f.ctx->one();
    f.add_term(192, one);
    f.add_term(17, one);
    f.add_term(10, one);
    ExponentFunction df = delta_apply(f);
    CHECK(support(df) == std::set<std::uint64_t>({192, 136, 80, 17, 10, 3}));
    for (const auto& [e, c] : df.terms) CHECK(c.is_one());
}

TEST_CASE("delta kills base-field constants") {
    ExponentFunction f = ExponentFunction::zero(2);
    // constants from F_q stay in the kernel; a generator of F_{q^3} does not
    FElem sub_one = f.ctx->one();
    f.constant = sub_one;
    ExponentFunction df = delta_apply(f);
    CHECK(df.constant.is_zero());
    CHECK(df.terms.empty());

    ExponentFunction g = ExponentFunction::zero(2);
    g.constant = g.ctx->gen();
    CHECK_FALSE(delta_apply(g).constant.is_zero());
}

TEST_CASE("delta on the top exponent class") {
    // the class of 0 mod M is q-fixed: delta(alpha X^M) = (alpha^q + alpha) X^M
    ExponentFunction f = ExponentFunction::zero(2);
    FElem alpha = f.ctx->gen();
    f.add_term(f.M, alpha);
    ExponentFunction df = delta_apply(f);
    FElem expected = frobenius_q(alpha, 2, 1) + alpha;
    if (expected.is_zero()) {
        CHECK(df.terms.empty());
    } else {
        REQUIRE(df.terms.size() == 1);
        CHECK(df.terms.begin()->first == f.M);
        CHECK(df.terms.begin()->second == expected);
    }
}

TEST_CASE("sharp primitive") {
    SUBCASE("(q, d) = (8, 3): the recorded three monomials") {
        ExponentFunction f0 = sharp_primitive(2, 3);
        CHECK(support(f0) == std::set<std::uint64_t>({192, 17, 10}));
    }
    SUBCASE("d = 1: F_0 = X^{q^2} with delta(F_0) = X^{q^2} + X") {
        ExponentFunction f0 = sharp_primitive(1, 2);
        CHECK(support(f0) == std::set<std::uint64_t>({16}));
        ExponentFunction df = delta_apply(f0);
        CHECK(support(df) == std::set<std::uint64_t>({16, 1}));
    }
    SUBCASE("unstable range is rejected") {
        // d = q - 1 = 3 at k = 2
        CHECK_THROWS_AS(sharp_primitive(2, 2), std::invalid_argument);
    }
    SUBCASE("stable range satisfies the sharp count") {
        for (unsigned k = 3; k <= 4; ++k)
            for (unsigned a = 2; (1u << a) - 1u < (1u << k) - 1u; ++a) {
                ExponentFunction f0 = sharp_primitive(a, k);
                CHECK(f0.term_count() == (1u << a) - 1u);
            }
    }
}

TEST_CASE("minimum primitive terms: formula equals the orbit oracle") {
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned a = 1; a <= 3 * k + 3; ++a)
            CHECK(min_primitive_terms(a, k) == orbit_count_oracle(a, k));
    // b = 0 collapses to the zero function
    CHECK(min_primitive_terms(3, 1) == 0);
    CHECK(min_primitive_terms(6, 2) == 0);
    // 0 < b <= k gives 2^b - 1
    CHECK(min_primitive_terms(2, 3) == 3);
    CHECK(min_primitive_terms(1, 4) == 1);
    CHECK(min_primitive_terms(13, 4) == 1);  // b = 1
}

TEST_CASE("delta image has zero trace pointwise") {
    for (unsigned k : {1u, 2u}) {
        ExponentFunction f = ExponentFunction::zero(k);
        FElem g = f.ctx->gen();
        f.add_term(3, g);
        f.add_term(7, f.ctx->one());
        f.constant = g * g;
        ExponentFunction df = delta_apply(f);
        for (BigInt idx = 0; idx < f.ctx->order(); ++idx) {
            FElem x = f.ctx->element_at(idx);
            CHECK(ext_trace(df.eval(x), k).is_zero());
        }
    }
}

TEST_CASE("full-field lifts match the closed criterion") {
    for (unsigned k : {1u, 2u, 3u}) {
        FieldCtxPtr L = FieldCtx::extension(2, 3 * k);
        std::vector<FElem> cs;
        for (unsigned i = 0; i < 3 * k; ++i) {
            std::vector<std::uint64_t> v(i + 1, 0);
            v[i] = 1;
            cs.push_back(L->from_coeffs(v));
        }
        for (unsigned a = 1; a <= 4; ++a)
            for (unsigned m = 0; m <= 2; ++m)
                for (const auto& c : cs) {
                    FullFieldLift lift = fullfield_lift_check(a, m, c, k);
                    CHECK(lift.agree());
                }
    }
    // zero trace never permutes
    FieldCtxPtr L = FieldCtx::extension(2, 6);
    for (BigInt idx = 0; idx < L->order(); ++idx) {
        FElem c = L->element_at(idx);
        if (!ext_trace(c, 2).is_zero()) continue;
        FullFieldLift lift = fullfield_lift_check(1, 0, c, 2);
        CHECK_FALSE(lift.permutes);
    }
    // a divisible by three never permutes
    FElem good = L->gen();
    while (ext_trace(good, 2).is_zero()) good = good * L->gen();
    CHECK_FALSE(fullfield_lift_check(3, 0, good, 2).permutes);
}
