#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "h90/descent.hpp"

using namespace h90;

TEST_CASE("twisted sets: sizes and the defining polynomial") {
    SUBCASE("q = 2: the three roots of z^3 + z + 1 in F_8") {
        TwistedSet lam = build_twisted_set(2, 1);
        CHECK(lam.elements.size() == 3);
        FieldCtxPtr L = lam.ambient;
        // independent enumeration of F_8
        std::set<std::string> expected;
        for (int i = 0; i < 8; ++i) {
            FElem z = L->element_at(i);
            if ((z * z * z + z + L->one()).is_zero()) expected.insert(z.key());
        }
        std::set<std::string> got;
        for (const auto& z : lam.elements) got.insert(z.key());
        CHECK(got == expected);
    }
    SUBCASE("q = 4 has five points") {
        CHECK(build_twisted_set(2, 2).elements.size() == 5);
    }
    SUBCASE("sizes q + 1 through q = 32") {
        for (auto [p, k] : prime_powers_up_to(32)) {
            TwistedSet lam = build_twisted_set(p, k);
            BigInt q = pow_u64(p, k);
            CHECK(BigInt(static_cast<unsigned long>(lam.elements.size())) == q + 1);
            // 0 and -1 are never twisted fixed points
            for (const auto& z : lam.elements) {
                CHECK_FALSE(z.is_zero());
                CHECK_FALSE((z + lam.ambient->one()).is_zero());
            }
        }
    }
    SUBCASE("trivialized construction agrees with direct enumeration") {
        // q = 8: F_{2^9} = 512 elements; force the trivialization by lowering
        // the enumeration threshold via a large field where both still run
        TwistedSet direct = build_twisted_set(2, 3, kDefaultGuard);
        // same set computed through the trivialization path: guard below 2^9
        // but above q + 1 = 9 would make the direct path unavailable; build
        // through a fresh call with the ambient order above the guard
        TwistedSet trivialized = build_twisted_set(2, 3, 100);
        std::set<std::string> a, b;
        for (const auto& z : direct.elements) a.insert(z.key());
        for (const auto& z : trivialized.elements) b.insert(z.key());
        CHECK(a == b);
    }
}

TEST_CASE("norm one on the twisted set") {
    for (auto [p, k] : prime_powers_up_to(16)) {
        TwistedSet lam = build_twisted_set(p, k);
        for (const auto& z : lam.elements) CHECK(ext_norm(z, k).is_one());
    }
}

TEST_CASE("lambda map: fibers of size q - 1") {
    for (auto [p, k] : prime_powers_up_to(16)) {
        TraceZeroSet gamma = build_trace_zero(p, k, 3);
        BigInt q = gamma.q();
        CHECK(BigInt(static_cast<unsigned long>(gamma.elements.size())) == q * q);
        std::map<std::string, long long> fibers;
        for (const auto& x : gamma.elements) {
            if (x.is_zero()) continue;
            fibers[lambda_map(x, p, k).key()] += 1;
        }
        CHECK(BigInt(static_cast<unsigned long>(fibers.size())) == q + 1);
        for (const auto& [key, count] : fibers) CHECK(BigInt(static_cast<long>(count)) == q - 1);
    }
    // errors
    TraceZeroSet gamma = build_trace_zero(2, 2, 3);
    CHECK_THROWS_AS(lambda_map(gamma.ambient->zero(), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(lambda_map(gamma.ambient->one(), 2, 2), std::invalid_argument);
}

TEST_CASE("permutation tests: recorded cases") {
    CHECK(permutes_gamma(3, 2, 1));        // q = 2, d = 3
    CHECK_FALSE(permutes_gamma(3, 2, 2));  // q = 4 = 1 mod 3
    CHECK_FALSE(permutes_gamma(1, 3, 1));  // P_1 over characteristic 3
}

TEST_CASE("descent conditions: recorded cases and the equivalence") {
    SUBCASE("(d, q) = (15, 8): all three conditions hold") {
        DescentConditions dc = descent_conditions(15, 2, 3);
        CHECK(dc.fiber);
        CHECK(dc.denominator);
        CHECK(dc.quotient_bijective);
    }
    SUBCASE("d = 7 over 2^k: cube roots obstruct the denominator unless 3 | k") {
        // mu_7 = F_8^* meets Lambda_{2^k} exactly at the primitive cube
        // roots, which lie in the fixed set iff gcd(3, k) = 1; with
        // g = gcd(a, k) the emptiness criterion is g odd and 3 not dividing
        // a/g, so k divisible by three clears the denominator while the
        // fiber condition gcd(7, 2^k - 1) takes over
        for (unsigned k = 1; k <= 5; ++k) {
            DescentConditions dc = descent_conditions(7, 2, k);
            CHECK(dc.denominator == (k % 3 == 0));
            CHECK_FALSE(dc.all());
            CHECK_FALSE(permutes_gamma(7, 2, k));
        }
    }
    SUBCASE("(d, q) = (5, 16) fails the fiber condition") {
        DescentConditions dc = descent_conditions(5, 2, 4);
        CHECK_FALSE(dc.fiber);
    }
    SUBCASE("conjunction equals brute force") {
        for (auto [p, k] : prime_powers_up_to(9)) {
            for (unsigned d = 1; d <= 12; ++d) {
                DescentConditions dc = descent_conditions(d, p, k);
                CHECK(dc.all() == permutes_gamma(d, p, k));
            }
        }
    }
}

TEST_CASE("Mersenne family") {
    CHECK(mersenne_check(4, 3));
    CHECK_FALSE(mersenne_check(3, 5));
    CHECK_FALSE(mersenne_check(2, 4));
    for (unsigned a = 1; a <= 5; ++a)
        for (unsigned k = 1; k <= 4; ++k)
            CHECK(mersenne_check(a, k) == permutes_gamma((1u << a) - 1u, 2, k));
    // the small-exponent table: a = 1 all k, a = 2 odd k, a = 3 none,
    // a = 4 odd k, a = 5 exactly 5 not dividing k, a = 6 none
    for (unsigned k = 1; k <= 10; ++k) {
        CHECK(mersenne_check(1, k));
        CHECK(mersenne_check(2, k) == (k % 2 == 1));
        CHECK_FALSE(mersenne_check(3, k));
        CHECK(mersenne_check(4, k) == (k % 2 == 1));
        CHECK(mersenne_check(5, k) == (k % 5 != 0));
        CHECK_FALSE(mersenne_check(6, k));
    }
}

TEST_CASE("set sizes across dimensions up to q = 32") {
    for (auto [p, k] : prime_powers_up_to(32)) {
        BigInt q = pow_u64(p, k);
        for (unsigned n = 2; n <= 4; ++n) {
            TraceZeroSet gamma = build_trace_zero(p, k, n);
            BigInt expected = pow_u64(p, k * (n - 1));
            CHECK(BigInt(static_cast<unsigned long>(gamma.elements.size())) == expected);
            // contains 0 and is closed under addition on a sample
            bool has_zero = false;
            for (const auto& x : gamma.elements) has_zero = has_zero || x.is_zero();
            CHECK(has_zero);
            if (gamma.elements.size() >= 3) {
                const FElem& a = gamma.elements[1];
                const FElem& b = gamma.elements[2];
                CHECK(ext_trace(a + b, k).is_zero());
            }
        }
        CHECK(BigInt(static_cast<unsigned long>(build_twisted_set(p, k).elements.size())) ==
              q + 1);
    }
}

TEST_CASE("Mersenne inverse") {
    SUBCASE("zero maps to zero") {
        FieldCtxPtr L = FieldCtx::extension(2, 9);
        CHECK(invert_mersenne(L->zero(), 4, 3).is_zero());
    }
    SUBCASE("round-trips on seeded random inputs") {
        std::mt19937_64 rng(424242);
        for (auto [a, k] : std::vector<std::pair<unsigned, unsigned>>{{4, 3}, {2, 5}, {5, 4}, {1, 2}}) {
            REQUIRE(mersenne_check(a, k));
            TraceZeroSet gamma = build_trace_zero(2, k, 3);
            BigInt q = gamma.q();
            unsigned d = (1u << a) - 1u;
            for (int trial = 0; trial < 100; ++trial) {
                const FElem& y = gamma.elements[rng() % gamma.elements.size()];
                FElem x = invert_mersenne(y, a, k);
                CHECK(ext_trace(x, k).is_zero());
                FElem xd = x.pow(BigInt(static_cast<unsigned long>(d)));
                CHECK(xd.pow(q) - xd == y);
            }
        }
    }
    SUBCASE("q = 2 needs no scaling constant") {
        // with K* trivial the lift itself is the answer; exercised via the
        // round-trip over k = 1
        TraceZeroSet gamma = build_trace_zero(2, 1, 3);
        for (const auto& y : gamma.elements) {
            FElem x = invert_mersenne(y, 1, 1);
            FElem pd = x.pow(2) - x;
            CHECK(pd == y);
        }
    }
    SUBCASE("criterion violations are rejected") {
        FieldCtxPtr L = FieldCtx::extension(2, 9);
        CHECK_THROWS_AS(invert_mersenne(L->zero(), 3, 3), std::invalid_argument);
    }
}

TEST_CASE("base locus counts") {
    SUBCASE("n = 3 equals the torsion defect") {
        for (std::uint64_t p : {0, 2, 5, 11}) {
            for (unsigned d = 1; d <= 15; ++d) {
                if (p > 0 && d % p == 0) continue;
                CHECK(base_locus_count(3, d, p) == torsion_defect(p, d));
            }
        }
    }
    SUBCASE("n = 4, d = 2 over characteristic zero: sign-vector oracle") {
        // 1 + e1 + e2 + e3 = 0 with e_i in {1, -1}: exactly the three
        // arrangements of one +1 and two -1
        int oracle = 0;
        for (int mask = 0; mask < 8; ++mask) {
            int sum = 1;
            for (int b = 0; b < 3; ++b) sum += (mask >> b & 1) ? 1 : -1;
            if (sum == 0) ++oracle;
        }
        CHECK(oracle == 3);
        CHECK(base_locus_count(4, 2, 0) == 3);
    }
    SUBCASE("n = 4, d = 3 over characteristic zero: exact cyclotomic oracle") {
        // count tuples in mu_3^3 with 1 + u1 + u2 + u3 = 0 using Z[w],
        // w^2 = -1 - w; a value a + b w is zero iff a = b = 0
        int oracle = 0;
        auto add = [](std::pair<int, int> x, int e) {
            // add w^e for e in {0, 1, 2}
            if (e == 0) x.first += 1;
            if (e == 1) x.second += 1;
            if (e == 2) {
                x.first -= 1;
                x.second -= 1;
            }
            return x;
        };
        for (int e1 = 0; e1 < 3; ++e1)
            for (int e2 = 0; e2 < 3; ++e2)
                for (int e3 = 0; e3 < 3; ++e3) {
                    std::pair<int, int> acc{1, 0};
                    acc = add(acc, e1);
                    acc = add(acc, e2);
                    acc = add(acc, e3);
                    if (acc.first == 0 && acc.second == 0) ++oracle;
                }
        CHECK(oracle == 0);
        CHECK(base_locus_count(4, 3, 0) == 0);
    }
    SUBCASE("wild exponents scale by p^s") {
        CHECK(base_locus_count(3, 6, 3) == 3 * base_locus_count(3, 2, 3));
    }
}

TEST_CASE("all-dimensional criterion") {
    SUBCASE("n = 2, q = 3, d = 1 against the three-element plane") {
        AllNReport rep = all_n_criterion(2, 1, 3, 1);
        bool brute = permutes_gamma(1, 3, 1, 2);
        CHECK(rep.all() == brute);
        CHECK(build_trace_zero(3, 1, 2).elements.size() == 3);
    }
    SUBCASE("n = 4, q = 2, d = 1 against the eight-element kernel") {
        AllNReport rep = all_n_criterion(4, 1, 2, 1);
        bool brute = permutes_gamma(1, 2, 1, 4);
        CHECK(rep.all() == brute);
        CHECK(build_trace_zero(2, 1, 4).elements.size() == 8);
    }
    SUBCASE("n = 3 agrees with the descent conditions") {
        for (auto [p, k] : prime_powers_up_to(4)) {
            for (unsigned d = 1; d <= 10; ++d) {
                AllNReport rep = all_n_criterion(3, d, p, k);
                DescentConditions dc = descent_conditions(d, p, k);
                CHECK(rep.all() == dc.all());
            }
        }
    }
    SUBCASE("lambda_n images: one per scalar orbit, all twisted-fixed") {
        for (auto [p, k] : prime_powers_up_to(8)) {
            for (unsigned n = 2; n <= 4; ++n) {
                TraceZeroSet gamma = build_trace_zero(p, k, n);
                BigInt q = gamma.q();
                std::set<std::string> orbits;
                for (const auto& x : gamma.elements) {
                    if (x.is_zero()) continue;
                    std::string key;
                    std::vector<FElem> coords;
                    FElem c = x;
                    FElem inv = x.inv();
                    for (unsigned i = 0; i < n; ++i) {
                        coords.push_back(c * inv);
                        key += coords.back().key() + "|";
                        c = frobenius_q(c, k, 1);
                    }
                    orbits.insert(key);
                    // the point is fixed by the shifted Frobenius: the single
                    // scalar from the first coordinate works for them all
                    FElem scal = coords[0].pow(q) / coords[1 % n];
                    for (unsigned i = 0; i < n; ++i)
                        CHECK(coords[i].pow(q) == scal * coords[(i + 1) % n]);
                }
                // |Gamma*| / (q-1) = (q^{n-1} - 1)/(q - 1)
                BigInt expected = (pow_u64(p, k * (n - 1)) - 1) / (q - 1);
                CHECK(BigInt(static_cast<unsigned long>(orbits.size())) == expected);
            }
        }
    }
}
