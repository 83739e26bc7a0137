#pragma once

#include <map>

#include "h90/fields.hpp"

namespace h90 {

/* Function on F_{q^3} (characteristic two) written with canonical exponents:
 * a nonconstant monomial X^e is stored under <e>_M = 1 + ((e-1) mod M) with
 * M = q^3 - 1, so the class of 0 mod M is represented by X^M, never by the
 * constant 1.  Zero coefficients are never stored. */
struct ExponentFunction {
    FieldCtxPtr ctx;  // F_{2^{3k}}
    std::uint64_t q = 0;
    std::uint64_t M = 0;
    std::map<std::uint64_t, FElem> terms;
    FElem constant;

    static ExponentFunction zero(std::uint64_t k);
    void add_term(std::uint64_t exponent, const FElem& coeff);  // canonicalizes
    bool operator==(const ExponentFunction& o) const;
    std::size_t term_count() const { return terms.size(); }
    FElem eval(const FElem& x) const;
};

std::uint64_t canonical_exponent(std::uint64_t e, std::uint64_t M);

// F^q - F: exponents multiplied by q and canonically reduced, coefficients
// Frobenius-twisted, like terms combined.
ExponentFunction delta_apply(const ExponentFunction& f);

// P_d(delta X) = delta((X^q + X)^d) for d = 2^a - 1, as a canonical
// exponent function; the oracle behind the sparsity counts.
ExponentFunction pd_delta_expansion(unsigned a, unsigned k);

// Number of nonzero length-three q-orbits in the support of P_d(delta X);
// asserts that no support lands on a q-fixed exponent class.
long long orbit_count_oracle(unsigned a, unsigned k);

// Minimum number of nonconstant monomials in an additive primitive of
// P_{2^a-1}(delta X) on F_{q^3}: with b = a mod 3k, S = q^2 + q + 1,
// R = 2^b mod S and T(j) = qj - q(2^b - 1) mod S, the count is
// |I_R symm-diff T(I_R)| / 2 (zero when b = 0).
long long min_primitive_terms(unsigned a, unsigned k);

// The sharp primitive F_0 = X^{q^2 d} + sum_{j=1}^{d-1} X^{q(d-j)+j} for the
// stable range 1 < d < q-1 (or d = 1); asserts delta(F_0) = P_d(delta X).
ExponentFunction sharp_primitive(unsigned a, unsigned k);

struct FullFieldLift {
    bool permutes = false;   // brute-force result
    bool criterion = false;  // gcd(a,k) = 1, 3 not dividing a, Tr(c) != 0
    bool agree() const { return permutes == criterion; }
};

// Brute-force permutation test of
//   (X^q - X)^d + c X^{2^m} + c^q X^{q 2^m} + c^{q^2} X^{q^2 2^m}
// on F_{q^3} against the closed criterion.
FullFieldLift fullfield_lift_check(unsigned a, unsigned m, const FElem& c, unsigned k,
                                   std::uint64_t guard = kDefaultGuard);

}  // namespace h90
