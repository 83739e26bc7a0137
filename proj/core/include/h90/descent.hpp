#pragma once

#include "h90/quotient.hpp"

namespace h90 {

/* Gamma_{n,q} = kernel of the trace from F_{q^n} to F_q; size q^{n-1}. */
struct TraceZeroSet {
    std::uint64_t p = 0;
    unsigned k = 0;  // q = p^k
    unsigned n = 3;
    FieldCtxPtr ambient;  // F_{p^{kn}}
    std::vector<FElem> elements;
    BigInt q() const { return pow_u64(p, k); }
};

TraceZeroSet build_trace_zero(std::uint64_t p, unsigned k, unsigned n = 3,
                              std::uint64_t guard = kDefaultGuard);

/* Lambda_q: the q+1 roots of z^{q+1} + z + 1 in F_{q^3}, equivalently the
 * fixed points of tau^{-1} Frob_q on the projective line. */
struct TwistedSet {
    std::uint64_t p = 0;
    unsigned k = 0;
    FieldCtxPtr ambient;  // F_{p^{3k}}
    std::vector<FElem> elements;
};

// Construction is by direct enumeration when F_{q^3} fits under the guard,
// otherwise through an explicit trivialization g with g^(q) = T g, which maps
// P^1(F_q) bijectively onto the fixed set.  Every point is verified on the
// defining polynomial and the count q+1 is asserted.
TwistedSet build_twisted_set(std::uint64_t p, unsigned k,
                             std::uint64_t guard = kDefaultGuard);

// x^{q-1}; requires x nonzero with zero trace.
FElem lambda_map(const FElem& x, std::uint64_t p, unsigned k);

// Brute-force test: P_d(x) = x^{dq} - x^d injective on Gamma_{n,q}.
bool permutes_gamma(unsigned d, std::uint64_t p, unsigned k, unsigned n = 3,
                    std::uint64_t guard = kDefaultGuard);

struct DescentConditions {
    bool fiber = false;              // gcd(d, q-1) = 1
    bool denominator = false;        // mu_d does not meet Lambda_q
    bool quotient_bijective = false; // h_d injective on Lambda_q
    bool all() const { return fiber && denominator && quotient_bijective; }
    std::string witness;             // colliding pair / offending point on failure
};

DescentConditions descent_conditions(unsigned d, std::uint64_t p, unsigned k,
                                     std::uint64_t guard = kDefaultGuard);

// gcd(a,k) = 1 and 3 does not divide a.
bool mersenne_check(unsigned a, unsigned k);

// Unique x in Gamma_q with P_d(x) = y for d = 2^a - 1 over q = 2^k, via the
// linear Hilbert-90 lift: w = y^{q-1}, z = tau(w), a nonzero solution of
// u^q = z u, then the scaling c = (y / P_d(u))^e with e d = 1 mod q-1.
FElem invert_mersenne(const FElem& y, unsigned a, unsigned k);

// Points of mu_d^{n-1} summing with 1 to zero, counted in the minimal field
// containing mu_d (exact cyclotomic arithmetic in characteristic zero); for
// p | d the tame count is scaled by p^s.
unsigned base_locus_count(unsigned n, unsigned d, std::uint64_t characteristic,
                          std::uint64_t guard = kDefaultGuard);

struct AllNReport {
    bool fiber = false;
    bool base_locus_clear = false;  // no twisted-fixed base-locus point
    bool quotient_bijective = false;
    bool all() const { return fiber && base_locus_clear && quotient_bijective; }
};

// Conditions of the all-dimensional quotient criterion; the caller compares
// with permutes_gamma(d, p, k, n).
AllNReport all_n_criterion(unsigned n, unsigned d, std::uint64_t p, unsigned k,
                           std::uint64_t guard = kDefaultGuard);

}  // namespace h90
