#pragma once

#include "h90/quotient.hpp"

namespace h90 {

/* Wronskian, skeleton, branch polynomial, and Morse data attached to one
 * reduced quotient (the separable part in wild characteristic). */
struct BranchData {
    std::uint64_t characteristic = 0;
    unsigned d = 0;
    Poly wronskian;            // n' den - n den' for the reduced pair
    Poly skeleton;             // F_d(z) = z^{d-1} - (-1)^d (z+1)^{d-1} (z^{d-1} + 1)
    Poly branch_poly;          // B(T) = Res_z(n - T den, W)
    bool morse = false;        // branch polynomial squarefree
    std::vector<FElem> simple_values;  // multiplicity-one roots in the base field
    bool infinity_unramified = false;
    bool infinity_branch_value = false;  // infinity is a branch value
};

// Reduced Wronskian of a quotient record; a zero result signals
// inseparability and is returned for the caller to report.
Poly wronskian(const QuotientRecord& rec);

// Skeleton F_d over the requested field.
Poly skeleton_poly(std::uint64_t characteristic, unsigned d);

struct SkeletonChecks {
    bool derivative_identity = false;  // N'D - ND' = d F_d (tame only)
    bool cancellation_identity = false;  // N'D - ND' = C^2 W
    bool frobenius_identity = false;  // F_d = F_{e+1}^{p^s} when d-1 = p^s e (vacuously true otherwise)
};

SkeletonChecks skeleton_identities(std::uint64_t characteristic, unsigned d);

// Branch data for h_d; requires a nonconstant separable reduced quotient of
// degree > 1.
BranchData branch_polynomial(std::uint64_t characteristic, unsigned d);
// Same machinery for an arbitrary reduced rational function.
BranchData branch_data_of(const RatFunc& f);

struct CrossRatioScan {
    unsigned m = 0;
    std::vector<std::pair<unsigned, unsigned>> violations;  // (r, s) exponent pairs
    double min_residual = 0.0;
};

// Scans all nondegenerate pairs of m-th roots of unity against the
// critical-value collision equation in complex double precision.
CrossRatioScan crossratio_scan(unsigned m, double tolerance = 1e-6);

struct LacunaryProfile {
    unsigned d = 0;
    unsigned degree = 0;             // 2r-1 or 2r+1
    unsigned r = 0;                  // p^a
    unsigned wild_pole_mult = 0;     // r
    unsigned simple_pole_count = 0;  // degree - r
    unsigned different_exponent = 0; // 2r-2 if r = 1 mod 3, else 2r
    bool branch_values_zero_infinity = false;
    bool primitive_certificate = false;  // gcd(r, degree) = 1 and pole pattern
    bool normal_form_equal = false;
};

// Ramification profile of the first nonsparse lacunary branch d = 2 p^a + 1;
// requires p not in {2, 3}.
LacunaryProfile lacunary_profile(std::uint64_t p, unsigned a);

// Product of the reduction-obstruction factors of the characteristic-zero
// quotient: d(d-1), the infinity derivative numerator, Res(n, den),
// disc(den), Res(W, den), disc(W), disc(B), and the leading coefficients.
// Requires degree > 1.
BigInt good_reduction_modulus(unsigned d);

}  // namespace h90
