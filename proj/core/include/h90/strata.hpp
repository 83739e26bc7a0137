#pragma once

#include "h90/fields.hpp"

namespace h90 {

/* Finite linear test for the fixed quotient-degree strata: deg h_d <= m iff
 * the coefficient system Q N_d = P D_d with deg P, deg Q <= m has a kernel
 * vector with nonzero Q-part.  Decided by comparing the kernel dimension of
 * the full (d+m+1) x (2m+2) matrix with that of its P-column submatrix. */

// p = 0 works over exact rationals; p > 0 requires p not dividing d.
bool linear_stratum_test(std::uint64_t p, unsigned d, unsigned m);

// All tame d <= d_max with deg h_d exactly m, checked against the computed
// quotient degrees.
std::vector<unsigned> enumerate_stratum(std::uint64_t p, unsigned m, unsigned d_max,
                                        std::uint64_t guard = 10000);

// Membership test alone (no cross-check); exposed for large smoke sweeps.
bool stratum_member(std::uint64_t p, unsigned d, unsigned m);

}  // namespace h90
