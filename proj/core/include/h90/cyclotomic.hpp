#pragma once

#include <optional>

#include "h90/quotient.hpp"

namespace h90 {

/* Report row for one (e, Q): the count N_e(Q), the main term (Q-2)/e^2, the
 * Jacobi bound (e^2-1) sqrt(Q) / e^2, and the closed-formula value when one
 * exists for the index. */
struct CycloReport {
    unsigned e = 0;
    std::uint64_t p = 0;
    unsigned j = 1;  // Q = p^j
    BigInt Q;
    long long count = 0;
    Rational main_term;
    double bound = 0.0;
    std::optional<long long> formula_value;
    bool within_bound = false;
    bool formula_matches = false;
};

// N_e(Q) = #{x in H : -1-x in H}, H the index-e subgroup of F_Q^*.
// Pure count; requires e | Q-1.
long long cyclo_defect_count(unsigned e, std::uint64_t p, unsigned j);

// Count plus the degree cross-assertion deg h_{(Q-1)/e} = (Q-1)/e - N_e(Q).
long long cyclo_defect(unsigned e, std::uint64_t p, unsigned j);

// e = 1, 2: exact closed-formula comparison.  e = 3: numeric Jacobi-sum
// reconstruction within 0.49 of the integer count plus the 2 sqrt(Q)/9 bound.
CycloReport index_formula_check(unsigned e, std::uint64_t p, unsigned j);

// |N_e(Q) - (Q-2)/e^2| <= (e^2-1) sqrt(Q) / e^2, verified exactly by squaring.
bool jacobi_bound_check(unsigned e, std::uint64_t p, unsigned j);

struct FixedIndexBound {
    double lower_bound = 0.0;       // ((e-1)Q + (2-e) - (e^2-1) sqrt(Q)) / e^2
    long long degree = 0;           // deg h_{(Q-1)/e}
    bool satisfied = false;         // degree >= lower bound, checked exactly
    std::optional<double> t_bound;  // root bound on sqrt(Q) given a cap M on the degree
};

FixedIndexBound fixed_index_bound(unsigned e, std::uint64_t p, unsigned j,
                                  std::optional<long long> M = std::nullopt);

}  // namespace h90
