#pragma once

#include "h90/descent.hpp"
#include "h90/ramification.hpp"

namespace h90 {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // failure detail, empty on success
};

struct CertificateReport {
    std::string case_id;     // "11-5", "19-6", "7-5"
    std::string headline;    // the success line printed on a pass
    std::vector<CheckResult> checks;
    bool overall = false;
};

// Degree-two quotient in characteristic 11: gcd, reduced pair, coprimality,
// degree.
CertificateReport certify_11_5();

// Klein-four quotient in characteristic 19: reduction of K_6, the conjugated
// self-map, the four deck transformations with their group law, the
// tau-conjugation three-cycle, equivariance, fixed-point quadratics, and the
// branch-point exclusions.
CertificateReport certify_19_6();

// Bad Morse reduction in characteristic 7, d = 5: coprime raw pair, degree,
// Wronskian and branch-polynomial factorizations, simple branch values.
CertificateReport certify_7_5();

std::vector<CertificateReport> certify_all();

// Success-line block for a set of reports (the version line is emitted by the
// command-line tool and excluded from comparisons).
std::string certificate_text(const std::vector<CertificateReport>& reports);

// All fixed points of tau^{-1} Frob_q ('z' coordinate, roots of
// z^{q+1} + z + 1) or of tau_x^{-1} Frob_q ('x' coordinate), as projective
// points; size q + 1.
std::vector<ProjPoint> twisted_fixed_points(std::uint64_t p, unsigned k, char coordinate = 'z',
                                            std::uint64_t guard = kDefaultGuard);

// true iff f (equivariant for the order-three map of the chosen coordinate)
// is injective on the twisted fixed set; evaluation is projective.
bool check_twisted_bijective(const RatFunc& f, std::uint64_t p, unsigned k,
                             char coordinate = 'z', std::uint64_t guard = kDefaultGuard);

struct CollisionCount {
    long long collisions = 0;       // ordered pairs x != y with f(x) = f(y)
    long long branch_excluded = 0;  // fixed points discarded as branch-fiber points
    std::uint64_t set_size = 0;
};

// Off-diagonal collision count of f on the twisted fixed set, with points in
// branch fibers excluded; requires f separable, nonconstant, equivariant.
CollisionCount collision_count(const RatFunc& f, std::uint64_t p, unsigned k,
                               char coordinate = 'z', std::uint64_t guard = kDefaultGuard);

// The x-coordinate self-map of the sporadic characteristic-19 quotient.
RatFunc htilde6();

}  // namespace h90
