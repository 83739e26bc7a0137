#pragma once

#include "h90/fields.hpp"

namespace h90 {

/* Invertible 2x2 matrix acting on the projective line.  Projective equality
 * is tested by cross-multiplying all entry pairs. */
class Mobius {
public:
    Mobius(FElem a, FElem b, FElem c, FElem d);

    static Mobius identity(const FieldCtxPtr& ctx);
    // tau(z) = -1 - 1/z, normalized so that the matrix cubes to the identity.
    static Mobius tau(const FieldCtxPtr& ctx);
    // tau_x(x) = 1/(1-x), the conjugate of tau under phi(z) = z/(z+1);
    // also normalized to cube to the identity.
    static Mobius tau_x(const FieldCtxPtr& ctx);
    // phi(z) = z/(z+1).
    static Mobius phi(const FieldCtxPtr& ctx);

    const FElem& a() const { return a_; }
    const FElem& b() const { return b_; }
    const FElem& c() const { return c_; }
    const FElem& d() const { return d_; }
    const FieldCtxPtr& ctx() const { return a_.ctx(); }

    FElem det() const;
    Mobius operator*(const Mobius& o) const;
    Mobius inverse() const;
    bool proj_equal(const Mobius& o) const;

    ProjPoint apply(const ProjPoint& x) const;
    FElem apply(const FElem& x) const;  // finite in, finite out required
    // Fixed-point polynomial c x^2 + (d - a) x - b.
    Poly fixed_point_poly() const;
    Mobius embed_into(const FieldCtxPtr& target) const;

private:
    FElem a_, b_, c_, d_;
};

// f composed with a Mobius map on the source: f(M(z)).
RatFunc pre_compose(const RatFunc& f, const Mobius& m);
// Mobius map applied to the values: M(f(z)).
RatFunc post_compose(const Mobius& m, const RatFunc& f);
// M^{-1} o f o M.
RatFunc conjugate(const RatFunc& f, const Mobius& m);

/* Everything attached to one exponent d in one characteristic.  For p > 0 the
 * stored reduced map is the separable part h_{d0}; the full morphism degree
 * carries the Frobenius factor p^s. */
struct QuotientRecord {
    std::uint64_t characteristic = 0;  // 0 or prime p
    unsigned d = 0;
    unsigned s = 0;        // d = p^s * d0, p not dividing d0
    unsigned d0 = 0;
    Poly raw_num;          // N_d = (-1)^d (z+1)^d - z^d
    Poly raw_den;          // D_d = z^d - 1
    Poly cancel;           // monic gcd of the raw pair
    RatFunc reduced;       // h_{d0} for p > 0, h_d for p = 0
    unsigned degree = 0;   // morphism degree of h_d
    unsigned defect = 0;   // cancellation degree; degree = d - defect
    unsigned separable_degree = 0;
    bool constant = false;
};

FieldCtxPtr quotient_field(std::uint64_t characteristic);

// (N_d, D_d) over the requested field.
std::pair<Poly, Poly> raw_quotient(std::uint64_t characteristic, unsigned d);

QuotientRecord reduce_quotient(std::uint64_t characteristic, unsigned d);

// Independent count of the base-locus points: in the tame case an enumeration
// of mu_d inside the minimal field F_{p^m}, m = ord_d(p), counting the zeta
// with tau(zeta) again a d-th root of unity; for p | d the proved p^s scaling
// applies to the tame part; in characteristic zero the closed dichotomy,
// cross-checked by a cyclotomic gcd.
unsigned torsion_defect(std::uint64_t characteristic, unsigned d);

std::pair<unsigned, unsigned> split_p_power(std::uint64_t p, unsigned d);  // (s, d0)

// Verifies the raw identity H_d = H_{d0}^{p^s}, the reduced identity
// h_d = h_{d0}^{p^s}, and P_d = P_{d0}^{p^s} pointwise on F_{p^3}.
struct PPowerSplit {
    unsigned s = 0;
    unsigned d0 = 0;
    bool raw_identity = false;
    bool reduced_identity = false;
    bool pointwise = false;
    bool ok() const { return raw_identity && reduced_identity && pointwise; }
};
PPowerSplit p_power_split(std::uint64_t p, unsigned d);

// true iff f(tau(z)) = tau(f(z)) as reduced rational functions.
bool check_tau_equivariant(const RatFunc& f);
// Same test against an arbitrary order-three Mobius map.
bool check_equivariant(const RatFunc& f, const Mobius& order3);

enum class NormalFormBranch { minus, plus, lacunary };

struct NormalFormResult {
    RatFunc closed_form;   // the closed normal form in the coordinate u
    RatFunc conjugated;    // M^{-1} o h_d o M (or the translation conjugate)
    bool equal = false;
    unsigned d = 0;
    unsigned degree = 0;            // morphism degree of the normal form
    unsigned separable_degree = 0;  // degree of the separable part
};

// Closed sparse/lacunary normal forms in conjugated coordinates, checked
// against the conjugated reduced quotient.
// minus: d = p^a - 1; plus: d = p^a + 1; lacunary: d = 2 p^a + 1, p not 2, 3.
NormalFormResult conjugate_normal_form(std::uint64_t p, NormalFormBranch branch, unsigned a);

}  // namespace h90
