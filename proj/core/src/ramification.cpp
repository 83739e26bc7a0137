#include "h90/ramification.hpp"

#include <cmath>
#include <complex>

namespace h90 {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}

Poly wronskian(const QuotientRecord& rec) {
    if (rec.constant) fail("Wronskian of a constant quotient");
    return rec.reduced.wronskian();
}

Poly skeleton_poly(std::uint64_t characteristic, unsigned d) {
    if (d < 1) fail("exponent must be >= 1");
    FieldCtxPtr ctx = quotient_field(characteristic);
    Poly zp1 = Poly::from_ints(ctx, {1, 1});
    Poly zm1 = Poly::monomial(ctx, d - 1, ctx->one());
    Poly t = zp1.pow(d - 1) * (zm1 + Poly::constant(ctx->one()));
    // z^{d-1} - (-1)^d (z+1)^{d-1} (z^{d-1} + 1)
    return d % 2 == 0 ? zm1 - t : zm1 + t;
}

SkeletonChecks skeleton_identities(std::uint64_t characteristic, unsigned d) {
    if (d < 2) fail("skeleton identities need d >= 2");
    SkeletonChecks out;
    auto [num, den] = raw_quotient(characteristic, d);
    Poly lhs = num.derivative() * den - num * den.derivative();
    FieldCtxPtr ctx = num.ctx();

    bool tame = characteristic == 0 || d % characteristic != 0;
    if (tame) {
        Poly fd = skeleton_poly(characteristic, d);
        out.derivative_identity = lhs == fd.scale(ctx->from_int(static_cast<long long>(d)));
    } else {
        out.derivative_identity = true;  // vacuous in the wild case
    }

    QuotientRecord rec = reduce_quotient(characteristic, d);
    Poly c2w = rec.cancel * rec.cancel *
               (rec.raw_num.divrem(rec.cancel).first.derivative() *
                    rec.raw_den.divrem(rec.cancel).first -
                rec.raw_num.divrem(rec.cancel).first *
                    rec.raw_den.divrem(rec.cancel).first.derivative());
    out.cancellation_identity = lhs == c2w;

    out.frobenius_identity = true;
    if (characteristic > 0 && (d - 1) % characteristic == 0) {
        auto [s, e] = split_p_power(characteristic, d - 1);
        Poly fd = skeleton_poly(characteristic, d);
        Poly fe1 = skeleton_poly(characteristic, e + 1);
        out.frobenius_identity = fd == fe1.frobenius_power(s);
    }
    return out;
}

BranchData branch_data_of(const RatFunc& f) {
    if (f.is_constant()) fail("branch data of a constant map");
    if (f.degree() <= 1) fail("branch data needs degree > 1");
    BranchData out;
    out.characteristic = f.ctx()->characteristic();
    out.wronskian = f.wronskian();
    if (out.wronskian.is_zero()) fail("inseparable map has no branch polynomial");
    out.branch_poly =
        resultant_z(BiPoly::linear_in_t(f.num(), -f.den()), BiPoly::lift_z(out.wronskian));
    if (out.branch_poly.is_zero())
        throw std::logic_error("branch polynomial vanished identically");
    out.morse = squarefree(out.branch_poly);

    const FieldCtxPtr& ctx = f.ctx();
    if (ctx->finite() && ctx->kind() == FieldKind::prime) {
        for (std::uint64_t r = 0; r < ctx->characteristic(); ++r) {
            FElem t = ctx->from_residue(r);
            unsigned mult = root_multiplicity(out.branch_poly, t);
            if (mult == 1) out.simple_values.push_back(t);
        }
    }
    out.infinity_unramified = f.ramification_index(ProjPoint::infinity(ctx)) == 1;
    // infinity is a branch value iff some pole is multiple or the map
    // ramifies at infinity with an infinite value there
    bool inf_branch = !squarefree(f.den());
    ProjPoint at_inf = f.value_at_infinity();
    if (at_inf.inf && !out.infinity_unramified) inf_branch = true;
    out.infinity_branch_value = inf_branch;
    return out;
}

BranchData branch_polynomial(std::uint64_t characteristic, unsigned d) {
    QuotientRecord rec = reduce_quotient(characteristic, d);
    if (rec.constant) fail("constant quotient has no branch data");
    if (rec.separable_degree <= 1) fail("branch data needs separable degree > 1");
    BranchData out = branch_data_of(rec.reduced);
    out.characteristic = characteristic;
    out.d = d;
    out.skeleton = skeleton_poly(characteristic, d);
    return out;
}

CrossRatioScan crossratio_scan(unsigned m, double tolerance) {
    if (m < 2) fail("scan needs m >= 2");
    if (tolerance <= 0) fail("tolerance must be positive");
    CrossRatioScan out;
    out.m = m;
    out.min_residual = std::numeric_limits<double>::infinity();
    using C = std::complex<double>;
    double eps = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^d with d = m+1
    std::vector<C> roots(m);
    for (unsigned i = 0; i < m; ++i) {
        double a = 2.0 * M_PI * i / m;
        roots[i] = C(std::cos(a), std::sin(a));
    }
    for (unsigned r = 1; r < m; ++r) {
        for (unsigned s = 1; s < m; ++s) {
            if (r == s) continue;
            C zeta = roots[r], eta = roots[s];
            C base = eta - zeta;
            C lhs = std::pow(base / (eta - 1.0), static_cast<double>(m)) +
                    std::pow(base / (1.0 - zeta), static_cast<double>(m));
            double residual = std::abs(lhs - eps);
            out.min_residual = std::min(out.min_residual, residual);
            if (residual < tolerance) out.violations.push_back({r, s});
        }
    }
    if (out.violations.empty() && out.min_residual == std::numeric_limits<double>::infinity())
        out.min_residual = 0.0;
    return out;
}

LacunaryProfile lacunary_profile(std::uint64_t p, unsigned a) {
    if (p == 2 || p == 3) fail("lacunary profile requires characteristic at least 5");
    if (a < 1) fail("a must be >= 1");
    LacunaryProfile out;
    unsigned r = 1;
    for (unsigned i = 0; i < a; ++i) r *= static_cast<unsigned>(p);
    out.r = r;
    out.d = 2 * r + 1;

    NormalFormResult nf = conjugate_normal_form(p, NormalFormBranch::lacunary, a);
    out.normal_form_equal = nf.equal;
    const RatFunc& f = nf.closed_form;
    out.degree = static_cast<unsigned>(f.degree());

    const FieldCtxPtr& ctx = f.ctx();
    FElem zero = ctx->zero();
    bool r1 = (r % 3 == 1);

    // pole pattern: one point of multiplicity r, the rest simple
    unsigned wild_mult = 0, simple_count = 0;
    if (r1) {
        // wild pole at infinity
        wild_mult = f.ramification_index(ProjPoint::infinity(ctx));
        Poly den = f.den();
        if (squarefree(den)) simple_count = static_cast<unsigned>(den.degree());
    } else {
        // wild pole at the origin
        wild_mult = root_multiplicity(f.den(), zero);
        Poly rest = f.den();
        Poly lin = Poly::identity(ctx);
        for (unsigned i = 0; i < wild_mult; ++i) rest = rest.divrem(lin).first;
        if (squarefree(rest) && rest.eval(zero) != ctx->zero()) {
            simple_count = static_cast<unsigned>(rest.degree());
        }
    }
    out.wild_pole_mult = wild_mult;
    out.simple_pole_count = simple_count;

    // branch values are exactly 0 and infinity: the Wronskian is a monomial,
    // the two wild points sit over {0, inf}, the other preimages are simple
    Poly w = f.wronskian();
    bool w_monomial = true;
    for (int i = 0; i + 1 <= w.degree(); ++i)
        if (!w.coeff(static_cast<unsigned>(i)).is_zero()) {
            w_monomial = false;
            break;
        }
    ProjPoint v0 = f.eval_proj(ProjPoint::finite(zero));
    ProjPoint vinf = f.value_at_infinity();
    auto in_zero_inf = [&](const ProjPoint& v) {
        return v.inf || v.v.is_zero();
    };
    bool zeros_simple = true;
    {
        // points over the branch value 0 other than the wild one are simple
        Poly num = f.num();
        unsigned m0 = root_multiplicity(num, zero);
        Poly rest = num;
        Poly lin = Poly::identity(ctx);
        for (unsigned i = 0; i < m0; ++i) rest = rest.divrem(lin).first;
        if (!rest.is_constant()) zeros_simple = squarefree(rest);
    }
    out.branch_values_zero_infinity =
        w_monomial && in_zero_inf(v0) && in_zero_inf(vinf) && zeros_simple;

    // different exponent: valuation of dt/du in the prescribed parameters at
    // the wild point over 0 (t = f) and over infinity (t = 1/f)
    RatFunc t_over_zero = r1 ? f : RatFunc(f.den(), f.num());
    // at u = 0 the branch value is 0 when r = 1 mod 3, infinity otherwise
    RatFunc deriv = t_over_zero.derivative();
    unsigned val0 = root_multiplicity(deriv.num(), zero);
    if (!deriv.den().eval(zero).is_zero()) {
        out.different_exponent = val0;
    } else {
        out.different_exponent = 0;  // unexpected pole; reported as a failure
    }
    out.primitive_certificate = gcd_u64(out.r, out.degree) == 1 &&
                                out.wild_pole_mult == out.r &&
                                out.simple_pole_count == out.degree - out.r;
    return out;
}

BigInt good_reduction_modulus(unsigned d) {
    if (d < 2) fail("good-reduction modulus needs d >= 2");
    QuotientRecord rec = reduce_quotient(0, d);
    if (rec.degree <= 1) fail("good-reduction modulus needs degree > 1");
    FieldCtxPtr ctx = FieldCtx::rationals();

    // primitive integral representatives of the reduced pair
    Poly n = rec.reduced.num(), den = rec.reduced.den();
    BigInt lcm_den = 1;
    auto fold_den = [&](const Poly& f) {
        for (const auto& c : f.coeffs()) {
            BigInt q = c.rational().get_den();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_mpz_t());
        }
    };
    fold_den(n);
    fold_den(den);
    FElem scale_up = ctx->from_rational(Rational(lcm_den));
    Poly ni = n.scale(scale_up), di = den.scale(scale_up);
    BigInt content = 0;
    auto fold_content = [&](const Poly& f) {
        for (const auto& c : f.coeffs()) {
            BigInt z = c.rational().get_num();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
        }
    };
    fold_content(ni);
    fold_content(di);
    if (content == 0) throw std::logic_error("zero quotient representatives");
    FElem scale_down = ctx->from_rational(Rational(1) / Rational(content));
    ni = ni.scale(scale_down);
    di = di.scale(scale_down);

    unsigned deg = rec.degree;
    Poly w = ni.derivative() * di - ni * di.derivative();
    Poly b = resultant_z(BiPoly::linear_in_t(ni, -di), BiPoly::lift_z(w));

    Poly nhat = ni.reverse(deg), dhat = di.reverse(deg);
    FElem iota = nhat.derivative().eval(ctx->zero()) * dhat.eval(ctx->zero()) -
                 nhat.eval(ctx->zero()) * dhat.derivative().eval(ctx->zero());

    std::vector<FElem> factors = {
        ctx->from_int(static_cast<long long>(d) * (static_cast<long long>(d) - 1)),
        iota,
        poly_resultant_field(ni, di),
        poly_discriminant(di),
        poly_resultant_field(w, di),
        poly_discriminant(w),
        poly_discriminant(b),
        ni.lc(),
        di.lc(),
        w.lc(),
        b.lc(),
    };
    Rational prod(1);
    for (const auto& f : factors) {
        if (f.is_zero()) throw std::logic_error("good-reduction factor vanished");
        prod *= f.rational();
    }
    prod.canonicalize();
    if (prod.get_den() != 1)
        throw std::logic_error("good-reduction modulus is not integral");
    BigInt m = prod.get_num();
    return m < 0 ? BigInt(-m) : m;
}

}  // namespace h90
