#include "h90/quotient.hpp"

namespace h90 {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}

// ---- Mobius ----

Mobius::Mobius(FElem a, FElem b, FElem c, FElem d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (!a_.ctx()->same(*b_.ctx()) || !a_.ctx()->same(*c_.ctx()) || !a_.ctx()->same(*d_.ctx()))
        fail("field context mismatch in Mobius map");
    if (det().is_zero()) fail("singular Mobius map");
}

Mobius Mobius::identity(const FieldCtxPtr& ctx) {
    return Mobius(ctx->one(), ctx->zero(), ctx->zero(), ctx->one());
}

Mobius Mobius::tau(const FieldCtxPtr& ctx) {
    // (-z - 1)/z; this matrix satisfies T^3 = I exactly.
    return Mobius(ctx->from_int(-1), ctx->from_int(-1), ctx->one(), ctx->zero());
}

Mobius Mobius::tau_x(const FieldCtxPtr& ctx) {
    // 1/(1 - x) = (0x + 1)/(-x + 1) has cube -I; negate so the cube is I.
    return Mobius(ctx->zero(), ctx->from_int(-1), ctx->one(), ctx->from_int(-1));
}

Mobius Mobius::phi(const FieldCtxPtr& ctx) {
    return Mobius(ctx->one(), ctx->zero(), ctx->one(), ctx->one());
}

FElem Mobius::det() const { return a_ * d_ - b_ * c_; }

Mobius Mobius::operator*(const Mobius& o) const {
    return Mobius(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                  c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

Mobius Mobius::inverse() const {
    return Mobius(d_, -b_, -c_, a_);
}

bool Mobius::proj_equal(const Mobius& o) const {
    const FElem av[4] = {a_, b_, c_, d_};
    const FElem bv[4] = {o.a_, o.b_, o.c_, o.d_};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!(av[i] * bv[j] == av[j] * bv[i])) return false;
    return true;
}

ProjPoint Mobius::apply(const ProjPoint& x) const {
    FieldCtxPtr ectx = x.inf ? ctx() : x.v.ctx();
    FElem a = a_, b = b_, c = c_, d = d_;
    if (!ctx()->same(*ectx)) {
        a = h90::embed(a, ectx);
        b = h90::embed(b, ectx);
        c = h90::embed(c, ectx);
        d = h90::embed(d, ectx);
    }
    FElem num = x.inf ? a : a * x.v + b;
    FElem den = x.inf ? c : c * x.v + d;
    if (den.is_zero()) return ProjPoint::infinity(ectx);
    return ProjPoint::finite(num / den);
}

FElem Mobius::apply(const FElem& x) const {
    ProjPoint r = apply(ProjPoint::finite(x));
    if (r.inf) fail("Mobius image at infinity");
    return r.v;
}

Poly Mobius::fixed_point_poly() const {
    return Poly::from_coeffs(ctx(), {-b_, d_ - a_, c_});
}

Mobius Mobius::embed_into(const FieldCtxPtr& target) const {
    return Mobius(h90::embed(a_, target), h90::embed(b_, target),
                  h90::embed(c_, target), h90::embed(d_, target));
}

RatFunc pre_compose(const RatFunc& f, const Mobius& m) {
    const FieldCtxPtr& ctx = m.ctx();
    Poly num = f.ctx()->same(*ctx) ? f.num() : embed(f.num(), ctx);
    Poly den = f.ctx()->same(*ctx) ? f.den() : embed(f.den(), ctx);
    unsigned n = static_cast<unsigned>(std::max(num.degree(), den.degree()));
    Poly az_b = Poly::from_coeffs(ctx, {m.b(), m.a()});
    Poly cz_d = Poly::from_coeffs(ctx, {m.d(), m.c()});
    // Horner form of sum f_i (az+b)^i (cz+d)^{n-i} with the (cz+d) power
    // tracked incrementally
    Poly nn = Poly::constant(num.coeff(n));
    Poly dd = Poly::constant(den.coeff(n));
    Poly bpow = Poly::constant(ctx->one());
    for (unsigned i = n; i-- > 0;) {
        bpow = bpow * cz_d;
        nn = nn * az_b + bpow.scale(num.coeff(i));
        dd = dd * az_b + bpow.scale(den.coeff(i));
    }
    return RatFunc(nn, dd);
}

RatFunc post_compose(const Mobius& m, const RatFunc& f) {
    const FieldCtxPtr& ctx = m.ctx();
    Poly num = f.ctx()->same(*ctx) ? f.num() : embed(f.num(), ctx);
    Poly den = f.ctx()->same(*ctx) ? f.den() : embed(f.den(), ctx);
    return RatFunc(num.scale(m.a()) + den.scale(m.b()), num.scale(m.c()) + den.scale(m.d()));
}

RatFunc conjugate(const RatFunc& f, const Mobius& m) {
    return post_compose(m.inverse(), pre_compose(f, m));
}

// ---- raw and reduced quotients ----

FieldCtxPtr quotient_field(std::uint64_t characteristic) {
    return characteristic == 0 ? FieldCtx::rationals() : FieldCtx::prime(characteristic);
}

std::pair<Poly, Poly> raw_quotient(std::uint64_t characteristic, unsigned d) {
    if (d < 1) fail("exponent must be >= 1");
    FieldCtxPtr ctx = quotient_field(characteristic);
    Poly zp1 = Poly::from_ints(ctx, {1, 1});
    Poly num = zp1.pow(d);
    if (d % 2 == 1) num = -num;
    num = num - Poly::monomial(ctx, d, ctx->one());
    Poly den = Poly::monomial(ctx, d, ctx->one()) - Poly::constant(ctx->one());
    return {num, den};
}

QuotientRecord reduce_quotient(std::uint64_t characteristic, unsigned d) {
    if (d < 1) fail("exponent must be >= 1");
    QuotientRecord rec;
    rec.characteristic = characteristic;
    rec.d = d;
    auto [s, d0] = characteristic == 0 ? std::pair<unsigned, unsigned>{0, d}
                                       : split_p_power(characteristic, d);
    rec.s = s;
    rec.d0 = d0;
    auto [num, den] = raw_quotient(characteristic, d);
    rec.raw_num = num;
    rec.raw_den = den;
    rec.cancel = poly_gcd(num, den);
    rec.defect = static_cast<unsigned>(rec.cancel.degree());

    auto [num0, den0] = raw_quotient(characteristic, d0);
    rec.reduced = RatFunc(num0, den0);
    rec.separable_degree = static_cast<unsigned>(rec.reduced.degree());
    rec.constant = rec.reduced.is_constant();
    unsigned ps = 1;
    for (unsigned i = 0; i < s; ++i) ps *= static_cast<unsigned>(characteristic);
    rec.degree = ps * rec.separable_degree;
    if (rec.degree != d - rec.defect)
        throw std::logic_error("quotient degree disagrees with cancellation degree");
    return rec;
}

std::pair<unsigned, unsigned> split_p_power(std::uint64_t p, unsigned d) {
    if (d < 1) fail("exponent must be >= 1");
    if (p < 2) fail("characteristic must be a prime");
    unsigned s = 0, d0 = d;
    while (d0 % p == 0) {
        d0 /= static_cast<unsigned>(p);
        ++s;
    }
    return {s, d0};
}

unsigned torsion_defect(std::uint64_t characteristic, unsigned d) {
    if (d < 1) fail("exponent must be >= 1");
    if (characteristic == 0) {
        unsigned val = (d % 3 == 0) ? 2 : 0;
        // independent cyclotomic cross-check: the canceled points are common
        // roots of z^d - 1 and z^2 + z + 1
        FieldCtxPtr ctx = FieldCtx::rationals();
        Poly zd1 = Poly::monomial(ctx, d, ctx->one()) - Poly::constant(ctx->one());
        Poly cyc3 = Poly::from_ints(ctx, {1, 1, 1});
        if (static_cast<unsigned>(poly_gcd(zd1, cyc3).degree()) != val)
            throw std::logic_error("characteristic-zero defect cross-check failed");
        return val;
    }
    std::uint64_t p = characteristic;
    auto [s, d0] = split_p_power(p, d);
    unsigned ps = 1;
    for (unsigned i = 0; i < s; ++i) ps *= static_cast<unsigned>(p);

    unsigned m = multiplicative_order(p, d0);
    FieldCtxPtr field = m == 1 ? FieldCtx::prime(p) : FieldCtx::extension(p, m);
    auto mu = roots_of_unity(field, d0);
    unsigned tame = 0;
    FElem minus1 = field->from_int(-1);
    for (const auto& zeta : mu) {
        if (zeta == minus1) continue;  // tau(-1) = 0 is never a root of unity
        FElem t = minus1 - zeta.inv();
        if (t.pow(static_cast<long long>(d0)).is_one()) ++tame;
    }
    return ps * tame;
}

PPowerSplit p_power_split(std::uint64_t p, unsigned d) {
    PPowerSplit out;
    auto [s, d0] = split_p_power(p, d);
    out.s = s;
    out.d0 = d0;
    auto [num, den] = raw_quotient(p, d);
    auto [num0, den0] = raw_quotient(p, d0);
    out.raw_identity = (num == num0.frobenius_power(s)) && (den == den0.frobenius_power(s));

    RatFunc direct(num, den);
    RatFunc h0(num0, den0);
    RatFunc twisted(h0.num().frobenius_power(s), h0.den().frobenius_power(s));
    out.reduced_identity = direct == twisted;

    // P_d(x) = P_{d0}(x)^{p^s} for every x of the cubic extension of F_p
    FieldCtxPtr cubic = FieldCtx::extension(p, 3);
    BigInt q(static_cast<unsigned long>(p));
    BigInt ps = pow_u64(p, s);
    bool pointwise = true;
    for (BigInt idx = 0; idx < cubic->order() && pointwise; ++idx) {
        FElem x = cubic->element_at(idx);
        FElem pd = x.pow(BigInt(static_cast<unsigned long>(d)) * q) -
                   x.pow(BigInt(static_cast<unsigned long>(d)));
        FElem pd0 = x.pow(BigInt(static_cast<unsigned long>(d0)) * q) -
                    x.pow(BigInt(static_cast<unsigned long>(d0)));
        pointwise = pd == pd0.pow(ps);
    }
    out.pointwise = pointwise;
    return out;
}

bool check_tau_equivariant(const RatFunc& f) {
    return check_equivariant(f, Mobius::tau(f.ctx()));
}

bool check_equivariant(const RatFunc& f, const Mobius& order3) {
    if (f.is_constant()) fail("equivariance test on a constant map");
    RatFunc lhs = pre_compose(f, order3);
    RatFunc rhs = post_compose(order3, f);
    return lhs == rhs;
}

// ---- sparse and lacunary normal forms ----

namespace {

// Primitive cube root of unity in F_p (p = 1 mod 3) or F_{p^2} (p = 2 mod 3).
std::pair<FieldCtxPtr, FElem> cube_root_context(std::uint64_t p) {
    if (p == 3) fail("no primitive cube root in characteristic 3");
    FieldCtxPtr ctx = (p % 3 == 1) ? FieldCtx::prime(p) : FieldCtx::extension(p, 2);
    for (BigInt idx = 1; idx < ctx->order(); ++idx) {
        FElem w = ctx->element_at(idx);
        if (w.is_one() || w.is_zero()) continue;
        if ((w * w + w + ctx->one()).is_zero()) return {ctx, w};
    }
    fail("primitive cube root not found");
}

unsigned upow(std::uint64_t p, unsigned a) {
    unsigned r = 1;
    for (unsigned i = 0; i < a; ++i) r *= static_cast<unsigned>(p);
    return r;
}

}  // namespace

NormalFormResult conjugate_normal_form(std::uint64_t p, NormalFormBranch branch, unsigned a) {
    if (a < 1) fail("a must be >= 1");
    if (p < 2) fail("characteristic must be prime");
    unsigned r = upow(p, a);
    NormalFormResult out;

    unsigned d = 0;
    switch (branch) {
        case NormalFormBranch::minus: d = r - 1; break;
        case NormalFormBranch::plus: d = r + 1; break;
        case NormalFormBranch::lacunary:
            if (p == 2 || p == 3) fail("lacunary branch requires characteristic at least 5");
            d = 2 * r + 1;
            break;
    }
    if (d < 1) fail("degenerate exponent");
    out.d = d;

    QuotientRecord rec = reduce_quotient(p, d);
    out.separable_degree = rec.separable_degree;

    if (p == 3) {
        // translation coordinate u = 1/(z-1) conjugates tau to u -> u+1
        FieldCtxPtr ctx = FieldCtx::prime(3);
        Mobius c(ctx->zero(), ctx->one(), ctx->one(), ctx->from_int(-1));
        // conjugate by c^{-1}: Phi = c o h o c^{-1}
        out.conjugated = conjugate(embed(rec.reduced, ctx), c.inverse());
        if (branch == NormalFormBranch::minus) {
            // tau^2 becomes u + 2
            out.closed_form = RatFunc(Poly::from_ints(ctx, {2, 1}), Poly::from_ints(ctx, {1}));
        } else {
            // -(u^r + u + 1)
            Poly f = Poly::monomial(ctx, r, ctx->one()) + Poly::from_ints(ctx, {1, 1});
            out.closed_form = RatFunc(-f, Poly::from_ints(ctx, {1}));
        }
        out.degree = static_cast<unsigned>(out.closed_form.degree());
        out.equal = out.conjugated == out.closed_form;
        return out;
    }

    auto [ctx, omega] = cube_root_context(p);
    FElem omega2 = omega * omega;
    // M(u) = (omega - omega^2 u)/(1 - u)
    Mobius M(-omega2, omega, ctx->from_int(-1), ctx->one());
    out.conjugated = conjugate(embed(rec.reduced, ctx), M);

    Poly one = Poly::constant(ctx->one());
    switch (branch) {
        case NormalFormBranch::minus:
            // omega^2 u
            out.closed_form = RatFunc(Poly::monomial(ctx, 1, omega2), one);
            break;
        case NormalFormBranch::plus:
            if (r % 3 == 1) {
                out.closed_form = RatFunc(Poly::constant(omega2), Poly::monomial(ctx, r + 1, ctx->one()));
            } else {
                out.closed_form = RatFunc(Poly::monomial(ctx, r - 1, omega2), one);
            }
            break;
        case NormalFormBranch::lacunary:
            if (r % 3 == 1) {
                // -omega^2 u^r (u^{r-1} + 2) / (2 u^{r-1} + 1)
                Poly num = (Poly::monomial(ctx, r - 1, ctx->one()) + Poly::from_ints(ctx, {2})).shift(r);
                Poly den = Poly::monomial(ctx, r - 1, ctx->from_int(2)) + one;
                out.closed_form = RatFunc(num.scale(-omega2), den);
            } else {
                // -omega^2 (1 + 2 u^{r+1}) / (u^r (2 + u^{r+1}))
                Poly num = Poly::monomial(ctx, r + 1, ctx->from_int(2)) + one;
                Poly den = (Poly::monomial(ctx, r + 1, ctx->one()) + Poly::from_ints(ctx, {2})).shift(r);
                out.closed_form = RatFunc(num.scale(-omega2), den);
            }
            break;
    }
    out.degree = static_cast<unsigned>(out.closed_form.degree());
    out.equal = out.conjugated == out.closed_form;
    return out;
}

}  // namespace h90
