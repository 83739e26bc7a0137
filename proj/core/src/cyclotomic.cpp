#include "h90/cyclotomic.hpp"

#include <cmath>
#include <complex>

namespace h90 {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

struct DlogTable {
    FieldCtxPtr ctx;
    std::uint64_t Q = 0;       // field size as machine word
    std::vector<long long> log;  // indexed by element_at index; -1 at zero
    FElem generator;
};

// Discrete logarithms with respect to the first generator in enumeration
// order; Q is assumed small enough to tabulate.
DlogTable build_dlog(std::uint64_t p, unsigned j) {
    DlogTable t;
    t.ctx = j == 1 ? FieldCtx::prime(p) : FieldCtx::extension(p, j);
    BigInt Qb = t.ctx->order();
    if (!Qb.fits_ulong_p()) fail("field too large for a discrete-log table");
    t.Q = Qb.get_ui();
    std::uint64_t order = t.Q - 1;
    auto ells = prime_factors(order);
    bool found = false;
    for (std::uint64_t idx = 1; idx < t.Q && !found; ++idx) {
        FElem g = t.ctx->element_at(BigInt(static_cast<unsigned long>(idx)));
        if (g.is_zero()) continue;
        bool ok = true;
        for (std::uint64_t ell : ells)
            if (g.pow(BigInt(static_cast<unsigned long>(order / ell))).is_one()) {
                ok = false;
                break;
            }
        if (ok) {
            t.generator = g;
            found = true;
        }
    }
    if (!found) fail("no generator found");
    t.log.assign(t.Q, -1);
    FElem cur = t.ctx->one();
    for (std::uint64_t i = 0; i < order; ++i) {
        t.log[t.ctx->index_of(cur).get_ui()] = static_cast<long long>(i);
        cur = cur * t.generator;
    }
    return t;
}

// membership bitmap of the index-e subgroup
std::vector<bool> subgroup_bitmap(const DlogTable& t, unsigned e) {
    std::vector<bool> in_h(t.Q, false);
    for (std::uint64_t i = 0; i < t.Q; ++i)
        if (t.log[i] >= 0 && t.log[i] % e == 0) in_h[i] = true;
    return in_h;
}

}  // namespace

long long cyclo_defect_count(unsigned e, std::uint64_t p, unsigned j) {
    if (e < 1) fail("index must be >= 1");
    DlogTable t = build_dlog(p, j);
    if ((t.Q - 1) % e != 0) fail("index must divide Q-1");
    auto in_h = subgroup_bitmap(t, e);
    long long count = 0;
    FElem minus1 = t.ctx->from_int(-1);
    for (std::uint64_t i = 0; i < t.Q; ++i) {
        if (!in_h[i]) continue;
        FElem x = t.ctx->element_at(BigInt(static_cast<unsigned long>(i)));
        FElem y = minus1 - x;
        if (in_h[t.ctx->index_of(y).get_ui()]) ++count;
    }
    return count;
}

long long cyclo_defect(unsigned e, std::uint64_t p, unsigned j) {
    long long n = cyclo_defect_count(e, p, j);
    BigInt Q = pow_u64(p, j);
    BigInt d = (Q - 1) / e;
    if (!d.fits_uint_p()) fail("exponent too large for the degree cross-check");
    QuotientRecord rec = reduce_quotient(p, static_cast<unsigned>(d.get_ui()));
    if (static_cast<long long>(rec.degree) != static_cast<long long>(d.get_ui()) - n)
        throw std::logic_error("cyclotomic count disagrees with the quotient degree");
    return n;
}

CycloReport index_formula_check(unsigned e, std::uint64_t p, unsigned j) {
    if (e < 1 || e > 3) fail("closed formulas cover indices 1..3");
    CycloReport r;
    r.e = e;
    r.p = p;
    r.j = j;
    r.Q = pow_u64(p, j);
    r.count = cyclo_defect_count(e, p, j);
    r.main_term = Rational(r.Q - 2) / Rational(static_cast<long>(e) * e);
    double sqrtQ = std::sqrt(r.Q.get_d());
    r.bound = (static_cast<double>(e) * e - 1.0) / (static_cast<double>(e) * e) * sqrtQ;
    r.within_bound = jacobi_bound_check(e, p, j);

    if (e == 1) {
        BigInt v = r.Q - 2;
        r.formula_value = static_cast<long long>(v.get_si());
        r.formula_matches = r.count == *r.formula_value;
        return r;
    }
    if (e == 2) {
        if (p == 2) fail("index two needs odd Q");
        BigInt Q = r.Q;
        BigInt val = (Q % 4 == 1) ? BigInt((Q - 5) / 4) : BigInt((Q + 1) / 4);
        r.formula_value = static_cast<long long>(val.get_si());
        r.formula_matches = r.count == *r.formula_value;
        return r;
    }
    // e = 3: numeric reconstruction from the two cubic Jacobi sums
    DlogTable t = build_dlog(p, j);
    if ((t.Q - 1) % 3 != 0) fail("index three needs 3 | Q-1");
    using C = std::complex<double>;
    const double two_pi_third = 2.0 * M_PI / 3.0;
    auto chi = [&](std::uint64_t idx, int power) -> C {
        long long lg = t.log[idx];
        if (lg < 0) return C(0.0, 0.0);
        double angle = two_pi_third * static_cast<double>((lg * power) % 3);
        return C(std::cos(angle), std::sin(angle));
    };
    C j1(0, 0), j2(0, 0);
    FElem one = t.ctx->one();
    for (std::uint64_t i = 0; i < t.Q; ++i) {
        FElem x = t.ctx->element_at(BigInt(static_cast<unsigned long>(i)));
        std::uint64_t ix = i;
        std::uint64_t i1mx = t.ctx->index_of(one - x).get_ui();
        j1 += chi(ix, 1) * chi(i1mx, 1);
        j2 += chi(ix, 2) * chi(i1mx, 2);
    }
    double qd = r.Q.get_d();
    double reconstructed = (qd - 8.0 + (j1 + j2).real()) / 9.0;
    r.formula_value = static_cast<long long>(std::llround(reconstructed));
    r.formula_matches = std::abs(reconstructed - static_cast<double>(r.count)) <= 0.49;
    // |N_3 - (Q-8)/9| <= 2 sqrt(Q) / 9
    double lhs = std::abs(static_cast<double>(r.count) - (qd - 8.0) / 9.0);
    r.formula_matches = r.formula_matches && lhs <= 2.0 * std::sqrt(qd) / 9.0 + 1e-9;
    return r;
}

bool jacobi_bound_check(unsigned e, std::uint64_t p, unsigned j) {
    if (e < 1) fail("index must be >= 1");
    long long n = cyclo_defect_count(e, p, j);
    BigInt Q = pow_u64(p, j);
    // |e^2 N - (Q-2)| <= (e^2-1) sqrt(Q), squared to stay in the integers
    BigInt e2(static_cast<unsigned long>(e));
    e2 *= static_cast<unsigned long>(e);
    BigInt lhs = e2 * static_cast<long>(n) - (Q - 2);
    BigInt rhs2 = (e2 - 1) * (e2 - 1) * Q;
    return lhs * lhs <= rhs2;
}

FixedIndexBound fixed_index_bound(unsigned e, std::uint64_t p, unsigned j,
                                  std::optional<long long> M) {
    if (e < 2) fail("fixed-index bound needs e >= 2");
    FixedIndexBound out;
    BigInt Q = pow_u64(p, j);
    if ((Q - 1) % e != 0) fail("index must divide Q-1");
    BigInt d = (Q - 1) / e;
    QuotientRecord rec = reduce_quotient(p, static_cast<unsigned>(d.get_ui()));
    out.degree = static_cast<long long>(rec.degree);

    double e2 = static_cast<double>(e) * e;
    double qd = Q.get_d();
    out.lower_bound = ((e - 1.0) * qd + (2.0 - e) - (e2 - 1.0) * std::sqrt(qd)) / e2;

    // exact check of degree >= ((e-1)Q + (2-e) - (e^2-1) sqrt(Q)) / e^2:
    // e^2 deg - (e-1)Q - (2-e) >= -(e^2-1) sqrt(Q)
    BigInt e2b(static_cast<unsigned long>(e));
    e2b *= static_cast<unsigned long>(e);
    BigInt lhs = e2b * static_cast<long>(out.degree) - (e - 1) * Q - (2 - static_cast<long>(e));
    if (lhs >= 0) {
        out.satisfied = true;
    } else {
        BigInt rhs2 = (e2b - 1) * (e2b - 1) * Q;
        out.satisfied = lhs * lhs <= rhs2;
    }

    if (M) {
        double em1 = static_cast<double>(e) - 1.0;
        double disc = (e2 - 1.0) * (e2 - 1.0) +
                      4.0 * em1 * (e2 * static_cast<double>(*M) + static_cast<double>(e) - 2.0);
        out.t_bound = ((e2 - 1.0) + std::sqrt(disc)) / (2.0 * em1);
    }
    return out;
}

}  // namespace h90
