#include "h90/certificates.hpp"

#include <sstream>
#include <unordered_map>

namespace h90 {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void add_check(CertificateReport& rep, const std::string& name, bool pass,
               const std::string& witness = "") {
    rep.checks.push_back({name, pass, pass ? "" : witness});
}

void finish(CertificateReport& rep) {
    rep.overall = true;
    for (const auto& c : rep.checks) rep.overall = rep.overall && c.pass;
}

}  // namespace

CertificateReport certify_11_5() {
    CertificateReport rep;
    rep.case_id = "11-5";
    rep.headline = "Characteristic 11 degree-two quotient: passed";
    FieldCtxPtr F = FieldCtx::prime(11);
    auto [N, D] = raw_quotient(11, 5);
    Poly g = poly_gcd(N, D);
    add_check(rep, "gcd(N_5, D_5) = z^3 - 4z^2 + 4z - 1",
              g == Poly::from_ints(F, {-1, 4, -4, 1}), g.str());
    Poly n = N.divrem(g).first;
    Poly den = D.divrem(g).first;
    add_check(rep, "reduced numerator = -2z^2 - 2z + 1", n == Poly::from_ints(F, {1, -2, -2}),
              n.str());
    add_check(rep, "reduced denominator = z^2 + 4z + 1", den == Poly::from_ints(F, {1, 4, 1}),
              den.str());
    add_check(rep, "reduced pair coprime", poly_gcd(n, den).degree() == 0);
    add_check(rep, "degree = 2", std::max(n.degree(), den.degree()) == 2);
    finish(rep);
    return rep;
}

CertificateReport certify_19_6() {
    CertificateReport rep;
    rep.case_id = "19-6";
    rep.headline = "Characteristic 19 Klein-four quotient: passed";
    FieldCtxPtr F = FieldCtx::prime(19);

    // K_6^raw(x) = (1 - x^6) / (x^6 - (1-x)^6)
    Poly one = Poly::constant(F->one());
    Poly x6 = Poly::monomial(F, 6, F->one());
    Poly one_minus_x = Poly::from_ints(F, {1, -1});
    Poly knum = one - x6;
    Poly kden = x6 - one_minus_x.pow(6);
    Poly g = poly_gcd(knum, kden);
    add_check(rep, "common factor = x^2 - x + 1", g == Poly::from_ints(F, {1, -1, 1}), g.str());
    Poly hn = knum.divrem(g).first;
    Poly hd = kden.divrem(g).first;
    add_check(rep, "K_6 numerator = -x^4 - x^3 + x + 1", hn == Poly::from_ints(F, {1, 1, 0, -1, -1}),
              hn.str());
    add_check(rep, "K_6 denominator = 6x^3 - 9x^2 + 5x - 1",
              hd == Poly::from_ints(F, {-1, 5, -9, 6}), hd.str());
    add_check(rep, "K_6 pair coprime", poly_gcd(hn, hd).degree() == 0);
    add_check(rep, "deg K_6 = 4", std::max(hn.degree(), hd.degree()) == 4);

    // htilde = K_6 / (K_6 + 1)
    Poly htn = hn;
    Poly htd = hn + hd;
    add_check(rep, "htilde numerator = -x^4 - x^3 + x + 1",
              htn == Poly::from_ints(F, {1, 1, 0, -1, -1}), htn.str());
    add_check(rep, "htilde denominator = -x^4 + 5x^3 - 9x^2 + 6x",
              htd == Poly::from_ints(F, {0, 6, -9, 5, -1}), htd.str());
    add_check(rep, "htilde pair coprime", poly_gcd(htn, htd).degree() == 0);
    add_check(rep, "deg htilde = 4", std::max(htn.degree(), htd.degree()) == 4);

    RatFunc K(hn, hd);
    RatFunc ht(htn, htd);

    std::vector<Mobius> gammas = {
        Mobius(F->from_int(1), F->from_int(0), F->from_int(0), F->from_int(1)),
        Mobius(F->from_int(1), F->from_int(6), F->from_int(2), F->from_int(-1)),
        Mobius(F->from_int(1), F->from_int(10), F->from_int(9), F->from_int(-1)),
        Mobius(F->from_int(1), F->from_int(-2), F->from_int(13), F->from_int(-1)),
    };
    bool decks_fix = true;
    for (const auto& m : gammas) {
        if (m.det().is_zero()) decks_fix = false;
        if (!(pre_compose(K, m) == K)) decks_fix = false;
        if (!(pre_compose(ht, m) == ht)) decks_fix = false;
    }
    add_check(rep, "four deck maps fix K_6 and htilde", decks_fix);

    bool distinct = true;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (gammas[i].proj_equal(gammas[j])) distinct = false;
    add_check(rep, "projective classes pairwise distinct", distinct);

    bool involutions = true;
    for (std::size_t i = 1; i < 4; ++i)
        if (!(gammas[i] * gammas[i]).proj_equal(gammas[0])) involutions = false;
    add_check(rep, "nonidentity deck maps are involutions", involutions);

    bool closed = true, commutative = true;
    for (const auto& m : gammas)
        for (const auto& n2 : gammas) {
            Mobius prod = m * n2;
            bool hit = false;
            for (const auto& g2 : gammas) hit = hit || prod.proj_equal(g2);
            closed = closed && hit;
            commutative = commutative && prod.proj_equal(n2 * m);
        }
    add_check(rep, "deck set closed under multiplication", closed);
    add_check(rep, "deck multiplication commutative", commutative);

    Mobius tau_x = Mobius::tau_x(F);
    Mobius ti = tau_x.inverse();
    add_check(rep, "tau_x conjugation three-cycle",
              (ti * gammas[1] * tau_x).proj_equal(gammas[2]) &&
                  (ti * gammas[2] * tau_x).proj_equal(gammas[3]) &&
                  (ti * gammas[3] * tau_x).proj_equal(gammas[1]));

    add_check(rep, "htilde tau_x-equivariant", check_equivariant(ht, tau_x));
    add_check(rep, "K_6 not tau_x-equivariant", !check_equivariant(K, tau_x));

    std::vector<Poly> quads = {Poly::from_ints(F, {-3, -1, 1}), Poly::from_ints(F, {1, 4, 1}),
                               Poly::from_ints(F, {6, -6, 1})};
    bool fixed_ok = true;
    for (std::size_t i = 1; i < 4; ++i) {
        if (gammas[i].c().is_zero()) fixed_ok = false;  // none fixes infinity
        Poly fp = gammas[i].fixed_point_poly();
        if (!(fp.monic() == quads[i - 1].monic())) fixed_ok = false;
    }
    add_check(rep, "fixed-point quadratics match and avoid infinity", fixed_ok);

    bool irreducible = true;
    for (const auto& q2 : quads) irreducible = irreducible && is_irreducible(q2);
    add_check(rep, "fixed-point quadratics irreducible", irreducible);

    Poly prod_quads = quads[0] * quads[1] * quads[2];
    add_check(rep, "gcd(x^2 - x + 1, product of fixed quadratics) = 1",
              poly_gcd(Poly::from_ints(F, {1, -1, 1}), prod_quads).degree() == 0);

    // odd-k exclusions: gcd(f_i, (S_i - x)(1 - x) - 1) = 1 for S_i = 1, -4, 6
    std::vector<long long> sums = {1, -4, 6};
    bool exclusions = true;
    for (std::size_t i = 0; i < 3; ++i) {
        Poly s_minus_x = Poly::from_ints(F, {sums[i], -1});
        Poly test = s_minus_x * one_minus_x - one;
        exclusions = exclusions && poly_gcd(quads[i], test).degree() == 0;
    }
    add_check(rep, "branch fixed-point exclusions", exclusions);

    finish(rep);
    return rep;
}

CertificateReport certify_7_5() {
    CertificateReport rep;
    rep.case_id = "7-5";
    rep.headline = "Characteristic 7 bad Morse reduction: passed";
    FieldCtxPtr F = FieldCtx::prime(7);
    auto [N, D] = raw_quotient(7, 5);
    Poly g = poly_gcd(N, D);
    add_check(rep, "raw pair coprime", g.degree() == 0);
    add_check(rep, "degree = 5", std::max(N.degree(), D.degree()) == 5);

    Poly w = N.derivative() * D - N * D.derivative();
    // -2 (z-2)(z+3)(z^2+1)(z^2+z-3)(z^2+2z+2)
    Poly expected_w = Poly::from_ints(F, {-2}) * Poly::from_ints(F, {-2, 1}) *
                      Poly::from_ints(F, {3, 1}) * Poly::from_ints(F, {1, 0, 1}) *
                      Poly::from_ints(F, {-3, 1, 1}) * Poly::from_ints(F, {2, 2, 1});
    add_check(rep, "Wronskian factorization", w == expected_w, w.str());
    bool w_factors_irreducible = is_irreducible(Poly::from_ints(F, {1, 0, 1})) &&
                                 is_irreducible(Poly::from_ints(F, {-3, 1, 1})) &&
                                 is_irreducible(Poly::from_ints(F, {2, 2, 1}));
    add_check(rep, "Wronskian quadratic factors irreducible", w_factors_irreducible);

    Poly b = resultant_z(BiPoly::linear_in_t(N, -D), BiPoly::lift_z(w));
    // 2 (T-3)^2 (T-1)^2 (T+2)^2 (T-2)(T+3)
    Poly tm3 = Poly::from_ints(F, {-3, 1});
    Poly tm1 = Poly::from_ints(F, {-1, 1});
    Poly tp2 = Poly::from_ints(F, {2, 1});
    Poly expected_b = Poly::from_ints(F, {2}) * tm3 * tm3 * tm1 * tm1 * tp2 * tp2 *
                      Poly::from_ints(F, {-2, 1}) * Poly::from_ints(F, {3, 1});
    add_check(rep, "branch polynomial factorization", b == expected_b, b.str());

    add_check(rep, "branch polynomial not squarefree", !squarefree(b));
    std::vector<FElem> simple;
    for (std::uint64_t r = 0; r < 7; ++r) {
        FElem t = F->from_residue(r);
        if (root_multiplicity(b, t) == 1) simple.push_back(t);
    }
    bool simple_ok = simple.size() == 2 &&
                     ((simple[0] == F->from_int(2) && simple[1] == F->from_int(-3)) ||
                      (simple[0] == F->from_int(-3) && simple[1] == F->from_int(2)));
    add_check(rep, "simple branch values {2, -3}", simple_ok);
    finish(rep);
    return rep;
}

std::vector<CertificateReport> certify_all() {
    return {certify_11_5(), certify_19_6(), certify_7_5()};
}

std::string certificate_text(const std::vector<CertificateReport>& reports) {
    std::ostringstream os;
    os << "Starting computational certificates...\n";
    bool all = true;
    for (const auto& r : reports) {
        if (r.overall) {
            os << r.headline << "\n";
        } else {
            all = false;
            os << "Certificate " << r.case_id << ": FAILED\n";
            for (const auto& c : r.checks)
                if (!c.pass) os << "  failed: " << c.name << (c.witness.empty() ? "" : " -> " + c.witness) << "\n";
        }
    }
    os << (all ? "All computational certificates passed." : "Certificate failures detected.")
       << "\n";
    return os.str();
}

std::vector<ProjPoint> twisted_fixed_points(std::uint64_t p, unsigned k, char coordinate,
                                            std::uint64_t guard) {
    TwistedSet lam = build_twisted_set(p, k, guard);
    std::vector<ProjPoint> out;
    out.reserve(lam.elements.size());
    if (coordinate == 'z') {
        for (auto& z : lam.elements) out.push_back(ProjPoint::finite(z));
        return out;
    }
    if (coordinate != 'x') fail("coordinate must be 'z' or 'x'");
    // the x-coordinate set is the image of Lambda_q under phi(z) = z/(z+1);
    // phi is defined over F_p and commutes with Frobenius
    Mobius phi = Mobius::phi(lam.ambient);
    BigInt q = pow_u64(p, k);
    for (auto& z : lam.elements) {
        ProjPoint x = phi.apply(ProjPoint::finite(z));
        out.push_back(x);
    }
    // verify the defining condition x^q (1 - x) = 1 pointwise
    const FieldCtxPtr& L = lam.ambient;
    for (const auto& x : out) {
        if (x.inf) throw std::logic_error("x-coordinate twisted point at infinity");
        FElem lhs = x.v.pow(q) * (L->one() - x.v);
        if (!lhs.is_one())
            throw std::logic_error("x-coordinate twisted point fails its defining equation");
    }
    return out;
}

namespace {

struct TwistedEvaluation {
    std::vector<ProjPoint> points;
    std::vector<ProjPoint> values;
    FieldCtxPtr ambient;
};

TwistedEvaluation evaluate_on_twisted(const RatFunc& f, std::uint64_t p, unsigned k,
                                      char coordinate, std::uint64_t guard) {
    if (f.is_constant()) fail("constant map on the twisted fixed set");
    if (f.ctx()->characteristic() != p) fail("map characteristic mismatch");
    Mobius order3 = coordinate == 'x' ? Mobius::tau_x(f.ctx()) : Mobius::tau(f.ctx());
    if (!check_equivariant(f, order3)) fail("map is not equivariant");
    TwistedEvaluation out;
    out.points = twisted_fixed_points(p, k, coordinate, guard);
    out.ambient = FieldCtx::extension(p, 3 * k);
    RatFunc fe = embed(f, out.ambient);
    out.values.reserve(out.points.size());
    for (const auto& x : out.points) out.values.push_back(fe.eval_proj(x));
    return out;
}

}  // namespace

bool check_twisted_bijective(const RatFunc& f, std::uint64_t p, unsigned k, char coordinate,
                             std::uint64_t guard) {
    TwistedEvaluation ev = evaluate_on_twisted(f, p, k, coordinate, guard);
    std::unordered_map<std::string, int> seen;
    for (const auto& v : ev.values)
        if (++seen[v.key()] > 1) return false;
    return true;
}

CollisionCount collision_count(const RatFunc& f, std::uint64_t p, unsigned k, char coordinate,
                               std::uint64_t guard) {
    if (f.wronskian().is_zero() && f.degree() > 1)
        fail("collision count requires a separable map");
    CollisionCount out;
    TwistedEvaluation ev = evaluate_on_twisted(f, p, k, coordinate, guard);
    out.set_size = ev.points.size();

    // a degree-one map has an empty branch locus and singleton fibers
    bool has_branch = f.degree() > 1;
    Poly b_embedded;
    bool exclude_infinity = false;
    std::optional<ProjPoint> ramified_infinity_value;
    if (has_branch) {
        BranchData bd = branch_data_of(f);
        b_embedded = embed(bd.branch_poly, ev.ambient);
        exclude_infinity = bd.infinity_branch_value;
        // a ramified source point at infinity contributes a branch value that
        // the finite resultant cannot see
        if (!bd.infinity_unramified) {
            ProjPoint v = embed(f, ev.ambient).value_at_infinity();
            if (!v.inf) ramified_infinity_value = v;
        }
    }
    std::unordered_map<std::string, long long> classes;
    for (const auto& v : ev.values) {
        bool excluded =
            has_branch && (v.inf ? exclude_infinity : b_embedded.eval(v.v).is_zero());
        if (!excluded && ramified_infinity_value && v == *ramified_infinity_value) excluded = true;
        if (excluded) {
            ++out.branch_excluded;
            continue;
        }
        ++classes[v.key()];
    }
    for (const auto& [key, c] : classes) out.collisions += c * (c - 1);
    return out;
}

RatFunc htilde6() {
    FieldCtxPtr F = FieldCtx::prime(19);
    return RatFunc(Poly::from_ints(F, {1, 1, 0, -1, -1}), Poly::from_ints(F, {0, 6, -9, 5, -1}));
}

}  // namespace h90
