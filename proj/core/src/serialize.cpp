#include "h90/serialize.hpp"

namespace h90 {

Json to_json(const FieldCtxPtr& ctx) {
    Json j;
    j["p"] = ctx->characteristic();
    j["n"] = ctx->kind() == FieldKind::rationals ? 1 : ctx->degree();
    Json mod = Json::array();
    if (ctx->kind() == FieldKind::extension)
        for (auto c : ctx->modulus_coeffs()) mod.push_back(c);
    j["modulus"] = mod;
    return j;
}

Json to_json(const FElem& x) {
    switch (x.ctx()->kind()) {
        case FieldKind::rationals:
            return x.rational().get_str();
        case FieldKind::prime:
            return Json::array({x.residue()});
        default: {
            Json a = Json::array();
            const auto& c = x.coeffs();
            for (unsigned i = 0; i < x.ctx()->degree(); ++i)
                a.push_back(i < c.size() ? c[i] : 0);
            return a;
        }
    }
}

Json to_json(const Poly& f) {
    Json j;
    j["ctx"] = to_json(f.ctx());
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
    j["coeffs"] = coeffs;
    return j;
}

Json to_json(const RatFunc& f) {
    Json j;
    j["num"] = to_json(f.num());
    j["den"] = to_json(f.den());
    return j;
}

Json to_json(const QuotientRecord& rec) {
    Json j;
    j["characteristic"] = rec.characteristic;
    j["d"] = rec.d;
    j["s"] = rec.s;
    j["d0"] = rec.d0;
    j["degree"] = rec.degree;
    j["defect"] = rec.defect;
    j["separable_degree"] = rec.separable_degree;
    j["constant"] = rec.constant;
    j["raw_num"] = to_json(rec.raw_num);
    j["raw_den"] = to_json(rec.raw_den);
    j["cancel"] = to_json(rec.cancel);
    j["reduced"] = to_json(rec.reduced);
    return j;
}

Json to_json(const CycloReport& rep) {
    Json j;
    j["e"] = rep.e;
    j["Q"] = rep.Q.get_str();
    j["count"] = rep.count;
    j["main_term"] = rep.main_term.get_str();
    j["bound"] = rep.bound;
    if (rep.formula_value) j["formula_value"] = *rep.formula_value;
    j["within_bound"] = rep.within_bound;
    j["formula_matches"] = rep.formula_matches;
    return j;
}

Json to_json(const BranchData& bd) {
    Json j;
    j["characteristic"] = bd.characteristic;
    j["d"] = bd.d;
    j["wronskian"] = to_json(bd.wronskian);
    if (!bd.skeleton.is_zero()) j["skeleton"] = to_json(bd.skeleton);
    j["branch_poly"] = to_json(bd.branch_poly);
    j["morse"] = bd.morse;
    Json sv = Json::array();
    for (const auto& v : bd.simple_values) sv.push_back(to_json(v));
    j["simple_values"] = sv;
    j["infinity_unramified"] = bd.infinity_unramified;
    return j;
}

Json to_json(const LacunaryProfile& prof) {
    Json j;
    j["d"] = prof.d;
    j["degree"] = prof.degree;
    j["r"] = prof.r;
    j["wild_pole_mult"] = prof.wild_pole_mult;
    j["simple_pole_count"] = prof.simple_pole_count;
    j["different_exponent"] = prof.different_exponent;
    j["branch_values_zero_infinity"] = prof.branch_values_zero_infinity;
    j["primitive_certificate"] = prof.primitive_certificate;
    j["normal_form_equal"] = prof.normal_form_equal;
    return j;
}

Json to_json(const CertificateReport& rep) {
    Json j;
    j["case"] = rep.case_id;
    j["overall"] = rep.overall;
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.witness.empty()) cj["witness"] = c.witness;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    return j;
}

Json to_json(const DescentConditions& dc) {
    Json j;
    j["fiber"] = dc.fiber;
    j["denominator"] = dc.denominator;
    j["quotient_bijective"] = dc.quotient_bijective;
    j["permutes"] = dc.all();
    if (!dc.witness.empty()) j["witness"] = dc.witness;
    return j;
}

Json to_json(const ExponentFunction& f) {
    Json j;
    j["q"] = f.q;
    j["M"] = f.M;
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms) terms.push_back(Json::array({e, to_json(c)}));
    j["terms"] = terms;
    if (!f.constant.is_zero()) j["constant"] = to_json(f.constant);
    return j;
}

FieldCtxPtr ctx_from_json(const Json& j) {
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    if (p == 0) return FieldCtx::rationals();
    unsigned n = j.at("n").get<unsigned>();
    if (n == 1) return FieldCtx::prime(p);
    std::vector<std::uint64_t> mod = j.at("modulus").get<std::vector<std::uint64_t>>();
    return FieldCtx::extension(p, n, std::move(mod));
}

Poly poly_from_json(const Json& j) {
    FieldCtxPtr ctx = ctx_from_json(j.at("ctx"));
    std::vector<FElem> coeffs;
    for (const auto& cj : j.at("coeffs")) {
        if (ctx->kind() == FieldKind::rationals) {
            coeffs.push_back(ctx->from_rational(Rational(cj.get<std::string>())));
        } else if (ctx->kind() == FieldKind::prime) {
            coeffs.push_back(ctx->from_residue(cj.at(0).get<std::uint64_t>()));
        } else {
            coeffs.push_back(ctx->from_coeffs(cj.get<std::vector<std::uint64_t>>()));
        }
    }
    return Poly::from_coeffs(ctx, std::move(coeffs));
}

}  // namespace h90
