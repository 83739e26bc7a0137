#include "h90/lifts.hpp"

#include <set>
#include <unordered_set>

namespace h90 {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::uint64_t upow2(unsigned e) { return std::uint64_t{1} << e; }
}

std::uint64_t canonical_exponent(std::uint64_t e, std::uint64_t M) {
    if (e == 0) fail("canonical exponents are positive");
    return 1 + ((e - 1) % M);
}

ExponentFunction ExponentFunction::zero(std::uint64_t k) {
    ExponentFunction f;
    f.ctx = FieldCtx::extension(2, 3 * static_cast<unsigned>(k));
    f.q = upow2(static_cast<unsigned>(k));
    f.M = f.q * f.q * f.q - 1;
    f.constant = f.ctx->zero();
    return f;
}

void ExponentFunction::add_term(std::uint64_t exponent, const FElem& coeff) {
    if (coeff.is_zero()) return;
    std::uint64_t e = canonical_exponent(exponent, M);
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms.erase(it);
}

bool ExponentFunction::operator==(const ExponentFunction& o) const {
    if (q != o.q || !(constant == o.constant)) return false;
    if (terms.size() != o.terms.size()) return false;
    for (const auto& [e, c] : terms) {
        auto it = o.terms.find(e);
        if (it == o.terms.end() || !(it->second == c)) return false;
    }
    return true;
}

FElem ExponentFunction::eval(const FElem& x) const {
    FElem acc = constant;
    for (const auto& [e, c] : terms)
        acc = acc + c * x.pow(BigInt(static_cast<unsigned long>(e)));
    return acc;
}

ExponentFunction delta_apply(const ExponentFunction& f) {
    ExponentFunction out = f;
    out.terms.clear();
    for (const auto& [e, c] : f.terms) {
        out.add_term(canonical_exponent(e * f.q, f.M), c.pow(static_cast<long long>(f.q)));
        out.add_term(e, c);  // -c = c in characteristic two
    }
    out.constant = f.constant.pow(static_cast<long long>(f.q)) - f.constant;
    return out;
}

ExponentFunction pd_delta_expansion(unsigned a, unsigned k) {
    if (a < 1 || k < 1) fail("a and k must be >= 1");
    std::uint64_t d = upow2(a) - 1;
    ExponentFunction base = ExponentFunction::zero(k);
    FElem one = base.ctx->one();
    // (X^q + X)^d = sum_j X^{q(d-j)+j}: all binomials are 1 for d = 2^a - 1
    for (std::uint64_t j = 0; j <= d; ++j) base.add_term(base.q * (d - j) + j, one);
    return delta_apply(base);
}

long long orbit_count_oracle(unsigned a, unsigned k) {
    ExponentFunction pd = pd_delta_expansion(a, k);
    if (!pd.constant.is_zero())
        throw std::logic_error("target has a constant component");
    std::set<std::uint64_t> support;
    for (const auto& [e, c] : pd.terms) support.insert(e);
    std::set<std::uint64_t> seen;
    long long orbits = 0;
    for (std::uint64_t e : support) {
        if (seen.count(e)) continue;
        std::uint64_t e1 = canonical_exponent(e * pd.q, pd.M);
        std::uint64_t e2 = canonical_exponent(e1 * pd.q, pd.M);
        if (e1 == e && e2 == e)
            throw std::logic_error("support on a q-fixed exponent class");
        seen.insert(e);
        seen.insert(e1);
        seen.insert(e2);
        ++orbits;
    }
    return orbits;
}

long long min_primitive_terms(unsigned a, unsigned k) {
    if (a < 1 || k < 1) fail("a and k must be >= 1");
    unsigned b = a % (3 * k);
    if (b == 0) return 0;
    std::uint64_t q = upow2(k);
    std::uint64_t S = q * q + q + 1;
    std::uint64_t R = 1;
    for (unsigned i = 0; i < b; ++i) R = (R * 2) % S;
    // I_R = {0, ..., R-1}; T(j) = q j - q (2^b - 1) mod S
    std::uint64_t shift = (q % S) * ((R + S - 1) % S) % S;  // q (R - 1) with R = 2^b mod S
    std::vector<bool> in_I(S, false), in_T(S, false);
    for (std::uint64_t j = 0; j < R; ++j) in_I[j] = true;
    for (std::uint64_t j = 0; j < R; ++j) {
        std::uint64_t t = ((q % S) * j + S - shift % S) % S;
        in_T[t] = true;
    }
    long long symm = 0;
    for (std::uint64_t j = 0; j < S; ++j)
        if (in_I[j] != in_T[j]) ++symm;
    return symm / 2;
}

ExponentFunction sharp_primitive(unsigned a, unsigned k) {
    if (a < 1 || k < 1) fail("a and k must be >= 1");
    std::uint64_t d = upow2(a) - 1;
    std::uint64_t q = upow2(k);
    if (!(d == 1 || (1 < d && d < q - 1)))
        fail("sharp primitive defined in the stable range 1 < d < q-1 or d = 1");
    ExponentFunction f = ExponentFunction::zero(k);
    FElem one = f.ctx->one();
    f.add_term(q * q * d, one);
    for (std::uint64_t j = 1; j < d; ++j) f.add_term(q * (d - j) + j, one);
    ExponentFunction target = pd_delta_expansion(a, k);
    if (!(delta_apply(f) == target))
        throw std::logic_error("sharp primitive fails delta(F_0) = P_d(delta X)");
    return f;
}

FullFieldLift fullfield_lift_check(unsigned a, unsigned m, const FElem& c, unsigned k,
                                   std::uint64_t guard) {
    if (a < 1 || k < 1) fail("a and k must be >= 1");
    FullFieldLift out;
    FieldCtxPtr L = FieldCtx::extension(2, 3 * k);
    if (!c.ctx()->same(*L)) fail("coefficient must live in F_{q^3}");
    if (L->order() > static_cast<unsigned long>(guard))
        throw GuardExceeded("full-field enumeration exceeds guard");
    std::uint64_t q = upow2(k);
    std::uint64_t d = upow2(a) - 1;

    out.criterion = gcd_u64(a, k) == 1 && a % 3 != 0 && !ext_trace(c, k).is_zero();

    BigInt e1(static_cast<unsigned long>(upow2(m)));
    BigInt e2 = e1 * static_cast<unsigned long>(q);
    BigInt e3 = e2 * static_cast<unsigned long>(q);
    FElem cq = frobenius_q(c, k, 1);
    FElem cq2 = frobenius_q(c, k, 2);

    std::unordered_set<std::string> images;
    bool injective = true;
    std::uint64_t total = L->order().get_ui();
    for (std::uint64_t idx = 0; idx < total && injective; ++idx) {
        FElem x = L->element_at(BigInt(static_cast<unsigned long>(idx)));
        FElem dx = x.pow(static_cast<long long>(q)) - x;
        FElem val = dx.pow(static_cast<long long>(d)) + c * x.pow(e1) + cq * x.pow(e2) +
                    cq2 * x.pow(e3);
        injective = images.insert(val.key()).second;
    }
    out.permutes = injective;
    return out;
}

}  // namespace h90
