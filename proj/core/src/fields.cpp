#include "h90/fields.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace h90 {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    if (s >= p) s -= p;
    return s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) fail("division by zero in F_p");
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(p), newr = static_cast<long long>(a % p);
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1) fail("element not invertible mod p");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

// ---- raw F_p[x] arithmetic on coefficient vectors (lowest-first) ----

using PV = std::vector<std::uint64_t>;

void pf_trim(PV& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

PV pf_add(const PV& a, const PV& b, std::uint64_t p) {
    PV r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = addmod(x, y, p);
    }
    pf_trim(r);
    return r;
}

PV pf_sub(const PV& a, const PV& b, std::uint64_t p) {
    PV r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = submod(x, y, p);
    }
    pf_trim(r);
    return r;
}

PV pf_mul(const PV& a, const PV& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PV r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    }
    pf_trim(r);
    return r;
}

// Remainder of a modulo b (b nonzero).
PV pf_rem(PV a, const PV& b, std::uint64_t p) {
    std::uint64_t lcinv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint64_t q = mulmod(a.back(), lcinv, p);
        std::size_t off = a.size() - b.size();
        if (q != 0)
            for (std::size_t i = 0; i < b.size(); ++i)
                a[off + i] = submod(a[off + i], mulmod(q, b[i], p), p);
        a.pop_back();
        pf_trim(a);
        if (a.empty()) break;
    }
    return a;
}

PV pf_gcd(PV a, PV b, std::uint64_t p) {
    pf_trim(a); pf_trim(b);
    while (!b.empty()) {
        PV r = pf_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        std::uint64_t s = inv_mod(a.back(), p);
        for (auto& c : a) c = mulmod(c, s, p);
    }
    return a;
}

// Quotient and remainder of a / b over F_p (b nonzero).
std::pair<PV, PV> pf_divrem(PV a, const PV& b, std::uint64_t p) {
    PV q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, 0);
    std::uint64_t lcinv = inv_mod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        std::uint64_t qc = mulmod(a.back(), lcinv, p);
        std::size_t off = a.size() - b.size();
        q[off] = qc;
        if (qc != 0)
            for (std::size_t i = 0; i < b.size(); ++i)
                a[off + i] = submod(a[off + i], mulmod(qc, b[i], p), p);
        a.pop_back();
        pf_trim(a);
    }
    pf_trim(q);
    return {q, a};
}

// Inverse of a modulo m in F_p[x] (gcd(a, m) = 1).
PV pf_inv_mod(const PV& a, const PV& m, std::uint64_t p) {
    PV r0 = m, r1 = pf_rem(a, m, p);
    PV t0 = {}, t1 = {1};
    if (r1.empty()) fail("division by zero in extension field");
    while (!r1.empty()) {
        auto [q, r2] = pf_divrem(r0, r1, p);
        PV t2 = pf_sub(t0, pf_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) fail("element not invertible in extension field");
    std::uint64_t s = inv_mod(r0[0], p);
    for (auto& c : t0) c = mulmod(c, s, p);
    pf_trim(t0);
    return pf_rem(std::move(t0), m, p);
}

PV pf_powmod(PV base, const BigInt& e, const PV& m, std::uint64_t p) {
    PV r = {1};
    base = pf_rem(std::move(base), m, p);
    mpz_srcptr n = e.get_mpz_t();
    std::size_t bits = mpz_sizeinbase(n, 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = pf_rem(pf_mul(r, r, p), m, p);
        if (mpz_tstbit(n, static_cast<mp_bitcnt_t>(i)))
            r = pf_rem(pf_mul(r, base, p), m, p);
    }
    return r;
}

// Irreducibility of monic f over F_p by the distinct-degree sieve: f of
// degree n is irreducible iff gcd(x^{p^i} - x, f) is trivial for every
// i <= n/2.  Reducible candidates exit on their smallest factor degree.
bool pf_is_irreducible(const PV& f, std::uint64_t p) {
    if (f.size() < 2) return false;
    unsigned n = static_cast<unsigned>(f.size() - 1);
    if (n == 1) return true;
    PV x = {0, 1};
    PV xp = x;
    BigInt pe(static_cast<unsigned long>(p));
    for (unsigned i = 1; i <= n / 2; ++i) {
        xp = pf_powmod(xp, pe, f, p);
        PV g = pf_gcd(pf_sub(xp, x, p), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

PV pf_minimal_irreducible(std::uint64_t p, unsigned n) {
    if (n == 0) fail("extension degree must be >= 1");
    // candidates ordered by sum c_i p^i over the non-leading coefficients
    BigInt bound = pow_u64(p, n);
    for (BigInt v = 0; v < bound; ++v) {
        PV f(n + 1, 0);
        BigInt t = v;
        for (unsigned i = 0; i < n; ++i) {
            BigInt digit = t % static_cast<unsigned long>(p);
            f[i] = digit.get_ui();
            t /= static_cast<unsigned long>(p);
        }
        f[n] = 1;
        if (pf_is_irreducible(f, p)) return f;
    }
    fail("no irreducible polynomial found");  // unreachable
}

struct CtxKey {
    std::uint64_t p;
    unsigned n;
    std::vector<std::uint64_t> mod;
    bool operator<(const CtxKey& o) const {
        return std::tie(p, n, mod) < std::tie(o.p, o.n, o.mod);
    }
};

std::mutex g_ctx_mutex;
std::map<CtxKey, FieldCtxPtr> g_ctx_cache;

}  // namespace

// ---- FieldCtx ----

FieldCtx::FieldCtx(FieldKind k, std::uint64_t p, unsigned n, std::vector<std::uint64_t> mod)
    : kind_(k), p_(p), n_(n), mod_(std::move(mod)) {
    order_ = kind_ == FieldKind::rationals ? BigInt(0) : pow_u64(p_, n_);
}

FieldCtxPtr FieldCtx::rationals() {
    static FieldCtxPtr ctx(new FieldCtx(FieldKind::rationals, 0, 1, {}));
    return ctx;
}

FieldCtxPtr FieldCtx::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) fail("characteristic must be prime");
    if (p >= (std::uint64_t{1} << 62)) fail("prime too large");
    std::lock_guard<std::mutex> lock(g_ctx_mutex);
    CtxKey key{p, 1, {}};
    auto it = g_ctx_cache.find(key);
    if (it != g_ctx_cache.end()) return it->second;
    FieldCtxPtr ctx(new FieldCtx(FieldKind::prime, p, 1, {}));
    g_ctx_cache.emplace(key, ctx);
    return ctx;
}

FieldCtxPtr FieldCtx::extension(std::uint64_t p, unsigned n) {
    if (n == 1) return prime(p);
    if (!is_prime_u64(p)) fail("characteristic must be prime");
    {
        std::lock_guard<std::mutex> lock(g_ctx_mutex);
        CtxKey key{p, n, {}};
        auto it = g_ctx_cache.find(key);
        if (it != g_ctx_cache.end()) return it->second;
    }
    PV mod = pf_minimal_irreducible(p, n);
    std::lock_guard<std::mutex> lock(g_ctx_mutex);
    CtxKey key{p, n, {}};
    auto it = g_ctx_cache.find(key);
    if (it != g_ctx_cache.end()) return it->second;
    FieldCtxPtr ctx(new FieldCtx(FieldKind::extension, p, n, std::move(mod)));
    g_ctx_cache.emplace(key, ctx);
    return ctx;
}

FieldCtxPtr FieldCtx::extension(std::uint64_t p, unsigned n, std::vector<std::uint64_t> modulus) {
    if (!is_prime_u64(p)) fail("characteristic must be prime");
    if (modulus.size() != n + 1 || n < 1) fail("modulus must have degree n >= 1");
    for (auto& c : modulus) c %= p;
    if (modulus.back() != 1) fail("modulus must be monic");
    if (!pf_is_irreducible(modulus, p)) fail("modulus must be irreducible");
    if (n == 1) return prime(p);
    std::lock_guard<std::mutex> lock(g_ctx_mutex);
    CtxKey key{p, n, modulus};
    auto it = g_ctx_cache.find(key);
    if (it != g_ctx_cache.end()) return it->second;
    FieldCtxPtr ctx(new FieldCtx(FieldKind::extension, p, n, std::move(modulus)));
    g_ctx_cache.emplace(key, ctx);
    return ctx;
}

const std::vector<std::uint64_t>& FieldCtx::modulus_coeffs() const {
    if (kind_ != FieldKind::extension) fail("modulus defined for extension contexts only");
    return mod_;
}

bool FieldCtx::same(const FieldCtx& other) const {
    if (this == &other) return true;
    return kind_ == other.kind_ && p_ == other.p_ && n_ == other.n_ && mod_ == other.mod_;
}

FElem FieldCtx::zero() const { return from_int(0); }
FElem FieldCtx::one() const { return from_int(1); }

FElem FieldCtx::from_int(long long v) const {
    FElem e;
    e.ctx_ = shared_from_this();
    switch (kind_) {
        case FieldKind::rationals:
            e.v_ = Rational(static_cast<long>(v));
            break;
        case FieldKind::prime: {
            long long r = v % static_cast<long long>(p_);
            if (r < 0) r += static_cast<long long>(p_);
            e.v_ = static_cast<std::uint64_t>(r);
            break;
        }
        case FieldKind::extension: {
            long long r = v % static_cast<long long>(p_);
            if (r < 0) r += static_cast<long long>(p_);
            PV c;
            if (r != 0) c.push_back(static_cast<std::uint64_t>(r));
            e.v_ = std::move(c);
            break;
        }
    }
    return e;
}

FElem FieldCtx::from_rational(const Rational& q) const {
    if (kind_ != FieldKind::rationals) fail("rational values require the rationals context");
    FElem e;
    e.ctx_ = shared_from_this();
    Rational c = q;
    c.canonicalize();
    e.v_ = std::move(c);
    return e;
}

FElem FieldCtx::from_residue(std::uint64_t r) const {
    if (kind_ == FieldKind::rationals) fail("residues require a finite context");
    if (kind_ == FieldKind::prime) {
        FElem e;
        e.ctx_ = shared_from_this();
        e.v_ = r % p_;
        return e;
    }
    return from_coeffs({r % p_});
}

FElem FieldCtx::from_coeffs(std::vector<std::uint64_t> c) const {
    if (kind_ != FieldKind::extension) fail("coefficient vectors require an extension context");
    for (auto& x : c) x %= p_;
    if (c.size() > n_) c = pf_rem(std::move(c), mod_, p_);
    pf_trim(c);
    FElem e;
    e.ctx_ = shared_from_this();
    e.v_ = std::move(c);
    return e;
}

FElem FieldCtx::element_at(const BigInt& idx) const {
    switch (kind_) {
        case FieldKind::rationals:
            fail("element_at requires a finite context");
        case FieldKind::prime: {
            BigInt r = idx % static_cast<unsigned long>(p_);
            return from_residue(r.get_ui());
        }
        default: {
            PV c(n_, 0);
            BigInt t = idx % order_;
            for (unsigned i = 0; i < n_; ++i) {
                BigInt digit = t % static_cast<unsigned long>(p_);
                c[i] = digit.get_ui();
                t /= static_cast<unsigned long>(p_);
            }
            return from_coeffs(std::move(c));
        }
    }
}

BigInt FieldCtx::index_of(const FElem& x) const {
    if (!x.ctx() || !same(*x.ctx())) fail("field context mismatch");
    switch (kind_) {
        case FieldKind::rationals:
            fail("index_of requires a finite context");
        case FieldKind::prime:
            return BigInt(static_cast<unsigned long>(x.residue()));
        default: {
            BigInt r = 0;
            const auto& c = x.coeffs();
            for (std::size_t i = c.size(); i-- > 0;) {
                r *= static_cast<unsigned long>(p_);
                r += static_cast<unsigned long>(c[i]);
            }
            return r;
        }
    }
}

FElem FieldCtx::gen() const {
    if (kind_ != FieldKind::extension) fail("gen defined for extension contexts only");
    return from_coeffs({0, 1});
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case FieldKind::rationals: os << "Q"; break;
        case FieldKind::prime: os << "F_" << p_; break;
        case FieldKind::extension: os << "F_" << p_ << "^" << n_; break;
    }
    return os.str();
}

// ---- FElem ----

namespace {
void check_ctx(const FElem& a, const FElem& b) {
    if (!a.ctx() || !b.ctx()) fail("uninitialized field element");
    if (!a.ctx()->same(*b.ctx())) fail("field context mismatch");
}
}  // namespace

bool FElem::is_zero() const {
    switch (ctx_->kind()) {
        case FieldKind::rationals: return std::get<Rational>(v_) == 0;
        case FieldKind::prime: return std::get<std::uint64_t>(v_) == 0;
        default: return std::get<PV>(v_).empty();
    }
}

bool FElem::is_one() const { return *this == ctx_->one(); }

FElem FElem::operator+(const FElem& o) const {
    check_ctx(*this, o);
    FElem r;
    r.ctx_ = ctx_;
    switch (ctx_->kind()) {
        case FieldKind::rationals:
            r.v_ = Rational(std::get<Rational>(v_) + std::get<Rational>(o.v_));
            break;
        case FieldKind::prime:
            r.v_ = addmod(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_), ctx_->characteristic());
            break;
        default:
            r.v_ = pf_add(std::get<PV>(v_), std::get<PV>(o.v_), ctx_->characteristic());
    }
    return r;
}

FElem FElem::operator-(const FElem& o) const {
    check_ctx(*this, o);
    FElem r;
    r.ctx_ = ctx_;
    switch (ctx_->kind()) {
        case FieldKind::rationals:
            r.v_ = Rational(std::get<Rational>(v_) - std::get<Rational>(o.v_));
            break;
        case FieldKind::prime:
            r.v_ = submod(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_), ctx_->characteristic());
            break;
        default:
            r.v_ = pf_sub(std::get<PV>(v_), std::get<PV>(o.v_), ctx_->characteristic());
    }
    return r;
}

FElem FElem::operator*(const FElem& o) const {
    check_ctx(*this, o);
    FElem r;
    r.ctx_ = ctx_;
    switch (ctx_->kind()) {
        case FieldKind::rationals:
            r.v_ = Rational(std::get<Rational>(v_) * std::get<Rational>(o.v_));
            break;
        case FieldKind::prime:
            r.v_ = mulmod(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_), ctx_->characteristic());
            break;
        default:
            r.v_ = pf_rem(pf_mul(std::get<PV>(v_), std::get<PV>(o.v_), ctx_->characteristic()),
                          ctx_->modulus_coeffs(), ctx_->characteristic());
    }
    return r;
}

FElem FElem::operator/(const FElem& o) const { return *this * o.inv(); }

FElem FElem::operator-() const {
    FElem r;
    r.ctx_ = ctx_;
    switch (ctx_->kind()) {
        case FieldKind::rationals:
            r.v_ = Rational(-std::get<Rational>(v_));
            break;
        case FieldKind::prime:
            r.v_ = submod(0, std::get<std::uint64_t>(v_), ctx_->characteristic());
            break;
        default: {
            PV c = std::get<PV>(v_);
            for (auto& x : c) x = submod(0, x, ctx_->characteristic());
            r.v_ = std::move(c);
        }
    }
    return r;
}

bool FElem::operator==(const FElem& o) const {
    check_ctx(*this, o);
    return v_ == o.v_;
}

FElem FElem::inv() const {
    if (is_zero()) fail("division by zero");
    FElem r;
    r.ctx_ = ctx_;
    switch (ctx_->kind()) {
        case FieldKind::rationals:
            r.v_ = Rational(1 / std::get<Rational>(v_));
            break;
        case FieldKind::prime:
            r.v_ = inv_mod(std::get<std::uint64_t>(v_), ctx_->characteristic());
            break;
        default:
            r.v_ = pf_inv_mod(std::get<PV>(v_), ctx_->modulus_coeffs(), ctx_->characteristic());
    }
    return r;
}

FElem FElem::pow(const BigInt& e) const {
    if (e < 0) return inv().pow(BigInt(-e));
    if (ctx_->kind() == FieldKind::extension) {
        FElem r;
        r.ctx_ = ctx_;
        r.v_ = pf_powmod(std::get<PV>(v_), e, ctx_->modulus_coeffs(), ctx_->characteristic());
        return r;
    }
    FElem base = *this, result = ctx_->one();
    mpz_srcptr n = e.get_mpz_t();
    std::size_t bits = mpz_sizeinbase(n, 2);
    if (e == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = result * result;
        if (mpz_tstbit(n, static_cast<mp_bitcnt_t>(i))) result = result * base;
    }
    return result;
}

FElem FElem::pow(long long e) const { return pow(BigInt(static_cast<long>(e))); }

const Rational& FElem::rational() const { return std::get<Rational>(v_); }
std::uint64_t FElem::residue() const { return std::get<std::uint64_t>(v_); }
const std::vector<std::uint64_t>& FElem::coeffs() const { return std::get<PV>(v_); }

std::string FElem::str() const {
    switch (ctx_->kind()) {
        case FieldKind::rationals:
            return std::get<Rational>(v_).get_str();
        case FieldKind::prime:
            return std::to_string(std::get<std::uint64_t>(v_));
        default: {
            std::ostringstream os;
            os << "[";
            const auto& c = std::get<PV>(v_);
            for (std::size_t i = 0; i < ctx_->degree(); ++i) {
                if (i) os << ",";
                os << (i < c.size() ? c[i] : 0);
            }
            os << "]";
            return os.str();
        }
    }
}

std::string FElem::key() const { return str(); }

FElem frobenius(const FElem& x, unsigned i) {
    if (!x.ctx()->finite()) fail("frobenius requires a finite context");
    std::uint64_t p = x.ctx()->characteristic();
    FElem r = x;
    for (unsigned k = 0; k < i; ++k) r = r.pow(BigInt(static_cast<unsigned long>(p)));
    return r;
}

FElem frobenius_q(const FElem& x, unsigned sub_degree, unsigned i) {
    return frobenius(x, sub_degree * i);
}

FElem ext_trace(const FElem& x, unsigned sub_degree) {
    const auto& ctx = x.ctx();
    if (!ctx->finite()) fail("trace requires a finite context");
    unsigned n = ctx->degree();
    if (sub_degree == 0 || n % sub_degree != 0) fail("sub_degree must divide the extension degree");
    unsigned steps = n / sub_degree;
    FElem acc = x, cur = x;
    for (unsigned j = 1; j < steps; ++j) {
        cur = frobenius(cur, sub_degree);
        acc = acc + cur;
    }
    return acc;
}

FElem ext_norm(const FElem& x, unsigned sub_degree) {
    const auto& ctx = x.ctx();
    if (!ctx->finite()) fail("norm requires a finite context");
    unsigned n = ctx->degree();
    if (sub_degree == 0 || n % sub_degree != 0) fail("sub_degree must divide the extension degree");
    unsigned steps = n / sub_degree;
    FElem acc = x, cur = x;
    for (unsigned j = 1; j < steps; ++j) {
        cur = frobenius(cur, sub_degree);
        acc = acc * cur;
    }
    return acc;
}

namespace {

// Basis of the kernel of an F_p-linear map on F_{p^n}, the map given by its
// images of the power basis; vectors returned in reduced echelon order.
std::vector<PV> fp_kernel_basis(std::vector<PV> cols, unsigned n, std::uint64_t p) {
    // cols[j] = image of basis vector j, as length-n vectors
    // Build matrix rows = n (image coordinates), cols = n, eliminate.
    std::vector<PV> m(n, PV(n, 0));
    for (unsigned j = 0; j < n; ++j)
        for (unsigned i = 0; i < n; ++i)
            m[i][j] = i < cols[j].size() ? cols[j][i] : 0;
    std::vector<int> pivot_col_of_row(n, -1);
    std::vector<bool> col_is_pivot(n, false);
    unsigned row = 0;
    for (unsigned col = 0; col < n && row < n; ++col) {
        unsigned sel = row;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(m[sel], m[row]);
        std::uint64_t s = inv_mod(m[row][col], p);
        for (unsigned j = 0; j < n; ++j) m[row][j] = mulmod(m[row][j], s, p);
        for (unsigned i = 0; i < n; ++i) {
            if (i == row || m[i][col] == 0) continue;
            std::uint64_t f = m[i][col];
            for (unsigned j = 0; j < n; ++j)
                m[i][j] = submod(m[i][j], mulmod(f, m[row][j], p), p);
        }
        pivot_col_of_row[row] = static_cast<int>(col);
        col_is_pivot[col] = true;
        ++row;
    }
    std::vector<PV> basis;
    for (unsigned freec = 0; freec < n; ++freec) {
        if (col_is_pivot[freec]) continue;
        PV v(n, 0);
        v[freec] = 1;
        for (unsigned r = 0; r < row; ++r) {
            int pc = pivot_col_of_row[r];
            if (pc >= 0) v[pc] = submod(0, m[r][freec], p);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<FElem> span_elements(const FieldCtxPtr& ctx, const std::vector<PV>& basis,
                                 std::uint64_t guard) {
    std::uint64_t p = ctx->characteristic();
    unsigned n = ctx->degree();
    BigInt count = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) count *= static_cast<unsigned long>(p);
    if (count > static_cast<unsigned long>(guard))
        throw GuardExceeded("subspace enumeration exceeds guard");
    std::uint64_t total = count.get_ui();
    std::vector<FElem> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        PV acc(n, 0);
        std::uint64_t t = idx;
        for (const auto& b : basis) {
            std::uint64_t digit = t % p;
            t /= p;
            if (digit != 0)
                for (unsigned i = 0; i < n; ++i)
                    acc[i] = addmod(acc[i], mulmod(digit, b[i], p), p);
        }
        pf_trim(acc);
        out.push_back(ctx->from_coeffs(std::move(acc)));
    }
    return out;
}

}  // namespace

std::vector<FElem> subfield_elements(const FieldCtxPtr& ctx, unsigned sub_degree) {
    if (!ctx->finite()) fail("subfield enumeration requires a finite context");
    unsigned n = ctx->degree();
    if (sub_degree == 0 || n % sub_degree != 0) fail("sub_degree must divide the extension degree");
    if (ctx->kind() == FieldKind::prime) {
        std::vector<FElem> out;
        for (std::uint64_t r = 0; r < ctx->characteristic(); ++r)
            out.push_back(ctx->from_residue(r));
        return out;
    }
    std::uint64_t p = ctx->characteristic();
    // kernel of x -> x^{p^sub} - x
    std::vector<PV> cols(n);
    for (unsigned j = 0; j < n; ++j) {
        PV e(j + 1, 0);
        e[j] = 1;
        FElem x = ctx->from_coeffs(e);
        FElem img = frobenius(x, sub_degree) - x;
        cols[j] = img.is_zero() ? PV{} : img.coeffs();
    }
    auto basis = fp_kernel_basis(std::move(cols), n, p);
    return span_elements(ctx, basis, std::uint64_t{1} << 40);
}

std::vector<FElem> trace_zero_elements(const FieldCtxPtr& ctx, unsigned sub_degree,
                                       std::uint64_t guard) {
    if (ctx->kind() != FieldKind::extension) fail("trace-zero enumeration requires an extension");
    unsigned n = ctx->degree();
    if (sub_degree == 0 || n % sub_degree != 0) fail("sub_degree must divide the extension degree");
    std::uint64_t p = ctx->characteristic();
    std::vector<PV> cols(n);
    for (unsigned j = 0; j < n; ++j) {
        PV e(j + 1, 0);
        e[j] = 1;
        FElem x = ctx->from_coeffs(e);
        FElem img = ext_trace(x, sub_degree);
        cols[j] = img.is_zero() ? PV{} : img.coeffs();
    }
    auto basis = fp_kernel_basis(std::move(cols), n, p);
    return span_elements(ctx, basis, guard);
}

std::vector<FElem> roots_of_unity(const FieldCtxPtr& ctx, std::uint64_t d) {
    if (!ctx->finite()) fail("roots of unity enumeration requires a finite context");
    if (d == 0) fail("d must be positive");
    BigInt m = ctx->order() - 1;
    if (m % static_cast<unsigned long>(d) != 0) fail("d must divide the group order");
    BigInt cofactor = m / static_cast<unsigned long>(d);
    auto ells = prime_factors(d);
    FElem zeta = ctx->one();
    bool found = d == 1;
    for (BigInt idx = 2; !found && idx < ctx->order(); ++idx) {
        FElem x = ctx->element_at(idx);
        if (x.is_zero()) continue;
        FElem y = x.pow(cofactor);
        bool ok = !y.is_zero();
        for (std::uint64_t ell : ells) {
            if (!ok) break;
            if (y.pow(BigInt(static_cast<unsigned long>(d / ell))).is_one()) ok = false;
        }
        if (ok) {
            zeta = y;
            found = true;
        }
    }
    if (!found) fail("no primitive root of unity found");
    std::vector<FElem> out;
    out.reserve(d);
    FElem cur = ctx->one();
    for (std::uint64_t i = 0; i < d; ++i) {
        out.push_back(cur);
        cur = cur * zeta;
    }
    return out;
}

FElem embed(const FElem& x, const FieldCtxPtr& target) {
    if (x.ctx()->same(*target)) return x;
    if (x.ctx()->kind() == FieldKind::prime && target->kind() == FieldKind::extension &&
        x.ctx()->characteristic() == target->characteristic())
        return target->from_residue(x.residue());
    fail("unsupported embedding");
}

// ---- Poly ----

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FElem& c) {
    Poly r(c.ctx());
    if (!c.is_zero()) r.c_ = {c};
    return r;
}

Poly Poly::from_coeffs(FieldCtxPtr ctx, std::vector<FElem> coeffs) {
    Poly r(std::move(ctx));
    r.c_ = std::move(coeffs);
    for (const auto& c : r.c_)
        if (!c.ctx()->same(*r.ctx_)) fail("field context mismatch in polynomial");
    r.trim();
    return r;
}

Poly Poly::from_ints(const FieldCtxPtr& ctx, const std::vector<long long>& c) {
    std::vector<FElem> v;
    v.reserve(c.size());
    for (long long x : c) v.push_back(ctx->from_int(x));
    return from_coeffs(ctx, std::move(v));
}

Poly Poly::monomial(const FieldCtxPtr& ctx, unsigned deg, const FElem& c) {
    Poly r(ctx);
    if (c.is_zero()) return r;
    r.c_.assign(deg + 1, ctx->zero());
    r.c_[deg] = c;
    return r;
}

Poly Poly::identity(const FieldCtxPtr& ctx) { return monomial(ctx, 1, ctx->one()); }

FElem Poly::coeff(unsigned i) const {
    if (i < c_.size()) return c_[i];
    return ctx_->zero();
}

FElem Poly::lc() const {
    if (c_.empty()) fail("leading coefficient of the zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    if (!ctx_->same(*o.ctx_)) fail("field context mismatch");
    Poly r(ctx_);
    std::size_t n = std::max(c_.size(), o.c_.size());
    r.c_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.c_.push_back(coeff(static_cast<unsigned>(i)) + o.coeff(static_cast<unsigned>(i)));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    if (!ctx_->same(*o.ctx_)) fail("field context mismatch");
    Poly r(ctx_);
    std::size_t n = std::max(c_.size(), o.c_.size());
    r.c_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.c_.push_back(coeff(static_cast<unsigned>(i)) - o.coeff(static_cast<unsigned>(i)));
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (!ctx_->same(*o.ctx_)) fail("field context mismatch");
    if (is_zero() || o.is_zero()) return Poly(ctx_);
    Poly r(ctx_);
    r.c_.assign(c_.size() + o.c_.size() - 1, ctx_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r(ctx_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!ctx_->same(*o.ctx_)) return false;
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

Poly Poly::scale(const FElem& c) const {
    if (c.is_zero()) return Poly(ctx_);
    Poly r(ctx_);
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(x * c);
    return r;
}

Poly Poly::shift(unsigned k) const {
    if (is_zero()) return *this;
    Poly r(ctx_);
    r.c_.assign(c_.size() + k, ctx_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& den) const {
    if (!ctx_->same(*den.ctx_)) fail("field context mismatch");
    if (den.is_zero()) fail("polynomial division by zero");
    Poly q(ctx_), r = *this;
    if (r.degree() < den.degree()) return {q, r};
    q.c_.assign(r.c_.size() - den.c_.size() + 1, ctx_->zero());
    FElem lcinv = den.lc().inv();
    while (!r.is_zero() && r.degree() >= den.degree()) {
        unsigned off = static_cast<unsigned>(r.degree() - den.degree());
        FElem f = r.lc() * lcinv;
        q.c_[off] = f;
        for (std::size_t i = 0; i < den.c_.size(); ++i)
            r.c_[off + i] = r.c_[off + i] - f * den.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly Poly::derivative() const {
    Poly r(ctx_);
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * ctx_->from_int(static_cast<long long>(i)));
    r.trim();
    return r;
}

FElem Poly::eval(const FElem& x) const {
    FieldCtxPtr ectx = x.ctx();
    bool lift = !ctx_->same(*ectx);
    if (lift && !(ctx_->kind() == FieldKind::prime && ectx->kind() == FieldKind::extension &&
                  ctx_->characteristic() == ectx->characteristic()))
        fail("field context mismatch in evaluation");
    FElem acc = ectx->zero();
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + (lift ? embed(c_[i], ectx) : c_[i]);
    }
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) fail("monic of the zero polynomial");
    if (lc().is_one()) return *this;
    return scale(lc().inv());
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(ctx_->one());
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Poly Poly::frobenius_power(unsigned s) const {
    if (ctx_->characteristic() == 0) fail("frobenius power requires positive characteristic");
    if (s == 0) return *this;
    BigInt ps = pow_u64(ctx_->characteristic(), s);
    if (!ps.fits_ulong_p()) fail("frobenius power exponent too large");
    unsigned long e = ps.get_ui();
    Poly r(ctx_);
    if (is_zero()) return r;
    r.c_.assign(static_cast<std::size_t>(degree()) * e + 1, ctx_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) r.c_[i * e] = c_[i].pow(ps);
    r.trim();
    return r;
}

Poly Poly::reverse(unsigned n) const {
    if (static_cast<int>(n) < degree()) fail("reverse bound below degree");
    Poly r(ctx_);
    r.c_.assign(n + 1, ctx_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[n - i] = c_[i];
    r.trim();
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].str();
        if (i >= 1) os << "*" << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (!a.ctx() || !b.ctx() || !a.ctx()->same(*b.ctx())) fail("field context mismatch in gcd");
    if (a.is_zero() && b.is_zero()) fail("gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divrem(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FElem poly_resultant_field(const Poly& a, const Poly& b) {
    if (!a.ctx()->same(*b.ctx())) fail("field context mismatch in resultant");
    if (a.is_zero() && b.is_zero()) fail("resultant of two zero polynomials");
    const FieldCtxPtr& ctx = a.ctx();
    if (a.is_zero() || b.is_zero()) return ctx->zero();
    // Res(a,b) = lc(b)^{deg a - deg r} (-1)^{deg a deg b} Res(b, r) with r = a mod b.
    Poly f = a, g = b;
    FElem acc = ctx->one();
    bool neg = false;
    while (g.degree() > 0) {
        Poly r = f.divrem(g).second;
        if (r.is_zero()) return ctx->zero();
        int df = f.degree(), dg = g.degree(), dr = r.degree();
        acc = acc * g.lc().pow(static_cast<long long>(df - dr));
        if ((df & 1) && (dg & 1)) neg = !neg;
        f = std::move(g);
        g = std::move(r);
    }
    // g is a nonzero constant
    acc = acc * g.lc().pow(static_cast<long long>(f.degree()));
    return neg ? -acc : acc;
}

FElem poly_discriminant(const Poly& f) {
    if (f.degree() < 1) fail("discriminant of a constant");
    Poly fp = f.derivative();
    if (fp.is_zero()) return f.ctx()->zero();
    return poly_resultant_field(f, fp) / f.lc();
}

bool squarefree(const Poly& f) {
    if (f.is_zero()) fail("squarefree test on the zero polynomial");
    if (f.degree() == 0) return true;
    Poly fp = f.derivative();
    if (fp.is_zero()) return false;
    return poly_gcd(f, fp).degree() == 0;
}

Poly irreducible_modulus(std::uint64_t p, unsigned n) {
    if (n == 0) fail("degree must be >= 1");
    auto ctx = FieldCtx::prime(p);
    PV f = pf_minimal_irreducible(p, n);
    std::vector<FElem> c;
    c.reserve(f.size());
    for (auto x : f) c.push_back(ctx->from_residue(x));
    return Poly::from_coeffs(ctx, std::move(c));
}

bool is_irreducible(const Poly& f) {
    if (f.ctx()->kind() != FieldKind::prime) fail("irreducibility test implemented over prime fields");
    if (f.degree() < 1) return false;
    PV v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.monic().coeffs()) v.push_back(c.residue());
    return pf_is_irreducible(v, f.ctx()->characteristic());
}

unsigned root_multiplicity(const Poly& f, const FElem& x0) {
    if (f.is_zero()) fail("root multiplicity in the zero polynomial");
    Poly lin = Poly::from_coeffs(x0.ctx(), {-x0, x0.ctx()->one()});
    Poly g = f.ctx()->same(*x0.ctx()) ? f : embed(f, x0.ctx());
    unsigned m = 0;
    while (!g.is_zero() && g.eval(x0).is_zero()) {
        g = g.divrem(lin).first;
        ++m;
    }
    return m;
}

Poly embed(const Poly& f, const FieldCtxPtr& target) {
    if (f.ctx()->same(*target)) return f;
    std::vector<FElem> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(embed(x, target));
    return Poly::from_coeffs(target, std::move(c));
}

// ---- BiPoly and the z-resultant ----

void BiPoly::trim() {
    while (!cz_.empty() && cz_.back().is_zero()) cz_.pop_back();
}

BiPoly BiPoly::from_z_coeffs(FieldCtxPtr ctx, std::vector<Poly> cz) {
    BiPoly r;
    r.ctx_ = std::move(ctx);
    r.cz_ = std::move(cz);
    for (const auto& c : r.cz_)
        if (!c.ctx()->same(*r.ctx_)) fail("field context mismatch in bivariate polynomial");
    r.trim();
    return r;
}

BiPoly BiPoly::lift_z(const Poly& f) {
    std::vector<Poly> cz;
    cz.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) cz.push_back(Poly::constant(c));
    return from_z_coeffs(f.ctx(), std::move(cz));
}

BiPoly BiPoly::linear_in_t(const Poly& a, const Poly& b) {
    if (!a.ctx()->same(*b.ctx())) fail("field context mismatch");
    const FieldCtxPtr& ctx = a.ctx();
    int n = std::max(a.degree(), b.degree());
    std::vector<Poly> cz;
    for (int i = 0; i <= n; ++i) {
        std::vector<FElem> tc = {a.coeff(static_cast<unsigned>(i)), b.coeff(static_cast<unsigned>(i))};
        cz.push_back(Poly::from_coeffs(ctx, std::move(tc)));
    }
    return from_z_coeffs(ctx, std::move(cz));
}

namespace {

// Exact division of polynomials over a field; throws if not exact.
Poly poly_exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = a.divrem(b);
    if (!r.is_zero()) fail("inexact polynomial division in determinant elimination");
    return q;
}

// Fraction-free Bareiss determinant of a square matrix with Poly entries.
Poly bareiss_det(std::vector<std::vector<Poly>> m, const FieldCtxPtr& ctx) {
    std::size_t n = m.size();
    if (n == 0) return Poly::constant(ctx->one());
    Poly prev = Poly::constant(ctx->one());
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t sel = k + 1;
            while (sel < n && m[sel][k].is_zero()) ++sel;
            if (sel == n) return Poly::zero(ctx);
            std::swap(m[sel], m[k]);
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = poly_exact_div(t, prev);
            }
            m[i][k] = Poly::zero(ctx);
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return neg ? -det : det;
}

// Specialize a BiPoly at T = t, as a polynomial in z.
Poly bipoly_at(const BiPoly& f, const FElem& t) {
    std::vector<FElem> c;
    c.reserve(f.z_coeffs().size());
    for (const auto& ct : f.z_coeffs()) c.push_back(ct.eval(t));
    return Poly::from_coeffs(f.ctx(), std::move(c));
}

int tdeg_bound(const BiPoly& f) {
    int d = 0;
    for (const auto& c : f.z_coeffs()) d = std::max(d, c.degree());
    return d;
}

Poly lagrange_interpolate(const FieldCtxPtr& ctx, const std::vector<FElem>& xs,
                          const std::vector<FElem>& ys) {
    Poly acc = Poly::zero(ctx);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly basis = Poly::constant(ctx->one());
        FElem denom = ctx->one();
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * Poly::from_coeffs(ctx, {-xs[j], ctx->one()});
            denom = denom * (xs[i] - xs[j]);
        }
        acc = acc + basis.scale(ys[i] / denom);
    }
    return acc;
}

}  // namespace

Poly resultant_z(const BiPoly& a, const BiPoly& b) {
    if (!a.ctx()->same(*b.ctx())) fail("field context mismatch in resultant");
    if (a.is_zero() && b.is_zero()) fail("resultant of two polynomials zero in z");
    const FieldCtxPtr& ctx = a.ctx();
    int da = a.zdeg(), db = b.zdeg();
    if (a.is_zero() || b.is_zero()) return Poly::zero(ctx);
    if (da == 0 && db == 0) return Poly::constant(ctx->one());
    if (da == 0) return a.z_coeffs()[0].pow(static_cast<unsigned>(db));
    if (db == 0) return b.z_coeffs()[0].pow(static_cast<unsigned>(da));

    // Degree of the resultant in T is bounded by da*tdeg(b) + db*tdeg(a).
    long tbound = static_cast<long>(da) * tdeg_bound(b) + static_cast<long>(db) * tdeg_bound(a);

    // Evaluation-interpolation when the field has enough sample points with
    // no leading-coefficient drop; exact over the rationals and large fields.
    bool enough_points =
        ctx->kind() == FieldKind::rationals ||
        ctx->order() > static_cast<unsigned long>(4 * (tbound + 2));
    if (enough_points && tbound >= 0) {
        const Poly& lca = a.z_coeffs().back();
        const Poly& lcb = b.z_coeffs().back();
        std::vector<FElem> xs, ys;
        std::uint64_t idx = 0;
        while (static_cast<long>(xs.size()) < tbound + 1) {
            FElem t = ctx->kind() == FieldKind::rationals
                          ? ctx->from_int(static_cast<long long>(idx))
                          : ctx->element_at(BigInt(static_cast<unsigned long>(idx)));
            ++idx;
            if (lca.eval(t).is_zero() || lcb.eval(t).is_zero()) continue;
            xs.push_back(t);
            ys.push_back(poly_resultant_field(bipoly_at(a, t), bipoly_at(b, t)));
        }
        return lagrange_interpolate(ctx, xs, ys);
    }

    // Small fields: Sylvester matrix with entries in k[T], fraction-free
    // Bareiss elimination.
    std::size_t n = static_cast<std::size_t>(da + db);
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly::zero(ctx)));
    for (int row = 0; row < db; ++row)
        for (int i = 0; i <= da; ++i)
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + i)] =
                a.z_coeffs()[static_cast<std::size_t>(da - i)];
    for (int row = 0; row < da; ++row)
        for (int i = 0; i <= db; ++i)
            m[static_cast<std::size_t>(db + row)][static_cast<std::size_t>(row + i)] =
                b.z_coeffs()[static_cast<std::size_t>(db - i)];
    return bareiss_det(std::move(m), ctx);
}

// ---- ProjPoint / RatFunc ----

ProjPoint ProjPoint::infinity(const FieldCtxPtr& ctx) {
    ProjPoint p;
    p.inf = true;
    p.v = ctx->zero();
    return p;
}

ProjPoint ProjPoint::finite(FElem x) {
    ProjPoint p;
    p.inf = false;
    p.v = std::move(x);
    return p;
}

bool ProjPoint::operator==(const ProjPoint& o) const {
    if (inf != o.inf) return false;
    if (inf) return true;
    return v == o.v;
}

std::string ProjPoint::key() const { return inf ? "inf" : v.key(); }
std::string ProjPoint::str() const { return inf ? "inf" : v.str(); }

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (!num_.ctx() || !den_.ctx() || !num_.ctx()->same(*den_.ctx()))
        fail("field context mismatch in rational function");
    if (den_.is_zero()) fail("zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.ctx()->one());
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divrem(g).first;
        den_ = den_.divrem(g).first;
    }
    FElem s = den_.lc().inv();
    num_ = num_.scale(s);
    den_ = den_.scale(s);
}

RatFunc RatFunc::constant(const FElem& c) {
    return RatFunc(Poly::constant(c), Poly::constant(c.ctx()->one()));
}

RatFunc RatFunc::identity(const FieldCtxPtr& ctx) {
    return RatFunc(Poly::identity(ctx), Poly::constant(ctx->one()));
}

RatFunc RatFunc::from_poly(const Poly& p) {
    return RatFunc(p, Poly::constant(p.ctx()->one()));
}

int RatFunc::degree() const {
    int d = std::max(num_.degree(), den_.degree());
    return d < 0 ? 0 : d;
}

bool RatFunc::is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

bool RatFunc::operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Poly RatFunc::wronskian() const {
    return num_.derivative() * den_ - num_ * den_.derivative();
}

FElem RatFunc::eval(const FElem& x) const {
    FElem d = den_.eval(x);
    if (d.is_zero()) fail("evaluation at a pole");
    return num_.eval(x) / d;
}

ProjPoint RatFunc::eval_proj(const ProjPoint& x) const {
    if (x.inf) return value_at_infinity();
    FieldCtxPtr ectx = x.v.ctx();
    FElem n = num_.eval(x.v);
    FElem d = den_.eval(x.v);
    if (d.is_zero()) {
        if (n.is_zero()) fail("indeterminate projective evaluation");
        return ProjPoint::infinity(ectx);
    }
    return ProjPoint::finite(n / d);
}

ProjPoint RatFunc::value_at_infinity() const {
    const FieldCtxPtr& ctx = num_.ctx();
    int dn = num_.degree(), dd = den_.degree();
    if (dn > dd) return ProjPoint::infinity(ctx);
    if (dn < dd) return ProjPoint::finite(ctx->zero());
    return ProjPoint::finite(num_.lc() / den_.lc());
}

unsigned RatFunc::ramification_index(const ProjPoint& x0) const {
    if (is_constant()) fail("ramification index of a constant map");
    const FieldCtxPtr& ctx = num_.ctx();
    // At infinity use the coordinate w = 1/z; reversing both representatives
    // at the common bound keeps the pair coprime since one of them attains it.
    Poly n = num_, d = den_;
    FieldCtxPtr ectx = x0.inf ? ctx : x0.v.ctx();
    if (x0.inf) {
        unsigned bound = static_cast<unsigned>(degree());
        n = num_.reverse(bound);
        d = den_.reverse(bound);
    }
    if (!ctx->same(*ectx)) {
        n = h90::embed(n, ectx);
        d = h90::embed(d, ectx);
    }
    FElem at = x0.inf ? ectx->zero() : x0.v;
    FElem dv = d.eval(at);
    Poly target;
    if (dv.is_zero()) {
        target = d;  // pole: order of vanishing of the denominator
    } else {
        FElem val = n.eval(at) / dv;
        target = n - d.scale(val);
    }
    if (target.is_zero()) fail("ramification index of a constant map");
    return root_multiplicity(target, at);
}

std::string RatFunc::str(const std::string& var) const {
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

RatFunc embed(const RatFunc& f, const FieldCtxPtr& target) {
    if (f.ctx()->same(*target)) return f;
    return RatFunc(embed(f.num(), target), embed(f.den(), target));
}

// ---- integer utilities ----

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    std::vector<bool> sieve(limit + 1, true);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
    }
    return out;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> prime_powers_up_to(std::uint64_t limit) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p : primes_up_to(limit)) {
        std::uint64_t q = p;
        unsigned j = 1;
        while (q <= limit) {
            out.push_back({p, j});
            if (q > limit / p) break;
            q *= p;
            ++j;
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        BigInt qa = pow_u64(a.first, a.second), qb = pow_u64(b.first, b.second);
        return qa < qb;
    });
    return out;
}

unsigned multiplicative_order(std::uint64_t p, std::uint64_t d) {
    if (d == 1) return 1;
    if (gcd_u64(p % d, d) != 1) fail("p and d must be coprime");
    std::uint64_t x = p % d;
    std::uint64_t cur = x;
    unsigned m = 1;
    while (cur != 1) {
        cur = (cur * x) % d;
        ++m;
        if (m > d) fail("order computation failed");
    }
    return m;
}

BigInt pow_u64(std::uint64_t base, unsigned exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return r;
}

}  // namespace h90
