#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace h90 {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown when an enumeration would exceed the configured guard.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultGuard = std::uint64_t{1} << 20;

enum class FieldKind { rationals, prime, extension };

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

class FElem;

/* A computation field: the rationals, a prime field F_p, or an extension
 * F_{p^n} = F_p[z]/(modulus).  Contexts are immutable and shared; extension
 * contexts built without an explicit modulus use the deterministic minimal
 * one, so serialized values are reproducible across runs. */
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
public:
    static FieldCtxPtr rationals();
    static FieldCtxPtr prime(std::uint64_t p);
    // Modulus chosen as the monic irreducible of degree n over F_p minimizing
    // sum c_i p^i over the non-leading coefficients.
    static FieldCtxPtr extension(std::uint64_t p, unsigned n);
    static FieldCtxPtr extension(std::uint64_t p, unsigned n,
                                 std::vector<std::uint64_t> modulus);

    FieldKind kind() const { return kind_; }
    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return n_; }
    const BigInt& order() const { return order_; }  // p^n; meaningless for rationals
    bool finite() const { return kind_ != FieldKind::rationals; }
    // Monic modulus, lowest-degree-first, length n+1.  Extension ctx only.
    const std::vector<std::uint64_t>& modulus_coeffs() const;

    bool same(const FieldCtx& other) const;

    FElem zero() const;
    FElem one() const;
    FElem from_int(long long v) const;
    FElem from_rational(const Rational& q) const;
    FElem from_residue(std::uint64_t r) const;
    FElem from_coeffs(std::vector<std::uint64_t> c) const;
    // Enumeration order: idx written in base p, digits = coefficients
    // lowest-first.  idx in [0, p^n).
    FElem element_at(const BigInt& idx) const;
    BigInt index_of(const FElem& x) const;
    FElem gen() const;  // class of z in an extension

    std::string describe() const;

private:
    FieldCtx(FieldKind k, std::uint64_t p, unsigned n,
             std::vector<std::uint64_t> mod);

    FieldKind kind_;
    std::uint64_t p_;
    unsigned n_;
    std::vector<std::uint64_t> mod_;
    BigInt order_;
};

/* Immutable field element tagged with its context.  Mixing contexts is an
 * error. */
class FElem {
public:
    FElem() = default;

    const FieldCtxPtr& ctx() const { return ctx_; }
    bool is_zero() const;
    bool is_one() const;

    FElem operator+(const FElem& o) const;
    FElem operator-(const FElem& o) const;
    FElem operator*(const FElem& o) const;
    FElem operator/(const FElem& o) const;
    FElem operator-() const;
    bool operator==(const FElem& o) const;
    bool operator!=(const FElem& o) const { return !(*this == o); }

    FElem inv() const;
    FElem pow(const BigInt& e) const;  // negative exponents invert
    FElem pow(long long e) const;

    const Rational& rational() const;
    std::uint64_t residue() const;
    const std::vector<std::uint64_t>& coeffs() const;

    std::string str() const;
    // Stable key for hashing/dedup across a single context.
    std::string key() const;

private:
    friend class FieldCtx;
    friend FElem frobenius(const FElem&, unsigned);

    FieldCtxPtr ctx_;
    std::variant<Rational, std::uint64_t, std::vector<std::uint64_t>> v_;
};

// x^{p^i} (absolute Frobenius iterated i times).
FElem frobenius(const FElem& x, unsigned i = 1);
// x^{q^i} with q = p^sub_degree.
FElem frobenius_q(const FElem& x, unsigned sub_degree, unsigned i);
// Trace / norm from F_{p^n} down to F_{p^sub_degree}; sub_degree must divide n.
FElem ext_trace(const FElem& x, unsigned sub_degree);
FElem ext_norm(const FElem& x, unsigned sub_degree);

// All p^sub elements of the subfield F_{p^sub} inside an extension context,
// in a deterministic order.  sub must divide the context degree.
std::vector<FElem> subfield_elements(const FieldCtxPtr& ctx, unsigned sub_degree);
// Kernel of the trace down to F_{p^sub}; size p^{n-sub}.
std::vector<FElem> trace_zero_elements(const FieldCtxPtr& ctx, unsigned sub_degree,
                                       std::uint64_t guard = kDefaultGuard);
// The d-th roots of unity, as powers of a deterministically chosen primitive
// d-th root.  Requires d | order-1.
std::vector<FElem> roots_of_unity(const FieldCtxPtr& ctx, std::uint64_t d);

// Prime-field element into an extension of the same characteristic.
FElem embed(const FElem& x, const FieldCtxPtr& target);

/* Dense univariate polynomial over one context, coefficients lowest-first,
 * trailing zeros trimmed.  The zero polynomial has an empty coefficient
 * sequence and degree -1. */
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}

    static Poly zero(const FieldCtxPtr& ctx) { return Poly(ctx); }
    static Poly constant(const FElem& c);
    static Poly from_coeffs(FieldCtxPtr ctx, std::vector<FElem> coeffs);
    static Poly from_ints(const FieldCtxPtr& ctx, const std::vector<long long>& c);
    static Poly monomial(const FieldCtxPtr& ctx, unsigned deg, const FElem& c);
    static Poly identity(const FieldCtxPtr& ctx);  // z

    const FieldCtxPtr& ctx() const { return ctx_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    FElem coeff(unsigned i) const;
    const std::vector<FElem>& coeffs() const { return c_; }
    FElem lc() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scale(const FElem& c) const;
    Poly shift(unsigned k) const;  // multiply by z^k
    std::pair<Poly, Poly> divrem(const Poly& den) const;
    Poly derivative() const;
    FElem eval(const FElem& x) const;
    Poly monic() const;
    Poly pow(unsigned e) const;
    // (sum a_i z^i)^{p^s} = sum a_i^{p^s} z^{i p^s}; positive characteristic only.
    Poly frobenius_power(unsigned s) const;
    // w^n * f(1/w); requires n >= deg f.
    Poly reverse(unsigned n) const;

    std::string str(const std::string& var = "z") const;

private:
    void trim();
    FieldCtxPtr ctx_;
    std::vector<FElem> c_;
};

// Monic gcd.  Errors: context mismatch, both inputs zero.
Poly poly_gcd(const Poly& a, const Poly& b);
// Resultant of two polynomials over the coefficient field.
// Conventions: Res(a, c) = c^{deg a} for constant c; Res of two (nonzero)
// constants is 1.  Errors: both inputs zero.
FElem poly_resultant_field(const Poly& a, const Poly& b);
// Res(f, f') / lc(f).
FElem poly_discriminant(const Poly& f);
// true iff gcd(f, f') is constant; a vanishing derivative of a nonconstant f
// reports false.  Errors: zero input.
bool squarefree(const Poly& f);
// The deterministic modulus used by FieldCtx::extension(p, n).
Poly irreducible_modulus(std::uint64_t p, unsigned n);
bool is_irreducible(const Poly& f);
// Multiplicity of root x0 in f.
unsigned root_multiplicity(const Poly& f, const FElem& x0);
// Lift coefficients of a prime-field polynomial into an extension.
Poly embed(const Poly& f, const FieldCtxPtr& target);

/* Polynomial in z whose coefficients are polynomials in a parameter T over a
 * shared context.  Only what the resultant elimination needs. */
class BiPoly {
public:
    BiPoly() = default;
    // Coefficients of z^i are entries of cz, each a polynomial in T.
    static BiPoly from_z_coeffs(FieldCtxPtr ctx, std::vector<Poly> cz);
    // A plain polynomial in z (every coefficient constant in T).
    static BiPoly lift_z(const Poly& f);
    // a(z) + T*b(z).
    static BiPoly linear_in_t(const Poly& a, const Poly& b);

    const FieldCtxPtr& ctx() const { return ctx_; }
    int zdeg() const { return static_cast<int>(cz_.size()) - 1; }
    bool is_zero() const { return cz_.empty(); }
    const std::vector<Poly>& z_coeffs() const { return cz_; }

private:
    void trim();
    FieldCtxPtr ctx_;
    std::vector<Poly> cz_;
};

// Resultant with respect to z, returned as a polynomial in T.  Degenerate
// degrees follow the leading-coefficient convention above.  Errors: both
// inputs zero in z.
Poly resultant_z(const BiPoly& a, const BiPoly& b);

/* Point of the projective line: a field value or the point at infinity. */
struct ProjPoint {
    bool inf = false;
    FElem v;

    static ProjPoint infinity(const FieldCtxPtr& ctx);
    static ProjPoint finite(FElem x);
    bool operator==(const ProjPoint& o) const;
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    std::string key() const;
    std::string str() const;
};

/* Reduced rational function: coprime numerator/denominator with monic
 * denominator.  Construction reduces; the representation is canonical. */
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(Poly num, Poly den);

    static RatFunc constant(const FElem& c);
    static RatFunc identity(const FieldCtxPtr& ctx);
    static RatFunc from_poly(const Poly& p);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const FieldCtxPtr& ctx() const { return num_.ctx(); }
    // Morphism degree: max of the two degrees, 0 for constants.
    int degree() const;
    bool is_constant() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc derivative() const;
    // n'd - nd' for the reduced pair.
    Poly wronskian() const;

    FElem eval(const FElem& x) const;  // throws at poles
    ProjPoint eval_proj(const ProjPoint& x) const;
    // Value at infinity.
    ProjPoint value_at_infinity() const;
    // Order of vanishing of (f - f(x0)) at x0, or pole order when f(x0) is
    // infinite; x0 may be the point at infinity.
    unsigned ramification_index(const ProjPoint& x0) const;

    std::string str(const std::string& var = "z") const;

private:
    Poly num_, den_;
};

RatFunc embed(const RatFunc& f, const FieldCtxPtr& target);

// ---- small integer utilities shared across modules ----

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct primes
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);
bool is_prime_u64(std::uint64_t n);
// All prime powers p^j <= limit with j >= 1, as (p, j) pairs, sorted by value.
std::vector<std::pair<std::uint64_t, unsigned>> prime_powers_up_to(std::uint64_t limit);
// Multiplicative order of p modulo d (d coprime to p); ord(1) = 1.
unsigned multiplicative_order(std::uint64_t p, std::uint64_t d);
BigInt pow_u64(std::uint64_t base, unsigned exp);

}  // namespace h90
