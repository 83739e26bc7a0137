#include "h90/strata.hpp"

#include "h90/quotient.hpp"

namespace h90 {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

// Streaming kernel test over F_p: maintain a basis of the solution space of
// the rows seen so far (dimension <= 2m+2), shrink row by row, and report
// whether the final space contains a vector with nonzero Q-part.  Exits early
// once every basis vector has zero Q-part.
bool kernel_has_q_part_fp(std::uint64_t p, unsigned d, unsigned m) {
    const unsigned cols = 2 * m + 2;
    const unsigned qoff = m + 1;

    auto mulp = [&](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    };
    auto invp = [&](std::uint64_t a) {
        std::uint64_t r = 1, base = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = mulp(r, base);
            base = mulp(base, base);
            e >>= 1;
        }
        return r;
    };

    // binom(d, j) mod p by the multiplicative recurrence, tracking the p-adic
    // valuation so the division is always by a unit
    std::vector<std::uint64_t> binrow(d + 1, 0);
    {
        std::uint64_t unit = 1;
        long val = 0;
        binrow[0] = 1;
        for (unsigned j = 0; j < d; ++j) {
            std::uint64_t num = d - j, den = j + 1;
            while (num % p == 0) {
                num /= p;
                ++val;
            }
            while (den % p == 0) {
                den /= p;
                --val;
            }
            unit = mulp(unit, num % p);
            unit = mulp(unit, invp(den % p));
            binrow[j + 1] = (val == 0) ? unit : 0;
        }
    }
    std::uint64_t sign = (d % 2 == 0) ? 1 : p - 1;
    auto ncoef = [&](long long t) -> std::uint64_t {
        if (t < 0 || t > static_cast<long long>(d)) return 0;
        std::uint64_t b = (binrow[static_cast<std::size_t>(t)] * sign) % p;
        if (t == static_cast<long long>(d)) b = (b + p - 1) % p;
        return b;
    };

    // basis of the current solution space, as rows of length cols
    std::vector<std::vector<std::uint64_t>> basis(cols);
    for (unsigned i = 0; i < cols; ++i) {
        basis[i].assign(cols, 0);
        basis[i][i] = 1;
    }

    auto q_part_alive = [&]() {
        for (const auto& v : basis)
            for (unsigned i = qoff; i < cols; ++i)
                if (v[i] != 0) return true;
        return false;
    };

    for (unsigned j = 0; j <= d + m; ++j) {
        // row: coefficient of p_t is [t == j] - [t == j - d]; of q_i is n_{j-i}
        std::vector<std::uint64_t> row(cols, 0);
        if (j <= m) row[j] = (row[j] + p - 1) % p;  // -p_j
        long long tj = static_cast<long long>(j) - static_cast<long long>(d);
        if (tj >= 0 && tj <= static_cast<long long>(m))
            row[static_cast<std::size_t>(tj)] = (row[static_cast<std::size_t>(tj)] + 1) % p;
        for (unsigned i = 0; i <= m; ++i)
            row[qoff + i] = ncoef(static_cast<long long>(j) - static_cast<long long>(i));

        // evaluate the row on every basis vector, reduce the basis
        std::vector<std::uint64_t> vals(basis.size());
        int pivot = -1;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            std::uint64_t acc = 0;
            for (unsigned i = 0; i < cols; ++i)
                if (basis[b][i] && row[i]) acc = (acc + mulp(basis[b][i], row[i])) % p;
            vals[b] = acc;
            if (pivot < 0 && acc != 0) pivot = static_cast<int>(b);
        }
        if (pivot < 0) continue;
        std::uint64_t piv_inv = invp(vals[static_cast<std::size_t>(pivot)]);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (static_cast<int>(b) == pivot || vals[b] == 0) continue;
            std::uint64_t f = mulp(vals[b], piv_inv);
            for (unsigned i = 0; i < cols; ++i)
                if (basis[static_cast<std::size_t>(pivot)][i])
                    basis[b][i] =
                        (basis[b][i] + p - mulp(f, basis[static_cast<std::size_t>(pivot)][i])) % p;
        }
        basis.erase(basis.begin() + pivot);
        if (basis.empty()) return false;
        if (!q_part_alive()) return false;
    }
    return q_part_alive();
}

bool kernel_has_q_part_rational(unsigned d, unsigned m) {
    const unsigned cols = 2 * m + 2;
    const unsigned qoff = m + 1;
    std::vector<Rational> binrow(d + 1);
    binrow[0] = 1;
    for (unsigned i = 1; i <= d; ++i) {
        Rational prev = binrow[0];
        binrow[0] = 1;
        for (unsigned jj = 1; jj <= i; ++jj) {
            Rational cur = binrow[jj];
            binrow[jj] = prev + cur;
            prev = cur;
        }
    }
    Rational sign = (d % 2 == 0) ? 1 : -1;
    auto ncoef = [&](long long t) -> Rational {
        if (t < 0 || t > static_cast<long long>(d)) return Rational(0);
        Rational b = binrow[static_cast<std::size_t>(t)] * sign;
        if (t == static_cast<long long>(d)) b -= 1;
        return b;
    };

    std::vector<std::vector<Rational>> basis(cols, std::vector<Rational>(cols, Rational(0)));
    for (unsigned i = 0; i < cols; ++i) basis[i][i] = 1;

    auto q_part_alive = [&]() {
        for (const auto& v : basis)
            for (unsigned i = qoff; i < cols; ++i)
                if (v[i] != 0) return true;
        return false;
    };

    for (unsigned j = 0; j <= d + m; ++j) {
        std::vector<Rational> row(cols, Rational(0));
        if (j <= m) row[j] -= 1;
        long long tj = static_cast<long long>(j) - static_cast<long long>(d);
        if (tj >= 0 && tj <= static_cast<long long>(m)) row[static_cast<std::size_t>(tj)] += 1;
        for (unsigned i = 0; i <= m; ++i)
            row[qoff + i] = ncoef(static_cast<long long>(j) - static_cast<long long>(i));

        std::vector<Rational> vals(basis.size());
        int pivot = -1;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            Rational acc(0);
            for (unsigned i = 0; i < cols; ++i)
                if (basis[b][i] != 0 && row[i] != 0) acc += basis[b][i] * row[i];
            vals[b] = acc;
            if (pivot < 0 && acc != 0) pivot = static_cast<int>(b);
        }
        if (pivot < 0) continue;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (static_cast<int>(b) == pivot || vals[b] == 0) continue;
            Rational f = vals[b] / vals[static_cast<std::size_t>(pivot)];
            for (unsigned i = 0; i < cols; ++i)
                basis[b][i] -= f * basis[static_cast<std::size_t>(pivot)][i];
        }
        basis.erase(basis.begin() + pivot);
        if (basis.empty()) return false;
        if (!q_part_alive()) return false;
    }
    return q_part_alive();
}

}  // namespace

bool linear_stratum_test(std::uint64_t p, unsigned d, unsigned m) {
    if (d < 1) fail("d must be >= 1");
    if (p > 0) {
        if (!is_prime_u64(p)) fail("characteristic must be prime or zero");
        if (d % p == 0) fail("p must not divide d");
        return kernel_has_q_part_fp(p, d, m);
    }
    return kernel_has_q_part_rational(d, m);
}

bool stratum_member(std::uint64_t p, unsigned d, unsigned m) {
    bool le_m = linear_stratum_test(p, d, m);
    if (!le_m) return false;
    if (m == 0) return true;
    return !linear_stratum_test(p, d, m - 1);
}

std::vector<unsigned> enumerate_stratum(std::uint64_t p, unsigned m, unsigned d_max,
                                        std::uint64_t guard) {
    if (p < 2 || !is_prime_u64(p)) fail("enumeration requires a prime characteristic");
    if (d_max > guard) throw GuardExceeded("stratum enumeration exceeds guard");
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= d_max; ++d) {
        if (d % p == 0) continue;
        bool member = stratum_member(p, d, m);
        // cross-check against the computed degree wherever the gcd is cheap
        if (member || d <= 256) {
            QuotientRecord rec = reduce_quotient(p, d);
            if (member != (rec.degree == m))
                throw std::logic_error("linear stratum test disagrees with the quotient degree");
        }
        if (member) out.push_back(d);
    }
    return out;
}

}  // namespace h90
