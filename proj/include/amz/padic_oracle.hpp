#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypertoric.hpp"
#include "igusa.hpp"
#include "residues.hpp"

namespace amz
{

struct OracleCount {
    std::int64_t p = 0;
    int alpha = 0;
    BigInt count = 0;      // B_{mu,alpha}
    Rational normalized;   // count * p^{-alpha(2n - m)}
};

// N[lambda] = #{(z, w) in (Z/p^alpha)^2 : z w = lambda}, by direct count.
inline std::vector<BigInt> product_table(std::int64_t p, int alpha)
{
    std::int64_t mod = 1;
    for (int i = 0; i < alpha; ++i) {
        mod *= p;
    }
    charge(static_cast<std::uint64_t>(mod) * static_cast<std::uint64_t>(mod), "product table");
    std::vector<std::uint64_t> c(static_cast<std::size_t>(mod), 0);
    for (std::int64_t z = 0; z < mod; ++z) {
        for (std::int64_t w = 0; w < mod; ++w) {
            ++c[static_cast<std::size_t>(z * w % mod)];
        }
    }
    std::vector<BigInt> out;
    for (auto x : c) {
        out.emplace_back(static_cast<unsigned long>(x));
    }
    return out;
}

// #{(x, y) in (Z/p^alpha)^{2n} : sum x_i y_i a_i = 0}, as a convolution of the
// product table over the partial sums sum lambda_i a_i.
inline OracleCount count_solutions_mod(const Arrangement &A, std::int64_t p, int alpha)
{
    detail::check_admissible_prime(A, p);
    if (alpha < 1) {
        throw precondition_error("depth alpha must be at least 1");
    }
    std::int64_t mod = 1;
    for (int i = 0; i < alpha; ++i) {
        mod *= p;
    }
    std::size_t m = A.m();
    std::size_t n = A.n();
    std::uint64_t states = 1;
    for (std::size_t j = 0; j < m; ++j) {
        states *= static_cast<std::uint64_t>(mod);
        charge(states * static_cast<std::uint64_t>(mod) * std::max<std::size_t>(n, 1), "solution count");
    }
    auto N = product_table(p, alpha);
    std::vector<std::vector<std::int64_t>> a;
    for (const auto &row : A.normals()) {
        std::vector<std::int64_t> r;
        for (const auto &x : row) {
            BigInt y = x % mod;
            if (y < 0) {
                y += mod;
            }
            r.push_back(y.get_si());
        }
        a.push_back(std::move(r));
    }
    // state index: sum_j s_j mod^j
    std::vector<std::int64_t> stride(m, 1);
    for (std::size_t j = 1; j < m; ++j) {
        stride[j] = stride[j - 1] * mod;
    }
    std::vector<BigInt> cur(states, BigInt(0));
    cur[0] = 1;
    std::vector<std::int64_t> s(m);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<BigInt> next(states, BigInt(0));
        for (std::uint64_t idx = 0; idx < states; ++idx) {
            if (cur[idx] == 0) {
                continue;
            }
            std::uint64_t v = idx;
            for (std::size_t j = 0; j < m; ++j) {
                s[j] = static_cast<std::int64_t>(v % static_cast<std::uint64_t>(mod));
                v /= static_cast<std::uint64_t>(mod);
            }
            for (std::int64_t lam = 0; lam < mod; ++lam) {
                std::int64_t target = 0;
                for (std::size_t j = 0; j < m; ++j) {
                    target += (s[j] + lam * a[i][j]) % mod * stride[j];
                }
                mpz_addmul(next[static_cast<std::size_t>(target)].get_mpz_t(), cur[idx].get_mpz_t(),
                           N[static_cast<std::size_t>(lam)].get_mpz_t());
            }
        }
        cur = std::move(next);
    }
    OracleCount out;
    out.p = p;
    out.alpha = alpha;
    out.count = cur[0];
    out.normalized = Rational(out.count) *
                     rational_pow(Rational(p), -static_cast<long>(alpha) * (2 * static_cast<long>(n) - static_cast<long>(m)));
    out.normalized.canonicalize();
    return out;
}

// Coefficients P_0..P_{alpha_max} of the Poincare series
// P(t) = t (I(t) - 1)/(t - 1) + 1 at q = p.
inline std::vector<Rational> poincare_from_zeta(const BiRational &z, std::int64_t p, int alpha_max)
{
    auto c = z.expand_in_t(Rational(p), alpha_max);
    c[0] -= 1;
    std::vector<Rational> P(static_cast<std::size_t>(alpha_max + 1), Rational(0));
    P[0] = 1;
    Rational acc = 0;
    for (int a = 1; a <= alpha_max; ++a) {
        acc += c[static_cast<std::size_t>(a - 1)];
        P[static_cast<std::size_t>(a)] = -acc;
    }
    return P;
}

struct PoincareRow {
    int alpha = 0;
    Rational from_zeta;
    Rational from_count;
    bool match = false;
};

inline std::vector<PoincareRow> poincare_check(const Arrangement &A, const BiRational &z, std::int64_t p, int alpha_max)
{
    auto P = poincare_from_zeta(z, p, alpha_max);
    std::vector<PoincareRow> rows;
    long n = static_cast<long>(A.n());
    for (int a = 1; a <= alpha_max; ++a) {
        PoincareRow r;
        r.alpha = a;
        r.from_zeta = P[static_cast<std::size_t>(a)];
        r.from_count = Rational(count_solutions_mod(A, p, a).count) * rational_pow(Rational(p), -2 * n * a);
        r.from_count.canonicalize();
        r.match = r.from_zeta == r.from_count;
        rows.push_back(r);
    }
    return rows;
}

struct LimitProbe {
    std::vector<Rational> sequence; // normalized counts for alpha = 1..alpha_max
    bool coloop_free = false;
    Rational limit;                 // B_mu(p) when coloop-free
    std::vector<Rational> distance; // |sequence - limit|
    bool increasing = false;
};

inline LimitProbe limit_probe(const Arrangement &A, const FlatLattice &lat, std::int64_t p, int alpha_max)
{
    LimitProbe out;
    for (int a = 1; a <= alpha_max; ++a) {
        out.sequence.push_back(count_solutions_mod(A, p, a).normalized);
    }
    out.increasing = true;
    for (std::size_t i = 1; i < out.sequence.size(); ++i) {
        if (out.sequence[i] <= out.sequence[i - 1]) {
            out.increasing = false;
        }
    }
    out.coloop_free = structural_flags(A).coloop_free;
    if (out.coloop_free) {
        out.limit = b_mu(A, lat).eval(Rational(p));
        for (const auto &x : out.sequence) {
            out.distance.push_back(abs(x - out.limit));
        }
    }
    return out;
}

} // namespace amz
