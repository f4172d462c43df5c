#pragma once

// Slow reference computations used only by the tests. None of them go through
// the lattice, zeta or counting code of the library.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <amz/arrangement.hpp>
#include <amz/birational.hpp>

namespace oracle
{

using amz::BigInt;
using amz::Rational;

inline int rational_rank(std::vector<std::vector<Rational>> a)
{
    int rank = 0;
    std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < a.size() && a[piv][c] == 0) {
            ++piv;
        }
        if (piv == a.size()) {
            continue;
        }
        std::swap(a[piv], a[static_cast<std::size_t>(rank)]);
        auto &r = a[static_cast<std::size_t>(rank)];
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == static_cast<std::size_t>(rank) || a[i][c] == 0) {
                continue;
            }
            Rational f = a[i][c] / r[c];
            for (std::size_t j = c; j < cols; ++j) {
                a[i][j] -= f * r[j];
            }
        }
        ++rank;
    }
    return rank;
}

inline int subset_rank(const amz::Arrangement &A, std::uint64_t s)
{
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < A.n(); ++i) {
        if (s >> i & 1U) {
            std::vector<Rational> r;
            for (const auto &x : A.normals()[i]) {
                r.emplace_back(x);
            }
            rows.push_back(std::move(r));
        }
    }
    return rational_rank(rows);
}

struct Lattice {
    std::vector<std::uint64_t> flats; // sorted by size
    std::vector<int> rank;
    std::map<std::pair<std::size_t, std::size_t>, BigInt> mu;

    bool leq(std::size_t a, std::size_t b) const { return (flats[a] & ~flats[b]) == 0; }
};

// Flats as the subsets that no further normal keeps at the same rank.
inline Lattice brute_lattice(const amz::Arrangement &A)
{
    Lattice L;
    std::size_t n = A.n();
    std::vector<std::pair<std::uint64_t, int>> found;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        int r = subset_rank(A, s);
        bool closed = true;
        for (std::size_t i = 0; i < n && closed; ++i) {
            if (!(s >> i & 1U) && subset_rank(A, s | std::uint64_t{1} << i) == r) {
                closed = false;
            }
        }
        if (closed) {
            found.emplace_back(s, r);
        }
    }
    std::stable_sort(found.begin(), found.end(), [](const auto &a, const auto &b) {
        return __builtin_popcountll(a.first) < __builtin_popcountll(b.first);
    });
    for (const auto &[s, r] : found) {
        L.flats.push_back(s);
        L.rank.push_back(r);
    }
    for (std::size_t a = 0; a < L.flats.size(); ++a) {
        L.mu[{a, a}] = 1;
    }
    // mu(a, b) = -sum_{a <= c < b} mu(a, c); flats below b come earlier in the order
    for (std::size_t a = 0; a < L.flats.size(); ++a) {
        for (std::size_t b = 0; b < L.flats.size(); ++b) {
            if (b == a || !L.leq(a, b)) {
                continue;
            }
            BigInt s = 0;
            for (std::size_t c = 0; c < L.flats.size(); ++c) {
                if (c != b && L.leq(a, c) && L.leq(c, b)) {
                    s += L.mu.at({a, c});
                }
            }
            L.mu[{a, b}] = -s;
        }
    }
    return L;
}

inline std::size_t top(const Lattice &L) { return L.flats.size() - 1; }

// chi of the interval [a, b] evaluated at x.
inline Rational interval_chi(const Lattice &L, std::size_t a, std::size_t b, const Rational &x)
{
    Rational s = 0;
    for (std::size_t c = 0; c < L.flats.size(); ++c) {
        if (L.leq(a, c) && L.leq(c, b)) {
            s += Rational(L.mu.at({a, c})) * amz::rational_pow(x, L.rank[b] - L.rank[c]);
        }
    }
    return s;
}

inline BigInt raw_complement(const amz::Arrangement &A, long p)
{
    std::size_t m = A.m();
    std::vector<long> x(m, 0);
    BigInt count = 0;
    std::function<void(std::size_t)> go = [&](std::size_t j) {
        if (j == m) {
            for (const auto &r : A.normals()) {
                BigInt s = 0;
                for (std::size_t k = 0; k < m; ++k) {
                    s += r[k] * x[k];
                }
                if (s % p == 0) {
                    return;
                }
            }
            ++count;
            return;
        }
        for (long v = 0; v < p; ++v) {
            x[j] = v;
            go(j + 1);
        }
    };
    go(0);
    return count;
}

// #{(x, y) in (Z/p^alpha)^{2n} : sum_i x_i y_i a_i = target}
inline BigInt raw_solutions(const amz::Arrangement &A, long p, int alpha, std::vector<long> target = {})
{
    long mod = 1;
    for (int i = 0; i < alpha; ++i) {
        mod *= p;
    }
    std::size_t n = A.n();
    std::size_t m = A.m();
    target.resize(m, 0);
    std::vector<long> acc(m, 0);
    BigInt count = 0;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == n) {
            for (std::size_t j = 0; j < m; ++j) {
                if (((acc[j] - target[j]) % mod + mod) % mod != 0) {
                    return;
                }
            }
            ++count;
            return;
        }
        for (long x = 0; x < mod; ++x) {
            for (long y = 0; y < mod; ++y) {
                long xy = x * y % mod;
                for (std::size_t j = 0; j < m; ++j) {
                    acc[j] += xy * A.normals()[i][j].get_si();
                }
                go(i + 1);
                for (std::size_t j = 0; j < m; ++j) {
                    acc[j] -= xy * A.normals()[i][j].get_si();
                }
            }
        }
    };
    go(0);
    return count;
}

inline Rational eval(const amz::BiRational &z, const Rational &q, const Rational &t)
{
    Rational v = 0;
    for (const auto &[eq, et, c] : z.num().triples()) {
        v += Rational(c) * amz::rational_pow(q, eq) * amz::rational_pow(t, et);
    }
    v *= amz::rational_pow(q, z.unit_q()) * amz::rational_pow(t, z.unit_t());
    for (const auto &[a, k] : z.den()) {
        v /= amz::rational_pow(amz::rational_pow(q, a) - t, k);
    }
    return v;
}

// Zeta function at numeric (q, t) by summing over every chain of flats
// explicitly:
//   W(I) = prod over consecutive I_j < I_{j+1} up to the top of
//          chi_{[I_j, I_{j+1}]}(q) t / (q^{delta(I_j)} - t)
//   Z = (q^m - 1)/(q^m - t) + q^m (t - 1)/(q^m - t) * sum_{I != top} W(I) q^{rk I - m} / t
inline Rational chain_zeta(const amz::Arrangement &A, const Rational &q, const Rational &t)
{
    Lattice L = brute_lattice(A);
    int n = static_cast<int>(A.n());
    int m = static_cast<int>(A.m());
    std::size_t T = top(L);
    auto delta = [&](std::size_t i) { return n - __builtin_popcountll(L.flats[i]) + L.rank[i]; };
    std::function<Rational(std::size_t)> W = [&](std::size_t i) -> Rational {
        if (i == T) {
            return 1;
        }
        Rational s = 0;
        Rational f = t / (amz::rational_pow(q, delta(i)) - t);
        for (std::size_t j = 0; j < L.flats.size(); ++j) {
            if (j != i && L.leq(i, j)) {
                s += W(j) * interval_chi(L, i, j, q) * f;
            }
        }
        return s;
    };
    Rational J = 0;
    for (std::size_t i = 0; i < L.flats.size(); ++i) {
        if (i != T) {
            J += W(i) * amz::rational_pow(q, L.rank[i] - m) / t;
        }
    }
    Rational qm = amz::rational_pow(q, m);
    return (qm - 1) / (qm - t) + qm * (t - 1) / (qm - t) * J;
}

// #{(z, w) in (Z/q^alpha)^2 : z w = lambda} from the valuation closed form.
inline BigInt product_count_closed(long q, int alpha, long lambda)
{
    long mod = 1;
    for (int i = 0; i < alpha; ++i) {
        mod *= q;
    }
    BigInt Q(q);
    if (lambda % mod == 0) {
        return BigInt(alpha + 1) * amz::big_pow(Q, static_cast<unsigned long>(alpha)) -
               BigInt(alpha) * amz::big_pow(Q, static_cast<unsigned long>(alpha - 1));
    }
    int beta = 0;
    while (lambda % q == 0) {
        lambda /= q;
        ++beta;
    }
    return BigInt(beta + 1) * (Q - 1) * amz::big_pow(Q, static_cast<unsigned long>(alpha - 1));
}

// Coefficients of T^0..T^N in prod_{k >= 1} 1/(1 - L T^k), expanded factor by
// factor as geometric series.
inline std::vector<amz::LaurentPoly> gottsche(int N)
{
    std::vector<amz::LaurentPoly> c(static_cast<std::size_t>(N + 1), amz::LaurentPoly('L'));
    c[0] = amz::LaurentPoly::constant(1, 'L');
    for (int k = 1; k <= N; ++k) {
        std::vector<amz::LaurentPoly> next(static_cast<std::size_t>(N + 1), amz::LaurentPoly('L'));
        for (int e = 0; e <= N; ++e) {
            for (int j = 0; e + j * k <= N; ++j) {
                next[static_cast<std::size_t>(e + j * k)] +=
                    c[static_cast<std::size_t>(e)] * amz::LaurentPoly::monomial(1, j, 'L');
            }
        }
        c = std::move(next);
    }
    return c;
}

} // namespace oracle
