#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bigint.hpp"

namespace amz
{

using IntRow = std::vector<BigInt>;
using IntMatrix = std::vector<IntRow>;

struct Echelon {
    IntMatrix rows;                // fraction-free row echelon form, zero rows dropped
    std::vector<std::size_t> pivots; // pivot column of each row
};

// Fraction-free (Bareiss) elimination.
inline Echelon bareiss(IntMatrix a)
{
    Echelon e;
    if (a.empty()) {
        return e;
    }
    std::size_t rows = a.size();
    std::size_t cols = a[0].size();
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                BigInt v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = v;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        e.pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    e.rows = std::move(a);
    return e;
}

inline std::size_t rank_of(const IntMatrix &a) { return bareiss(a).pivots.size(); }

inline IntMatrix select_rows(const IntMatrix &a, std::uint64_t mask)
{
    IntMatrix out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (mask >> i & 1U) {
            out.push_back(a[i]);
        }
    }
    return out;
}

inline BigInt determinant(IntMatrix a)
{
    std::size_t n = a.size();
    if (n == 0) {
        return 1;
    }
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = v;
            }
        }
        prev = a[k][k];
    }
    BigInt d = a[n - 1][n - 1];
    return sign < 0 ? BigInt(-d) : d;
}

// Integer basis (as columns, returned as a list of vectors) of the rational
// kernel {x : a x = 0}, each vector primitive.
inline IntMatrix integer_kernel(const IntMatrix &a, std::size_t cols)
{
    // Reduced row echelon form over Q, kept integral per row.
    IntMatrix m = a;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) {
                continue;
            }
            BigInt f = m[i][c];
            BigInt g = m[r][c];
            for (std::size_t j = 0; j < cols; ++j) {
                m[i][j] = m[i][j] * g - m[r][j] * f;
            }
            BigInt cont = 0;
            for (const auto &x : m[i]) {
                cont = big_gcd(cont, x);
            }
            if (cont > 1) {
                for (auto &x : m[i]) {
                    x /= cont;
                }
            }
        }
        piv.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) {
        is_piv[c] = true;
    }
    IntMatrix basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) {
            continue;
        }
        // x_f = L, x_piv[i] = -m[i][f] * L / m[i][piv[i]] with L = lcm of pivots
        BigInt l = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) {
            BigInt d = abs(m[i][piv[i]]);
            l = l / big_gcd(l, d) * d;
        }
        IntRow x(cols, BigInt(0));
        x[f] = l;
        for (std::size_t i = 0; i < piv.size(); ++i) {
            x[piv[i]] = -m[i][f] * l / m[i][piv[i]];
        }
        BigInt cont = 0;
        for (const auto &y : x) {
            cont = big_gcd(cont, y);
        }
        for (auto &y : x) {
            y /= cont;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

inline BigInt dot(const IntRow &a, const IntRow &b)
{
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

// Rank over F_p of a small matrix with entries reduced mod p.
inline std::size_t rank_mod_p(const IntMatrix &a, std::int64_t p)
{
    std::vector<std::vector<std::int64_t>> m;
    for (const auto &row : a) {
        std::vector<std::int64_t> r;
        for (const auto &x : row) {
            BigInt y = x % p;
            if (y < 0) {
                y += p;
            }
            r.push_back(y.get_si());
        }
        m.push_back(std::move(r));
    }
    if (m.empty()) {
        return 0;
    }
    std::size_t cols = m[0].size();
    std::size_t r = 0;
    auto inv = [p](std::int64_t x) {
        std::int64_t res = 1;
        std::int64_t e = p - 2;
        x %= p;
        while (e) {
            if (e & 1) {
                res = res * x % p;
            }
            x = x * x % p;
            e >>= 1;
        }
        return res;
    };
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) {
            ++piv;
        }
        if (piv == m.size()) {
            continue;
        }
        std::swap(m[piv], m[r]);
        std::int64_t iv = inv(m[r][c]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            std::int64_t f = m[i][c] * iv % p;
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
            }
        }
        ++r;
    }
    return r;
}

} // namespace amz
