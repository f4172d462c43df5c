#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "quiver.hpp"
#include "series.hpp"

namespace amz
{

struct Partition {
    std::vector<int> parts; // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p))
    {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1])) {
                throw precondition_error("partition parts must be positive and weakly decreasing");
            }
        }
    }

    int size() const
    {
        int s = 0;
        for (int x : parts) {
            s += x;
        }
        return s;
    }

    int length() const { return static_cast<int>(parts.size()); }

    // m_k for k = 1..largest part
    std::map<int, int> multiplicities() const
    {
        std::map<int, int> m;
        for (int x : parts) {
            ++m[x];
        }
        return m;
    }

    static Partition ones(int w) { return Partition(std::vector<int>(static_cast<std::size_t>(std::max(w, 0)), 1)); }

    friend bool operator==(const Partition &a, const Partition &b) { return a.parts == b.parts; }
};

// Partitions of n in lexicographically decreasing order.
inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int left, int maxp) -> void {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(left, maxp); k >= 1; --k) {
            cur.push_back(k);
            self(self, left - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// sum_{i,j} min(i, j) m_i(lambda) m_j(mu)
inline long partition_inner(const Partition &a, const Partition &b)
{
    long s = 0;
    for (const auto &[i, mi] : a.multiplicities()) {
        for (const auto &[j, mj] : b.multiplicities()) {
            s += static_cast<long>(std::min(i, j)) * mi * mj;
        }
    }
    return s;
}

inline RationalUni hua_term(const Quiver &g, const std::vector<int> &w, const std::vector<Partition> &lam)
{
    if (static_cast<int>(w.size()) != g.vertices || static_cast<int>(lam.size()) != g.vertices) {
        throw precondition_error("framing and partition tuple must have one entry per vertex");
    }
    long kappa = 0;
    for (const auto &[s, t] : g.edges) {
        kappa += partition_inner(lam[static_cast<std::size_t>(s)], lam[static_cast<std::size_t>(t)]);
    }
    LaurentPoly den = LaurentPoly::constant(1, 'L');
    for (std::size_t i = 0; i < lam.size(); ++i) {
        kappa += partition_inner(Partition::ones(w[i]), lam[i]);
        kappa -= partition_inner(lam[i], lam[i]);
        for (const auto &[k, mk] : lam[i].multiplicities()) {
            for (int j = 1; j <= mk; ++j) {
                // 1 - L^-j
                den *= LaurentPoly::constant(1, 'L') - LaurentPoly::monomial(1, -j, 'L');
            }
        }
    }
    return RationalUni(LaurentPoly::monomial(1, static_cast<int>(kappa), 'L'), den);
}

// All tuples of partitions (one per vertex) with total size <= D, by total size.
inline std::vector<std::vector<Partition>> multipartitions(int vertices, int D)
{
    std::vector<std::vector<Partition>> out;
    std::vector<std::vector<Partition>> by_size;
    for (int k = 0; k <= D; ++k) {
        by_size.push_back(partitions_of(k));
    }
    for (const auto &v : graded_exponents(vertices, D)) {
        std::vector<Partition> cur;
        auto rec = [&](auto &&self, std::size_t i) -> void {
            if (i == v.size()) {
                out.push_back(cur);
                return;
            }
            for (const auto &p : by_size[static_cast<std::size_t>(v[i])]) {
                cur.push_back(p);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    }
    return out;
}

inline long d_vw(const Quiver &g, const Exponent &v, const std::vector<int> &w)
{
    long d = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        d += static_cast<long>(v[i]) * v[i] - static_cast<long>(v[i]) * w[i];
    }
    for (const auto &[s, t] : g.edges) {
        d -= static_cast<long>(v[static_cast<std::size_t>(s)]) * v[static_cast<std::size_t>(t)];
    }
    return d;
}

struct NakajimaGF {
    Quiver quiver;
    std::vector<int> w;
    int D = 0;
    MultiSeries series{0, 0};
    std::map<Exponent, LaurentPoly> classes;
};

inline MultiSeries hua_series(const Quiver &g, const std::vector<int> &w, int D)
{
    MultiSeries s(g.vertices, D, 'L');
    for (const auto &lam : multipartitions(g.vertices, D)) {
        Exponent v;
        for (const auto &p : lam) {
            v.push_back(p.size());
        }
        s.add(v, hua_term(g, w, lam));
    }
    return s;
}

inline NakajimaGF nakajima_gf(const Quiver &g, const std::vector<int> &w, int D)
{
    if (D < 0) {
        throw precondition_error("truncation must be nonnegative");
    }
    if (static_cast<int>(w.size()) != g.vertices) {
        throw precondition_error("framing vector needs one entry per vertex");
    }
    for (int x : w) {
        if (x < 0) {
            throw precondition_error("framing entries must be nonnegative");
        }
    }
    NakajimaGF out;
    out.quiver = g;
    out.w = w;
    out.D = D;
    std::vector<int> zero(w.size(), 0);
    out.series = series_div(hua_series(g, w, D), hua_series(g, zero, D));
    for (const auto &v : graded_exponents(g.vertices, D)) {
        RationalUni c = out.series.coeff(v) * RationalUni(LaurentPoly::monomial(1, static_cast<int>(-d_vw(g, v, w)), 'L'));
        if (!c.is_laurent()) {
            throw invariant_error("coefficient at v does not reduce to a Laurent polynomial: " + c.to_string());
        }
        out.classes.emplace(v, c.num());
    }
    return out;
}

} // namespace amz
