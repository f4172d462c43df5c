#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "config.hpp"
#include "laurent.hpp"
#include "linalg.hpp"
#include "quiver.hpp"

namespace amz
{

using IndexSet = std::uint64_t;

inline int set_size(IndexSet s) { return __builtin_popcountll(s); }
inline bool is_subset(IndexSet a, IndexSet b) { return (a & ~b) == 0; }

inline std::vector<int> set_members(IndexSet s)
{
    std::vector<int> out;
    while (s) {
        out.push_back(__builtin_ctzll(s));
        s &= s - 1;
    }
    return out;
}

// Central arrangement of n hyperplanes in Q^m given by integer normals.
class Arrangement
{
public:
    Arrangement() = default;

    Arrangement(std::size_t m, IntMatrix normals) : m_(m), a_(std::move(normals))
    {
        if (a_.size() > 63) {
            throw precondition_error("at most 63 hyperplanes supported");
        }
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (a_[i].size() != m_) {
                throw parse_error("normal " + std::to_string(i + 1) + " has " + std::to_string(a_[i].size()) +
                                  " entries, expected " + std::to_string(m_));
            }
            if (std::all_of(a_[i].begin(), a_[i].end(), [](const BigInt &x) { return x == 0; })) {
                throw precondition_error("normal " + std::to_string(i + 1) + " is zero");
            }
        }
    }

    static Arrangement from_ints(std::size_t m, const std::vector<std::vector<long>> &rows)
    {
        IntMatrix a;
        for (const auto &r : rows) {
            IntRow row;
            for (long x : r) {
                row.emplace_back(x);
            }
            a.push_back(std::move(row));
        }
        return Arrangement(m, std::move(a));
    }

    std::size_t n() const { return a_.size(); }
    std::size_t m() const { return m_; }
    const IntMatrix &normals() const { return a_; }
    IndexSet all() const { return a_.empty() ? 0 : (IndexSet{1} << a_.size()) - 1; }

    std::size_t rank(IndexSet s) const { return rank_of(select_rows(a_, s)); }

    // {i : a_i in span{a_j : j in s}}
    IndexSet closure(IndexSet s) const
    {
        IntMatrix rows = select_rows(a_, s);
        std::size_t r = rank_of(rows);
        IndexSet out = s;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (s >> i & 1U) {
                continue;
            }
            rows.push_back(a_[i]);
            if (rank_of(rows) == r) {
                out |= IndexSet{1} << i;
            }
            rows.pop_back();
        }
        return out;
    }

private:
    std::size_t m_ = 0;
    IntMatrix a_;
};

struct StructuralFlags {
    bool essential = false;
    bool coloop_free = false;
    bool unimodular = false;
    BigInt max_abs_minor = 0;
};

namespace detail
{

inline void for_each_subset_of_size(std::size_t n, std::size_t k, const std::function<void(IndexSet)> &f)
{
    if (k > n) {
        return;
    }
    if (k == 0) {
        f(0);
        return;
    }
    IndexSet s = (IndexSet{1} << k) - 1;
    IndexSet limit = IndexSet{1} << n;
    while (s < limit) {
        f(s);
        IndexSet c = s & -s;
        IndexSet r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

inline IntMatrix submatrix(const IntMatrix &a, IndexSet rows, IndexSet cols)
{
    IntMatrix out;
    for (int i : set_members(rows)) {
        IntRow r;
        for (int j : set_members(cols)) {
            r.push_back(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace detail

inline StructuralFlags structural_flags(const Arrangement &A)
{
    StructuralFlags f;
    std::size_t n = A.n();
    std::size_t m = A.m();
    std::size_t r = A.rank(A.all());
    f.essential = r == m;
    f.coloop_free = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (A.rank(A.all() & ~(IndexSet{1} << i)) < r) {
            f.coloop_free = false;
        }
    }
    for (std::size_t k = 1; k <= std::min(n, m); ++k) {
        detail::for_each_subset_of_size(n, k, [&](IndexSet rows) {
            detail::for_each_subset_of_size(m, k, [&](IndexSet cols) {
                BigInt d = abs(determinant(detail::submatrix(A.normals(), rows, cols)));
                if (d > f.max_abs_minor) {
                    f.max_abs_minor = d;
                }
            });
        });
    }
    f.unimodular = f.essential;
    if (f.essential) {
        IndexSet cols = m == 0 ? 0 : (IndexSet{1} << m) - 1;
        detail::for_each_subset_of_size(n, m, [&](IndexSet rows) {
            BigInt d = abs(determinant(detail::submatrix(A.normals(), rows, cols)));
            if (d != 0 && d != 1) {
                f.unimodular = false;
            }
        });
    }
    return f;
}

// Lattice of flats with dense Moebius table.
class FlatLattice
{
public:
    explicit FlatLattice(const Arrangement &A) : n_(A.n()), m_(A.m())
    {
        std::unordered_map<IndexSet, int> seen;
        std::vector<std::pair<int, IndexSet>> found;
        std::vector<IndexSet> queue{0};
        seen.emplace(0, 0);
        found.emplace_back(0, 0);
        std::uint64_t cap = config().budget.max_flats;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            IndexSet F = queue[head];
            for (std::size_t i = 0; i < n_; ++i) {
                if (F >> i & 1U) {
                    continue;
                }
                IndexSet G = A.closure(F | IndexSet{1} << i);
                if (seen.count(G)) {
                    continue;
                }
                seen.emplace(G, 0);
                found.emplace_back(static_cast<int>(A.rank(G)), G);
                queue.push_back(G);
                if (found.size() > cap) {
                    throw budget_error("lattice of flats exceeds " + std::to_string(cap) + " flats");
                }
            }
        }
        std::sort(found.begin(), found.end());
        for (auto &[r, F] : found) {
            index_.emplace(F, static_cast<int>(flats_.size()));
            flats_.push_back(F);
            rank_.push_back(r);
        }
        std::size_t N = flats_.size();
        charge(static_cast<std::uint64_t>(N) * N, "Moebius table");
        mu_.assign(N * N, BigInt(0));
        for (std::size_t f = 0; f < N; ++f) {
            at(f, f) = 1;
            for (std::size_t g = f + 1; g < N; ++g) {
                if (!is_subset(flats_[f], flats_[g]) || flats_[f] == flats_[g]) {
                    continue;
                }
                BigInt s = 0;
                for (std::size_t h = f; h < g; ++h) {
                    if (is_subset(flats_[f], flats_[h]) && is_subset(flats_[h], flats_[g])) {
                        s += at(f, h);
                    }
                }
                at(f, g) = -s;
            }
        }
    }

    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }
    std::size_t size() const { return flats_.size(); }
    const std::vector<IndexSet> &flats() const { return flats_; }
    IndexSet flat(std::size_t i) const { return flats_[i]; }
    int rank(std::size_t i) const { return rank_[i]; }
    std::size_t bottom() const { return 0; }
    std::size_t top() const { return flats_.size() - 1; }

    bool leq(std::size_t f, std::size_t g) const { return is_subset(flats_[f], flats_[g]); }

    std::optional<std::size_t> find(IndexSet F) const
    {
        auto it = index_.find(F);
        if (it == index_.end()) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it->second);
    }

    std::size_t index_of(IndexSet F) const
    {
        auto i = find(F);
        if (!i) {
            throw precondition_error("index set is not a flat");
        }
        return *i;
    }

    const BigInt &mobius(std::size_t f, std::size_t g) const
    {
        if (!leq(f, g)) {
            throw precondition_error("mobius: flats are not comparable");
        }
        return mu_[f * flats_.size() + g];
    }

    // Alternating count of chains f = F_0 < ... < F_k = g.
    BigInt mobius_by_chains(std::size_t f, std::size_t g) const
    {
        if (!leq(f, g)) {
            throw precondition_error("mobius: flats are not comparable");
        }
        // counts[h][k] = number of chains of length k from f to h
        std::size_t span = static_cast<std::size_t>(rank_[g] - rank_[f]) + 1;
        std::vector<std::vector<BigInt>> counts(flats_.size());
        counts[f].assign(span, BigInt(0));
        counts[f][0] = 1;
        for (std::size_t h = f + 1; h <= g; ++h) {
            if (!leq(f, h) || !leq(h, g)) {
                continue;
            }
            counts[h].assign(span, BigInt(0));
            for (std::size_t k = f; k < h; ++k) {
                if (counts[k].empty() || !leq(k, h) || k == h) {
                    continue;
                }
                for (std::size_t len = 1; len < span; ++len) {
                    counts[h][len] += counts[k][len - 1];
                }
            }
        }
        BigInt s = 0;
        for (std::size_t len = 0; len < span; ++len) {
            if (len % 2) {
                s -= counts[g][len];
            } else {
                s += counts[g][len];
            }
        }
        return s;
    }

    // sum_{g <= h <= f} mu(g, h) x^{rk f - rk h}
    LaurentPoly char_poly_interval(std::size_t g, std::size_t f, char var = 'q') const
    {
        if (!leq(g, f)) {
            throw precondition_error("char_poly_interval: flats are not comparable");
        }
        LaurentPoly p(var);
        for (std::size_t h = g; h <= f; ++h) {
            if (leq(g, h) && leq(h, f)) {
                p += LaurentPoly::monomial(mobius(g, h), rank_[f] - rank_[h], var);
            }
        }
        return p;
    }

    // Characteristic polynomial in the ambient dimension m.
    LaurentPoly char_poly(char var = 'q') const
    {
        LaurentPoly p(var);
        for (std::size_t h = 0; h < flats_.size(); ++h) {
            p += LaurentPoly::monomial(mobius(0, h), static_cast<int>(m_) - rank_[h], var);
        }
        return p;
    }

    // n - |I| + rk(I)
    int delta(std::size_t i) const { return static_cast<int>(n_) - set_size(flats_[i]) + rank_[i]; }

private:
    BigInt &at(std::size_t f, std::size_t g) { return mu_[f * flats_.size() + g]; }

    std::size_t n_;
    std::size_t m_;
    std::vector<IndexSet> flats_;
    std::vector<int> rank_;
    std::unordered_map<IndexSet, int> index_;
    std::vector<BigInt> mu_;
};

inline FlatLattice build_lattice(const Arrangement &A) { return FlatLattice(A); }

// Localization A_I: the normals in I, written in coordinates of their span.
inline Arrangement localization(const Arrangement &A, IndexSet I)
{
    IntMatrix rows = select_rows(A.normals(), I);
    Echelon e = bareiss(rows);
    IntMatrix out;
    for (const auto &r : rows) {
        IntRow x;
        for (auto c : e.pivots) {
            x.push_back(r[c]);
        }
        out.push_back(std::move(x));
    }
    return Arrangement(e.pivots.size(), std::move(out));
}

// Restriction A^F: the normals outside F pulled back to an integer basis of H_F.
inline Arrangement restriction(const Arrangement &A, IndexSet F)
{
    IntMatrix K = integer_kernel(select_rows(A.normals(), F), A.m());
    IntMatrix out;
    for (std::size_t i = 0; i < A.n(); ++i) {
        if (F >> i & 1U) {
            continue;
        }
        IntRow x;
        for (const auto &k : K) {
            x.push_back(dot(A.normals()[i], k));
        }
        out.push_back(std::move(x));
    }
    return Arrangement(K.size(), std::move(out));
}

// A minus every normal in F (ambient dimension kept).
inline Arrangement deletion(const Arrangement &A, IndexSet F)
{
    IntMatrix out;
    for (std::size_t i = 0; i < A.n(); ++i) {
        if (!(F >> i & 1U)) {
            out.push_back(A.normals()[i]);
        }
    }
    return Arrangement(A.m(), std::move(out));
}

// |{x in F_p^m : a_i . x != 0 for all i}|
inline BigInt count_complement_Fq(const Arrangement &A, std::int64_t p)
{
    if (!is_prime(p)) {
        throw precondition_error(std::to_string(p) + " is not prime");
    }
    StructuralFlags fl = structural_flags(A);
    if (BigInt(p) <= fl.max_abs_minor) {
        throw precondition_error("prime " + std::to_string(p) + " does not exceed the largest minor " +
                                 fl.max_abs_minor.get_str());
    }
    std::size_t m = A.m();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m; ++i) {
        total *= static_cast<std::uint64_t>(p);
        charge(total * std::max<std::size_t>(A.n(), 1), "complement count");
    }
    std::vector<std::vector<std::int64_t>> a;
    for (const auto &row : A.normals()) {
        std::vector<std::int64_t> r;
        for (const auto &x : row) {
            BigInt y = x % p;
            if (y < 0) {
                y += p;
            }
            r.push_back(y.get_si());
        }
        a.push_back(std::move(r));
    }
    unsigned threads = std::max(1U, config().threads);
    std::vector<std::uint64_t> partial(threads, 0);
    auto work = [&](unsigned tid) {
        std::vector<std::int64_t> x(m, 0);
        std::uint64_t count = 0;
        for (std::uint64_t idx = tid; idx < total; idx += threads) {
            std::uint64_t v = idx;
            for (std::size_t j = 0; j < m; ++j) {
                x[j] = static_cast<std::int64_t>(v % static_cast<std::uint64_t>(p));
                v /= static_cast<std::uint64_t>(p);
            }
            bool off = true;
            for (const auto &r : a) {
                std::int64_t s = 0;
                for (std::size_t j = 0; j < m; ++j) {
                    s += r[j] * x[j];
                }
                if (s % p == 0) {
                    off = false;
                    break;
                }
            }
            count += off ? 1 : 0;
        }
        partial[tid] = count;
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work, t);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    BigInt sum = 0;
    for (auto c : partial) {
        sum += static_cast<unsigned long>(c);
    }
    return sum;
}

// One normal e_s - e_t per edge, last coordinate dropped.
inline Arrangement graphic_arrangement(const Quiver &g)
{
    if (g.vertices < 2) {
        throw precondition_error("graphic arrangement needs at least two vertices");
    }
    if (!is_connected(g)) {
        throw precondition_error("graphic arrangement needs a connected graph");
    }
    std::size_t m = static_cast<std::size_t>(g.vertices - 1);
    IntMatrix rows;
    for (const auto &[s, t] : g.edges) {
        if (s == t) {
            throw precondition_error("loops have no graphic hyperplane");
        }
        IntRow r(m, BigInt(0));
        if (static_cast<std::size_t>(s) < m) {
            r[static_cast<std::size_t>(s)] += 1;
        }
        if (static_cast<std::size_t>(t) < m) {
            r[static_cast<std::size_t>(t)] -= 1;
        }
        rows.push_back(std::move(r));
    }
    return Arrangement(m, std::move(rows));
}

// The arrangement of n copies of the origin in Q^1.
inline Arrangement n_origins(std::size_t n)
{
    return Arrangement::from_ints(1, std::vector<std::vector<long>>(n, std::vector<long>{1}));
}

inline void require_essential(const Arrangement &A)
{
    if (A.rank(A.all()) != A.m()) {
        throw precondition_error("arrangement is not essential (rank " + std::to_string(A.rank(A.all())) + " < " +
                                 std::to_string(A.m()) + "); restrict to the span of the normals first");
    }
}

} // namespace amz
