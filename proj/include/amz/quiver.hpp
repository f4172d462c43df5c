#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace amz
{

// Directed multigraph; vertices 0..vertices-1, loops and parallel edges allowed.
struct Quiver {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;

    Quiver() = default;
    Quiver(int v, std::vector<std::pair<int, int>> e) : vertices(v), edges(std::move(e)) { validate(); }

    void validate() const
    {
        if (vertices < 0) {
            throw precondition_error("negative vertex count");
        }
        for (const auto &[s, t] : edges) {
            if (s < 0 || t < 0 || s >= vertices || t >= vertices) {
                throw precondition_error("edge endpoint out of range");
            }
        }
        if (edges.size() > 32) {
            throw precondition_error("at most 32 edges supported");
        }
    }

    std::size_t edge_count() const { return edges.size(); }
    std::uint32_t all_edges() const
    {
        return edges.size() == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << edges.size()) - 1;
    }
};

class UnionFind
{
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)), comps_(n)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x)
    {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto &p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent_[static_cast<std::size_t>(a)] = b;
        --comps_;
        return true;
    }

    int components() const { return comps_; }

private:
    std::vector<int> parent_;
    int comps_;
};

// Components of the spanning subgraph with the given edges (isolated vertices count).
inline int components(const Quiver &g, std::uint32_t mask)
{
    UnionFind uf(g.vertices);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (mask >> e & 1U) {
            uf.unite(g.edges[e].first, g.edges[e].second);
        }
    }
    return uf.components();
}

// First Betti number c - |V| + |E| of the spanning subgraph.
inline int betti(const Quiver &g, std::uint32_t mask)
{
    return components(g, mask) - g.vertices + __builtin_popcount(mask);
}

inline bool is_connected(const Quiver &g, std::uint32_t mask) { return components(g, mask) <= 1; }

inline bool is_connected(const Quiver &g) { return is_connected(g, g.all_edges()); }

// Connected and without bridges. Removing a bridge increases the component count.
inline bool is_two_edge_connected(const Quiver &g)
{
    if (!is_connected(g)) {
        return false;
    }
    std::uint32_t all = g.all_edges();
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (!is_connected(g, all & ~(std::uint32_t{1} << e))) {
            return false;
        }
    }
    return true;
}

inline Quiver cycle_quiver(int k)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) {
        e.emplace_back(i, (i + 1) % k);
    }
    return Quiver(k, std::move(e));
}

inline Quiver jordan_quiver() { return Quiver(1, {{0, 0}}); }

} // namespace amz
