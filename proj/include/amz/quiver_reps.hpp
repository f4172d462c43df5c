#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "arrangement.hpp"
#include "config.hpp"
#include "quiver.hpp"
#include "rational_uni.hpp"
#include "residues.hpp"

namespace amz
{

// Sum over nested spanning subgraphs G_1 <= ... <= G_alpha with G_alpha connected of
// (q-1)^{b(G_alpha)} q^{b(G_1) + ... + b(G_{alpha-1})}.
inline LaurentPoly a_gamma_alpha(const Quiver &g, int alpha)
{
    if (alpha < 1) {
        throw precondition_error("depth alpha must be at least 1");
    }
    if (!is_connected(g)) {
        throw precondition_error("quiver is not connected");
    }
    std::uint32_t all = g.all_edges();
    std::size_t subsets = std::size_t{1} << g.edge_count();
    charge(static_cast<std::uint64_t>(subsets) * subsets * static_cast<std::uint64_t>(alpha), "subgraph chain sum");
    std::vector<int> b(subsets);
    for (std::uint32_t s = 0; s < subsets; ++s) {
        b[s] = betti(g, s);
    }
    LaurentPoly q = var_poly('q');
    // S[s] = sum over chains of length k ending in s
    std::vector<LaurentPoly> S(subsets, LaurentPoly::constant(1, 'q'));
    for (int k = 1; k < alpha; ++k) {
        std::vector<LaurentPoly> next(subsets, LaurentPoly('q'));
        for (std::uint32_t s = 0; s < subsets; ++s) {
            for (std::uint32_t t = s;; t = (t - 1) & s) {
                next[s] += LaurentPoly::monomial(1, b[t], 'q') * S[t];
                if (t == 0) {
                    break;
                }
            }
        }
        S = std::move(next);
    }
    LaurentPoly total('q');
    LaurentPoly qm1 = q - LaurentPoly::constant(1, 'q');
    for (std::uint32_t s = 0; s <= all && s < subsets; ++s) {
        if (is_connected(g, s)) {
            total += qm1.pow(static_cast<unsigned>(b[s])) * S[s];
        }
    }
    return total;
}

// Limit of q^{-alpha b} A_{G,alpha} as alpha grows:
// (1 - 1/q)^b * sum over strict chains G'_1 < ... < G'_beta = G of
// prod_{j < beta} 1/(q^{b - b(G'_j)} - 1).
inline RationalUni a_gamma_limit(const Quiver &g)
{
    if (!is_two_edge_connected(g)) {
        throw precondition_error("quiver is not 2-edge-connected; the limit diverges");
    }
    std::size_t subsets = std::size_t{1} << g.edge_count();
    charge(static_cast<std::uint64_t>(subsets) * subsets, "subgraph chain sum");
    std::uint32_t all = g.all_edges();
    int bG = betti(g, all);
    std::vector<RationalUni> h(subsets, RationalUni('q'));
    for (std::uint32_t s = 0; s < subsets; ++s) {
        if (s == all) {
            continue;
        }
        int bs = betti(g, s);
        if (bs >= bG) {
            throw invariant_error("proper subgraph with full first Betti number in a 2-edge-connected graph");
        }
        h[s] = RationalUni(LaurentPoly::constant(1, 'q'),
                           LaurentPoly::monomial(1, bG - bs, 'q') - LaurentPoly::constant(1, 'q'));
    }
    // f(s) = 1 + sum_{s' < s} f(s') h(s')
    std::vector<RationalUni> f(subsets, RationalUni('q'));
    for (std::uint32_t s = 0; s < subsets; ++s) {
        RationalUni acc = RationalUni::constant(1, 'q');
        if (s != 0) {
            for (std::uint32_t t = (s - 1) & s;; t = (t - 1) & s) {
                acc += f[t] * h[t];
                if (t == 0) {
                    break;
                }
            }
        }
        f[s] = acc;
    }
    RationalUni pref(LaurentPoly::from_ints('q', -1, {-1, 1}));
    return pref.pow(bG) * f[all];
}

namespace detail
{

inline std::int64_t ipow(std::int64_t b, int e)
{
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        r *= b;
    }
    return r;
}

} // namespace detail

// Isomorphism classes of indecomposable reps of dimension (1,...,1) over Z/p^alpha,
// via valuation patterns weighted by orbit-stabiliser counts.
inline BigInt brute_force_indec(const Quiver &g, std::int64_t p, int alpha)
{
    if (!is_prime(p)) {
        throw precondition_error(std::to_string(p) + " is not prime");
    }
    if (alpha < 1) {
        throw precondition_error("depth alpha must be at least 1");
    }
    std::size_t E = g.edge_count();
    std::uint64_t patterns = 1;
    for (std::size_t i = 0; i < E; ++i) {
        patterns *= static_cast<std::uint64_t>(alpha + 1);
        charge(patterns * E, "valuation pattern enumeration");
    }
    BigInt P(p);
    BigInt unit_count = (P - 1) * big_pow(P, static_cast<unsigned long>(alpha - 1));
    BigInt group = big_pow(unit_count, static_cast<unsigned long>(g.vertices));
    Rational total = 0;
    std::vector<int> v(E, 0);
    for (std::uint64_t idx = 0; idx < patterns; ++idx) {
        std::uint64_t x = idx;
        for (std::size_t e = 0; e < E; ++e) {
            v[e] = static_cast<int>(x % static_cast<std::uint64_t>(alpha + 1));
            x /= static_cast<std::uint64_t>(alpha + 1);
        }
        auto level = [&](int k) {
            std::uint32_t s = 0;
            for (std::size_t e = 0; e < E; ++e) {
                if (v[e] < k) {
                    s |= std::uint32_t{1} << e;
                }
            }
            return s;
        };
        std::uint32_t support = level(alpha);
        if (!is_connected(g, support)) {
            continue;
        }
        BigInt reps = 1;
        for (std::size_t e = 0; e < E; ++e) {
            if (v[e] < alpha) {
                reps *= (P - 1) * big_pow(P, static_cast<unsigned long>(alpha - 1 - v[e]));
            }
        }
        int cexp = 0;
        for (int k = 1; k < alpha; ++k) {
            cexp += components(g, level(k));
        }
        BigInt aut = big_pow(P - 1, static_cast<unsigned long>(components(g, support))) *
                     big_pow(P, static_cast<unsigned long>(cexp));
        total += Rational(reps * aut);
    }
    total /= Rational(group);
    total.canonicalize();
    if (total.get_den() != 1) {
        throw invariant_error("Burnside count is not an integer");
    }
    return total.get_num();
}

struct OrbitCount {
    BigInt classes = 0;          // orbits with connected support
    BigInt burnside_mismatches = 0; // orbits whose size disagrees with the automorphism formula
};

// Raw orbit enumeration over (Z/p^alpha)^E under the torus action.
inline OrbitCount raw_orbit_count(const Quiver &g, std::int64_t p, int alpha)
{
    std::size_t E = g.edge_count();
    std::int64_t mod = detail::ipow(p, alpha);
    std::uint64_t states = 1;
    for (std::size_t e = 0; e < E; ++e) {
        states *= static_cast<std::uint64_t>(mod);
        charge(states * static_cast<std::uint64_t>(g.vertices) * static_cast<std::uint64_t>(mod), "raw orbit enumeration");
    }
    std::vector<std::int64_t> units;
    for (std::int64_t u = 1; u < mod; ++u) {
        if (u % p != 0) {
            units.push_back(u);
        }
    }
    auto decode = [&](std::uint64_t s) {
        std::vector<std::int64_t> x(E);
        for (std::size_t e = 0; e < E; ++e) {
            x[e] = static_cast<std::int64_t>(s % static_cast<std::uint64_t>(mod));
            s /= static_cast<std::uint64_t>(mod);
        }
        return x;
    };
    auto encode = [&](const std::vector<std::int64_t> &x) {
        std::uint64_t s = 0;
        for (std::size_t e = E; e-- > 0;) {
            s = s * static_cast<std::uint64_t>(mod) + static_cast<std::uint64_t>(x[e]);
        }
        return s;
    };
    auto inverse = [&](std::int64_t u) {
        for (std::int64_t w : units) {
            if (u * w % mod == 1) {
                return w;
            }
        }
        throw invariant_error("non-invertible unit");
    };
    std::vector<char> seen(states, 0);
    OrbitCount out;
    BigInt group = big_pow(BigInt(static_cast<long>(units.size())), static_cast<unsigned long>(g.vertices));
    for (std::uint64_t start = 0; start < states; ++start) {
        if (seen[start]) {
            continue;
        }
        std::vector<std::uint64_t> orbit{start};
        seen[start] = 1;
        for (std::size_t h = 0; h < orbit.size(); ++h) {
            auto x = decode(orbit[h]);
            for (int vtx = 0; vtx < g.vertices; ++vtx) {
                for (std::int64_t u : units) {
                    std::int64_t ui = inverse(u);
                    auto y = x;
                    for (std::size_t e = 0; e < E; ++e) {
                        auto [s, t] = g.edges[e];
                        // x_e -> g_t x_e g_s^{-1}
                        if (t == vtx) {
                            y[e] = y[e] * u % mod;
                        }
                        if (s == vtx) {
                            y[e] = y[e] * ui % mod;
                        }
                    }
                    std::uint64_t c = encode(y);
                    if (!seen[c]) {
                        seen[c] = 1;
                        orbit.push_back(c);
                    }
                }
            }
        }
        auto x = decode(start);
        std::vector<int> val(E);
        std::uint32_t support = 0;
        for (std::size_t e = 0; e < E; ++e) {
            int v = 0;
            std::int64_t y = x[e];
            while (v < alpha && y % p == 0) {
                y /= p;
                ++v;
            }
            if (x[e] == 0) {
                v = alpha;
            }
            val[e] = v;
            if (v < alpha) {
                support |= std::uint32_t{1} << e;
            }
        }
        if (!is_connected(g, support)) {
            continue;
        }
        out.classes += 1;
        int cexp = 0;
        for (int k = 1; k < alpha; ++k) {
            std::uint32_t s = 0;
            for (std::size_t e = 0; e < E; ++e) {
                if (val[e] < k) {
                    s |= std::uint32_t{1} << e;
                }
            }
            cexp += components(g, s);
        }
        BigInt aut = big_pow(BigInt(p - 1), static_cast<unsigned long>(components(g, support))) *
                     big_pow(BigInt(p), static_cast<unsigned long>(cexp));
        if (aut * static_cast<unsigned long>(orbit.size()) != group) {
            out.burnside_mismatches += 1;
        }
    }
    return out;
}

struct LastoneReport {
    RationalUni lhs;          // (q^b - 1)^{|I| - 1} A_G
    LaurentPoly rhs{'q'};     // B' of the graphic arrangement
    bool equal = false;
};

inline LastoneReport check_lastone(const Quiver &g)
{
    LastoneReport r;
    RationalUni lim = a_gamma_limit(g);
    int b = betti(g, g.all_edges());
    LaurentPoly f = LaurentPoly::monomial(1, b, 'q') - LaurentPoly::constant(1, 'q');
    r.lhs = RationalUni(f.pow(static_cast<unsigned>(g.vertices - 1))) * lim;
    Arrangement A = graphic_arrangement(g);
    FlatLattice lat(A);
    r.rhs = b_prime(A, lat).B_prime;
    r.equal = r.lhs == RationalUni(r.rhs);
    return r;
}

} // namespace amz
