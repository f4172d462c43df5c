#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "arrangement.hpp"
#include "birational.hpp"

namespace amz
{

// t / (q^a - t), i.e. 1/(q^{s+a} - 1)
inline BiRational shifted_pole(int a) { return BiRational::monomial(1, 0, 1) * BiRational::factor_power(a, -1); }

// (q^m - 1)/(q^m - t) + q^m (t - 1)/(q^m - t) * J
inline BiRational assemble_zeta(int m, const BiRational &J)
{
    BiRational inv = BiRational::factor_power(m, -1);
    BiRational lead = BiRational::from_q(LaurentPoly::monomial(1, m, 'q') - LaurentPoly::constant(1, 'q')) * inv;
    BiPoly tm1 = BiPoly::monomial(1, 0, 1) - BiPoly::monomial(1, 0, 0);
    return lead + BiRational(tm1, {}, m, 0) * inv * J;
}

// Chain sum, organised as a dynamic program over flats from the top down.
inline BiRational igusa_chain(const Arrangement &A, const FlatLattice &lat)
{
    require_essential(A);
    if (A.n() == 0) {
        throw precondition_error("igusa: empty arrangement");
    }
    int m = static_cast<int>(A.m());
    std::size_t N = lat.size();
    std::vector<BiRational> W(N);
    W[lat.top()] = BiRational::constant(1);
    for (std::size_t i = lat.top(); i-- > 0;) {
        BiRational s;
        for (std::size_t j = i + 1; j < N; ++j) {
            if (!lat.leq(i, j) || W[j].is_zero()) {
                continue;
            }
            s += W[j] * BiRational::from_q(lat.char_poly_interval(i, j));
        }
        W[i] = s * shifted_pole(lat.delta(i));
    }
    BiRational sum;
    for (std::size_t i = 0; i < lat.top(); ++i) {
        sum += W[i] * BiRational::monomial(1, lat.rank(i) - m, 0);
    }
    // q^m (t-1) / (t (q^m - t)) * sum == assemble_zeta with J = sum / t
    return assemble_zeta(m, sum * BiRational::monomial(1, 0, -1));
}

namespace detail
{

// J' for the localization of A at the flat whose original index set is `orig`.
// `sub` is that localization with normals in the order of set_members(orig).
inline BiRational jprime(const Arrangement &sub, IndexSet orig, std::map<IndexSet, BiRational> &memo)
{
    auto it = memo.find(orig);
    if (it != memo.end()) {
        return it->second;
    }
    if (sub.n() == 0) {
        return memo[orig] = BiRational();
    }
    FlatLattice lat(sub);
    int m = static_cast<int>(sub.m());
    std::vector<int> members = set_members(orig);
    auto lift = [&](IndexSet local) {
        IndexSet out = 0;
        for (int k : set_members(local)) {
            out |= IndexSet{1} << members[static_cast<std::size_t>(k)];
        }
        return out;
    };
    BiRational total;
    for (std::size_t i = 0; i < lat.top(); ++i) {
        IndexSet I = lat.flat(i);
        int rk = lat.rank(i);
        int delta = lat.delta(i);
        Arrangement loc = localization(sub, I);
        BiRational inner = jprime(loc, lift(I), memo);
        // J'_{A_I}(s + delta - rk), and t -> t q^{-(delta - rk)}
        inner = inner.t_scaled(-(delta - rk)) * BiRational::monomial(1, rk, 0) + BiRational::constant(1);
        BiRational term = BiRational::from_q(lat.char_poly_interval(i, lat.top())) *
                          BiRational::monomial(1, -(m - rk), 0) * shifted_pole(delta) * inner;
        total += term;
    }
    total *= BiRational::monomial(1, -m, 0);
    return memo[orig] = total;
}

} // namespace detail

// Independent route through the recursion over localizations.
inline BiRational igusa_recursion(const Arrangement &A)
{
    require_essential(A);
    if (A.n() == 0) {
        throw precondition_error("igusa: empty arrangement");
    }
    std::map<IndexSet, BiRational> memo;
    int m = static_cast<int>(A.m());
    BiRational Jp = detail::jprime(A, A.all(), memo);
    BiRational J = Jp * BiRational::monomial(1, m, -1);
    return assemble_zeta(m, J);
}

inline bool functional_equation_check(const BiRational &z)
{
    return z.inverted() == BiRational::monomial(1, 0, 2) * z;
}

struct PoleInfo {
    int epsilon = 0;
    int chain_length = 0; // l(epsilon)
    int predicted_order = 0; // l(epsilon) + 1
    int actual_order = 0;
    BigInt criterion = 0;
    std::vector<IndexSet> minimal; // J_i
    std::vector<IndexSet> tops;    // J_{i,j}, with multiplicity over i
    bool is_minus_m = false;
    bool is_minus_n = false;
    bool is_max_other = false;

    bool distinguished() const { return is_minus_m || is_minus_n || is_max_other; }
};

struct PoleReport {
    std::vector<PoleInfo> poles; // sorted by epsilon descending (-1, -2, ...)
    std::vector<std::string> notes;

    const PoleInfo *find(int eps) const
    {
        for (const auto &p : poles) {
            if (p.epsilon == eps) {
                return &p;
            }
        }
        return nullptr;
    }
};

inline PoleReport pole_report(const BiRational &z, const Arrangement &A, const FlatLattice &lat)
{
    PoleReport rep;
    int m = static_cast<int>(A.m());
    int n = static_cast<int>(A.n());
    std::set<int> eps;
    for (std::size_t i = 0; i < lat.size(); ++i) {
        eps.insert(-lat.delta(i));
    }
    for (const auto &[a, mult] : z.den()) {
        if (!eps.count(-a)) {
            throw invariant_error("pole at " + std::to_string(-a) + " outside the candidate set");
        }
    }
    int max_other = 0;
    bool have_other = false;
    for (int e : eps) {
        if (e != -m && (!have_other || e > max_other)) {
            max_other = e;
            have_other = true;
        }
    }
    for (auto it = eps.rbegin(); it != eps.rend(); ++it) {
        PoleInfo p;
        p.epsilon = *it;
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < lat.size(); ++i) {
            if (-lat.delta(i) == p.epsilon) {
                members.push_back(i);
            }
        }
        // members are in increasing lattice order, so subsets come first
        std::map<std::size_t, int> height;
        for (std::size_t i : members) {
            int h = 0;
            for (std::size_t j : members) {
                if (j != i && lat.leq(j, i)) {
                    h = std::max(h, height[j] + 1);
                }
            }
            height[i] = h;
            p.chain_length = std::max(p.chain_length, h);
        }
        std::vector<std::size_t> mins;
        for (std::size_t i : members) {
            if (height[i] == 0) {
                mins.push_back(i);
                p.minimal.push_back(lat.flat(i));
            }
        }
        // longest chain from each minimal flat to every member above it
        for (std::size_t j0 : mins) {
            std::map<std::size_t, int> up;
            up[j0] = 0;
            for (std::size_t i : members) {
                if (i == j0 || !lat.leq(j0, i)) {
                    continue;
                }
                int best = -1;
                for (std::size_t k : members) {
                    auto f = up.find(k);
                    if (k != i && f != up.end() && lat.leq(k, i)) {
                        best = std::max(best, f->second + 1);
                    }
                }
                if (best >= 0) {
                    up[i] = best;
                }
            }
            for (const auto &[i, len] : up) {
                if (len == p.chain_length) {
                    p.tops.push_back(lat.flat(i));
                    p.criterion += lat.mobius(i, lat.top());
                }
            }
        }
        p.predicted_order = p.chain_length + 1;
        p.actual_order = z.multiplicity(-p.epsilon);
        p.is_minus_m = p.epsilon == -m;
        p.is_minus_n = p.epsilon == -n;
        p.is_max_other = have_other && p.epsilon == max_other;
        if (p.actual_order > p.predicted_order) {
            throw invariant_error("pole at " + std::to_string(p.epsilon) + " has order " +
                                  std::to_string(p.actual_order) + " above the bound " +
                                  std::to_string(p.predicted_order));
        }
        if (p.epsilon != -m && p.criterion != 0 && p.actual_order != p.predicted_order) {
            throw invariant_error("pole criterion nonzero at " + std::to_string(p.epsilon) +
                                  " but the order is not maximal");
        }
        if (p.distinguished() && p.actual_order != p.predicted_order) {
            throw invariant_error("distinguished pole " + std::to_string(p.epsilon) + " has order " +
                                  std::to_string(p.actual_order) + ", expected " +
                                  std::to_string(p.predicted_order));
        }
        if (p.epsilon != -m && p.criterion == 0) {
            rep.notes.push_back("criterion vanishes at " + std::to_string(p.epsilon) + "; observed order " +
                                std::to_string(p.actual_order) + " of at most " +
                                std::to_string(p.predicted_order));
        }
        rep.poles.push_back(std::move(p));
    }
    return rep;
}

} // namespace amz
