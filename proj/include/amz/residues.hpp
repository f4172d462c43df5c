#pragma once

#include <map>
#include <string>
#include <vector>

#include "igusa.hpp"
#include "rational_uni.hpp"

namespace amz
{

struct ResidueData {
    RationalUni B_mu;
    LaurentPoly B_prime{'q'};
    int degree = 0;         // actual degree of B_prime
    int formula_degree = 0; // m + sum -(eps + m)(l(eps) + 1)
    bool palindromic = false;
    bool positive_coeffs = false;
};

// epsilon -> l(epsilon), the longest chain length among flats with -delta = epsilon.
inline std::map<int, int> epsilon_chain_lengths(const FlatLattice &lat)
{
    std::map<int, int> out;
    std::vector<int> height(lat.size(), 0);
    for (std::size_t i = 0; i < lat.size(); ++i) {
        int e = -lat.delta(i);
        for (std::size_t j = 0; j < i; ++j) {
            if (-lat.delta(j) == e && lat.leq(j, i)) {
                height[i] = std::max(height[i], height[j] + 1);
            }
        }
        out[e] = std::max(out[e], height[i]);
    }
    return out;
}

inline void require_coloop_free(const Arrangement &A)
{
    require_essential(A);
    if (!structural_flags(A).coloop_free) {
        throw precondition_error("arrangement has a coloop; the residue at -m is not simple and B_mu is infinite");
    }
}

// Chain sum at the largest pole: DP over flats from the top down.
inline RationalUni b_mu(const Arrangement &A, const FlatLattice &lat)
{
    require_coloop_free(A);
    int m = static_cast<int>(A.m());
    std::size_t N = lat.size();
    std::vector<RationalUni> V(N, RationalUni('q'));
    V[lat.top()] = RationalUni::constant(1, 'q');
    for (std::size_t i = lat.top(); i-- > 0;) {
        RationalUni s('q');
        for (std::size_t j = i + 1; j < N; ++j) {
            if (lat.leq(i, j) && !V[j].is_zero()) {
                s += V[j] * RationalUni(lat.char_poly_interval(i, j));
            }
        }
        int e = lat.delta(i) - m;
        if (e < 1) {
            throw invariant_error("flat below the top with delta <= m in a coloop-free arrangement");
        }
        V[i] = s / RationalUni(LaurentPoly::monomial(1, e, 'q') - LaurentPoly::constant(1, 'q'));
    }
    RationalUni B('q');
    for (std::size_t i = 0; i < N; ++i) {
        B += V[i] * RationalUni(LaurentPoly::monomial(1, lat.rank(i) - m, 'q'));
    }
    return B;
}

// Residue of the zeta function at s = -m, normalised.
inline RationalUni b_mu_via_residue(const BiRational &z, int m)
{
    if (z.multiplicity(m) != 1) {
        throw precondition_error("pole at -" + std::to_string(m) + " has order " +
                                 std::to_string(z.multiplicity(m)) + ", expected a simple pole");
    }
    RationalUni r = (z * BiRational::factor_power(m, 1)).at_t_power(m);
    return r / RationalUni(LaurentPoly::monomial(1, m, 'q') - LaurentPoly::constant(1, 'q'));
}

inline ResidueData b_prime(const Arrangement &A, const FlatLattice &lat)
{
    ResidueData d;
    d.B_mu = b_mu(A, lat);
    int m = static_cast<int>(A.m());
    LaurentPoly qm1 = var_poly('q') - LaurentPoly::constant(1, 'q');
    RationalUni factor = RationalUni(LaurentPoly::monomial(1, m, 'q'));
    d.formula_degree = m;
    for (const auto &[eps, l] : epsilon_chain_lengths(lat)) {
        if (eps == -m) {
            continue;
        }
        LaurentPoly top = LaurentPoly::monomial(1, -eps - m, 'q') - LaurentPoly::constant(1, 'q');
        auto g = exact_div(top, qm1);
        if (!g) {
            throw invariant_error("q - 1 does not divide q^k - 1");
        }
        factor *= RationalUni(g->pow(static_cast<unsigned>(l + 1)));
        d.formula_degree += -(eps + m) * (l + 1);
    }
    RationalUni bp = factor * d.B_mu;
    if (!bp.is_laurent() || !bp.num().is_polynomial()) {
        throw invariant_error("B' does not clear to a polynomial: " + bp.to_string());
    }
    d.B_prime = bp.num();
    auto [pal, deg] = palindromic_check(d.B_prime);
    d.palindromic = pal;
    d.degree = deg;
    if (!pal) {
        throw invariant_error("B' = " + d.B_prime.to_string() + " is not palindromic");
    }
    d.positive_coeffs = true;
    for (int e = 0; e <= deg; ++e) {
        if (d.B_prime.coeff(e) <= 0) {
            d.positive_coeffs = false;
        }
    }
    return d;
}

} // namespace amz
