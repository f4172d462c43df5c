#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "quiver_varieties.hpp"

namespace amz
{

struct OdrInput {
    int n = 1;
    std::vector<int> orders;

    int d() const { return static_cast<int>(orders.size()); }
    int k() const { return std::accumulate(orders.begin(), orders.end(), 0); }

    void validate() const
    {
        if (n < 1) {
            throw precondition_error("rank n must be at least 1");
        }
        if (orders.empty()) {
            throw precondition_error("at least one pole is required");
        }
        for (int k : orders) {
            if (k < 2) {
                throw precondition_error("pole orders must be at least 2 (order-1 poles are not supported)");
            }
        }
    }
};

inline LaurentPoly gl_class(int k, char var = 'L')
{
    if (k < 0) {
        throw precondition_error("gl_class of negative rank");
    }
    LaurentPoly r = LaurentPoly::constant(1, var);
    for (int i = 0; i < k; ++i) {
        r *= LaurentPoly::monomial(1, k, var) - LaurentPoly::monomial(1, i, var);
    }
    return r;
}

// dim = k(n^2 - n) - 2(n^2 - 1)
inline long odr_dimension(const OdrInput &in)
{
    long n = in.n;
    return static_cast<long>(in.k()) * (n * n - n) - 2 * (n * n - 1);
}

inline LaurentPoly odr_class(const OdrInput &in)
{
    in.validate();
    const int n = in.n;
    const int d = in.d();
    const int k = in.k();
    // Work in X = L^{1/2}.
    LaurentPoly sum('X');
    BigInt nfact = factorial(static_cast<unsigned long>(n));
    for (const auto &lam : partitions_of(n)) {
        int l = lam.length();
        Rational c = Rational(factorial(static_cast<unsigned long>(l - 1)));
        if ((l - 1) % 2) {
            c = -c;
        }
        c *= Rational(big_pow(nfact, static_cast<unsigned long>(d)));
        BigInt den = 1;
        long N = 0;
        LaurentPoly stab = LaurentPoly::constant(1, 'X');
        for (int part : lam.parts) {
            den *= big_pow(factorial(static_cast<unsigned long>(part)), static_cast<unsigned long>(d));
            N += static_cast<long>(part) * part;
            stab *= gl_class(part, 'X').exponent_scaled(2);
        }
        for (const auto &[r, mr] : lam.multiplicities()) {
            den *= factorial(static_cast<unsigned long>(mr));
        }
        c /= Rational(den);
        c.canonicalize();
        if (c.get_den() != 1) {
            throw invariant_error("non-integral coefficient in the partition sum");
        }
        LaurentPoly term = LaurentPoly::monomial(c.get_num(), static_cast<int>(N * (k - 2 * d)), 'X') *
                           stab.pow(static_cast<unsigned>(d - 1));
        sum += term;
    }
    int pre = k * (n * n - 2 * n) + 2 * n * (d - n) + 2;
    LaurentPoly num = sum.shifted(pre);
    LaurentPoly den = (LaurentPoly::monomial(1, 2, 'X') - LaurentPoly::constant(1, 'X')).pow(static_cast<unsigned>(n * d - 1));
    auto q = exact_div(num, den);
    if (!q) {
        throw invariant_error("(L-1)^" + std::to_string(n * d - 1) + " does not clear the partition sum");
    }
    if (q->is_zero()) {
        return LaurentPoly('L');
    }
    std::vector<BigInt> c;
    if (q->low_degree() % 2 != 0) {
        throw invariant_error("half-integral power of L in the result");
    }
    for (int e = q->low_degree(); e <= q->degree(); ++e) {
        BigInt x = q->coeff(e);
        if ((e - q->low_degree()) % 2 == 0) {
            c.push_back(x);
        } else if (x != 0) {
            throw invariant_error("half-integral power of L in the result");
        }
    }
    return LaurentPoly::from_coeffs('L', q->low_degree() / 2, std::move(c));
}

} // namespace amz
