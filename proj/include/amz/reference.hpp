#pragma once

#include <map>
#include <vector>

#include "arrangement.hpp"
#include "birational.hpp"
#include "quiver.hpp"

namespace amz::reference
{

inline Arrangement triangle() { return Arrangement::from_ints(2, {{1, 0}, {-1, 1}, {0, -1}}); }

inline Arrangement triangle_doubled() { return Arrangement::from_ints(2, {{1, 0}, {-1, 1}, {0, -1}, {0, -1}}); }

inline Arrangement six_normals()
{
    return Arrangement::from_ints(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}, {1, -1, 0}, {0, 1, -1}, {-1, 0, 1}});
}

inline Quiver atilde(int m) { return cycle_quiver(m + 1); }

inline Quiver atilde2_doubled() { return Quiver(3, {{0, 1}, {1, 2}, {2, 0}, {2, 0}}); }

// Value given in the q^s notation:
//   pref(q) q^{k0 s} sum_k groups[k](q) q^{k s} / prod_a (q^{s+a} - 1)^{den[a]}
inline BiRational zeta_from_qs(const LaurentPoly &pref, int k0, const std::map<int, LaurentPoly> &groups,
                               const std::map<int, int> &den)
{
    int M = 0;
    for (const auto &[a, k] : den) {
        M += k;
    }
    BiPoly num;
    for (const auto &[k, c] : groups) {
        // q^{K s} = t^{-K}; the denominator contributes t^{-M}
        num.add_term(M - k0 - k, c * pref);
    }
    return BiRational(num, den);
}

inline LaurentPoly qpoly(std::initializer_list<std::pair<int, long>> terms)
{
    LaurentPoly p('q');
    for (const auto &[e, c] : terms) {
        p += LaurentPoly::monomial(c, e, 'q');
    }
    return p;
}

inline LaurentPoly q_minus_one_pow(unsigned k) { return (var_poly('q') - LaurentPoly::constant(1, 'q')).pow(k); }

// (q-1)(q^n-1) q^{2s} / ((q^{s+1}-1)(q^{s+n}-1))
inline BiRational origins_zeta(int n)
{
    LaurentPoly c = q_minus_one_pow(1) * (LaurentPoly::monomial(1, n, 'q') - LaurentPoly::constant(1, 'q'));
    std::map<int, int> den{{1, 1}};
    den[n] += 1;
    return zeta_from_qs(c, 2, {{0, LaurentPoly::constant(1, 'q')}}, den);
}

inline std::map<int, LaurentPoly> triangle_groups()
{
    return {{1, qpoly({{6, 1}, {5, 2}, {4, 2}, {3, -2}})}, {0, qpoly({{3, 2}, {2, -2}, {1, -2}, {0, -1}})}};
}

// As printed, with leading factor q^{s}.
inline BiRational triangle_zeta_as_printed()
{
    return zeta_from_qs(q_minus_one_pow(2), 1, triangle_groups(), {{2, 1}, {3, 2}});
}

// With leading factor q^{2s}; the form consistent with degree-2 homogeneity.
inline BiRational triangle_zeta()
{
    return zeta_from_qs(q_minus_one_pow(2), 2, triangle_groups(), {{2, 1}, {3, 2}});
}

inline BiRational six_normals_zeta()
{
    std::map<int, LaurentPoly> g{
        {3, qpoly({{24, 1}, {23, 2}, {22, 3}, {21, 3}, {20, 3}, {19, -1}, {18, -11}, {17, 6}})},
        {2, qpoly({{19, 3}, {18, 9}, {17, -12}, {16, -9}, {15, -9}, {14, -9}, {13, -3}, {12, 9}, {11, 3}})},
        {1, qpoly({{13, -3}, {12, -9}, {11, 3}, {10, 9}, {9, 9}, {8, 9}, {7, 12}, {6, -9}, {5, -3}})},
        {0, qpoly({{7, -6}, {6, 11}, {5, 1}, {4, -3}, {3, -3}, {2, -3}, {1, -2}, {0, -1}})},
    };
    return zeta_from_qs(q_minus_one_pow(2), 2, g, {{3, 1}, {5, 1}, {6, 3}});
}

inline LaurentPoly six_normals_numerator()
{
    return qpoly({{10, 1}, {9, 4}, {8, 13}, {7, 35}, {6, 50}, {5, 58}, {4, 50}, {3, 35}, {2, 13}, {1, 4}, {0, 1}});
}

// (q-1)^4 P / (q^3 (q^2-1)(q^3-1)^3)
inline RationalUni six_normals_bmu()
{
    LaurentPoly den = LaurentPoly::monomial(1, 3, 'q') * qpoly({{2, 1}, {0, -1}}) * qpoly({{3, 1}, {0, -1}}).pow(3);
    return RationalUni(q_minus_one_pow(4) * six_normals_numerator(), den);
}

// (q-1)^2 (q^4+3q^3+6q^2+3q+1) / (q^2 (q^2-1)^2)
inline RationalUni doubled_bmu()
{
    LaurentPoly den = LaurentPoly::monomial(1, 2, 'q') * qpoly({{2, 1}, {0, -1}}).pow(2);
    return RationalUni(q_minus_one_pow(2) * qpoly({{4, 1}, {3, 3}, {2, 6}, {1, 3}, {0, 1}}), den);
}

inline LaurentPoly doubled_numerator() { return qpoly({{4, 1}, {3, 3}, {2, 6}, {1, 3}, {0, 1}}); }

// (q-1)(q^{n-1}+...+1) / (q (q^{n-1}-1))
inline RationalUni origins_bmu(int n)
{
    LaurentPoly geo('q');
    for (int i = 0; i < n; ++i) {
        geo += LaurentPoly::monomial(1, i, 'q');
    }
    return RationalUni(q_minus_one_pow(1) * geo,
                       LaurentPoly::monomial(1, 1, 'q') * (LaurentPoly::monomial(1, n - 1, 'q') - LaurentPoly::constant(1, 'q')));
}

// Eulerian polynomials E_1..E_5 in q.
inline LaurentPoly eulerian(int k)
{
    switch (k) {
    case 1:
        return qpoly({{0, 1}});
    case 2:
        return qpoly({{1, 1}, {0, 1}});
    case 3:
        return qpoly({{2, 1}, {1, 4}, {0, 1}});
    case 4:
        return qpoly({{3, 1}, {2, 11}, {1, 11}, {0, 1}});
    case 5:
        return qpoly({{4, 1}, {3, 26}, {2, 66}, {1, 26}, {0, 1}});
    default:
        throw precondition_error("Eulerian reference values stop at E_5");
    }
}

inline RationalUni atilde2_limit() { return RationalUni(eulerian(3), q_minus_one_pow(2)); }
inline RationalUni atilde3_limit() { return RationalUni(eulerian(4), q_minus_one_pow(3)); }
inline RationalUni atilde2_doubled_limit() { return RationalUni(doubled_numerator(), qpoly({{2, 1}, {0, -1}}).pow(2)); }

// (alpha+1) q^alpha - alpha q^{alpha-1}
inline BigInt divex_count(long q, int alpha)
{
    return BigInt(alpha + 1) * big_pow(BigInt(q), static_cast<unsigned long>(alpha)) -
           BigInt(alpha) * big_pow(BigInt(q), static_cast<unsigned long>(alpha - 1));
}

// n = 2 open de Rham family: L^{k-3}(L^{k-d-1}(L+1)^{d-1} - 2^{d-1})/(L-1)
inline LaurentPoly odr_rank2(int d, int k)
{
    LaurentPoly L = var_poly('L');
    LaurentPoly one = LaurentPoly::constant(1, 'L');
    LaurentPoly inner = LaurentPoly::monomial(1, k - d - 1, 'L') * (L + one).pow(static_cast<unsigned>(d - 1)) -
                        LaurentPoly::constant(big_pow(BigInt(2), static_cast<unsigned long>(d - 1)), 'L');
    auto q = exact_div(inner, L - one);
    if (!q) {
        throw invariant_error("rank-2 open de Rham reference does not clear");
    }
    return q->shifted(k - 3);
}

// Printed leading coefficients of the n = 2 expansions, L^{k-3}(L^{k-3} + c_1 L^{k-4} + ...),
// with the tail constant repeated.
inline std::vector<long> odr_rank2_head(int d)
{
    switch (d) {
    case 2:
        return {1, 2};
    case 3:
        return {1, 3, 4};
    case 4:
        return {1, 4, 7, 8};
    default:
        throw precondition_error("no printed expansion for this d");
    }
}

} // namespace amz::reference
