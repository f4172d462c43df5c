#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrangement.hpp"

namespace amz
{

struct HypertoricClass {
    LaurentPoly cls{'L'};
    bool unimodular = false;
    bool formal = false; // computed outside the smooth (unimodular) case
};

inline HypertoricClass hypertoric_class(const Arrangement &A, const FlatLattice &lat)
{
    require_essential(A);
    StructuralFlags fl = structural_flags(A);
    int n = static_cast<int>(A.n());
    int m = static_cast<int>(A.m());
    LaurentPoly sum('L');
    for (std::size_t f = 0; f < lat.size(); ++f) {
        sum += LaurentPoly::monomial(lat.mobius(f, lat.top()), set_size(lat.flat(f)), 'L');
    }
    LaurentPoly raw = sum.shifted(n - m);
    LaurentPoly den = (var_poly('L') - LaurentPoly::constant(1, 'L')).pow(static_cast<unsigned>(m));
    auto q = exact_div(raw, den);
    if (!q) {
        throw invariant_error("(L-1)^" + std::to_string(m) + " does not divide " + raw.to_string());
    }
    return {*q, fl.unimodular, !fl.unimodular};
}

// Specialisation L -> u (the product xy).
inline LaurentPoly e_polynomial(const LaurentPoly &cls)
{
    if (!cls.is_polynomial()) {
        throw precondition_error("E-polynomial of a class with negative exponents");
    }
    return cls.with_var('u');
}

namespace detail
{

inline std::vector<std::vector<std::int64_t>> reduce_mod(const IntMatrix &a, std::int64_t p)
{
    std::vector<std::vector<std::int64_t>> out;
    for (const auto &row : a) {
        std::vector<std::int64_t> r;
        for (const auto &x : row) {
            BigInt y = x % p;
            if (y < 0) {
                y += p;
            }
            r.push_back(y.get_si());
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline void check_admissible_prime(const Arrangement &A, std::int64_t p)
{
    if (!is_prime(p)) {
        throw precondition_error(std::to_string(p) + " is not prime");
    }
    BigInt mm = structural_flags(A).max_abs_minor;
    if (BigInt(p) <= mm) {
        throw precondition_error("prime " + std::to_string(p) + " does not exceed the largest minor " + mm.get_str());
    }
}

} // namespace detail

// xi must avoid span{a_i : i in F} over F_p for every maximal proper flat F.
inline bool is_generic_xi(const Arrangement &A, const FlatLattice &lat, std::int64_t p,
                          const std::vector<std::int64_t> &xi)
{
    if (xi.size() != A.m()) {
        throw precondition_error("xi has the wrong length");
    }
    IntRow x;
    for (auto v : xi) {
        x.emplace_back(v);
    }
    int top_rank = lat.rank(lat.top());
    for (std::size_t f = 0; f < lat.size(); ++f) {
        if (lat.rank(f) != top_rank - 1) {
            continue;
        }
        IntMatrix rows = select_rows(A.normals(), lat.flat(f));
        std::size_t r = rank_mod_p(rows, p);
        rows.push_back(x);
        if (rank_mod_p(rows, p) == r) {
            return false;
        }
    }
    return true;
}

inline std::optional<std::vector<std::int64_t>> find_generic_xi(const Arrangement &A, const FlatLattice &lat,
                                                                 std::int64_t p)
{
    std::size_t m = A.m();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < m; ++i) {
        total *= static_cast<std::uint64_t>(p);
    }
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::vector<std::int64_t> xi(m);
        std::uint64_t v = idx;
        for (std::size_t j = 0; j < m; ++j) {
            xi[j] = static_cast<std::int64_t>(v % static_cast<std::uint64_t>(p));
            v /= static_cast<std::uint64_t>(p);
        }
        if (is_generic_xi(A, lat, p, xi)) {
            return xi;
        }
    }
    return std::nullopt;
}

enum class FiberMethod { automatic, direct, convolution };

// |{(v, w) in F_p^{2n} : sum v_i w_i a_i = xi}|
inline BigInt count_moment_fiber(const Arrangement &A, const FlatLattice &lat, std::int64_t p,
                                 const std::vector<std::int64_t> &xi, FiberMethod method = FiberMethod::automatic)
{
    detail::check_admissible_prime(A, p);
    if (!is_generic_xi(A, lat, p, xi)) {
        throw precondition_error("xi is not generic");
    }
    auto a = detail::reduce_mod(A.normals(), p);
    std::size_t n = A.n();
    std::size_t m = A.m();
    auto up = static_cast<std::uint64_t>(p);
    std::uint64_t pn = 1;
    for (std::size_t i = 0; i < n; ++i) {
        pn *= up;
    }
    std::uint64_t p2n = pn * pn;
    if (method == FiberMethod::automatic) {
        method = p2n <= 1000000 ? FiberMethod::direct : FiberMethod::convolution;
    }
    std::vector<std::int64_t> target(xi);
    for (auto &x : target) {
        x = ((x % p) + p) % p;
    }
    auto hits = [&](const std::vector<std::int64_t> &lam) {
        for (std::size_t j = 0; j < m; ++j) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < n; ++i) {
                s = (s + lam[i] * a[i][j]) % p;
            }
            if (s != target[j]) {
                return false;
            }
        }
        return true;
    };
    std::vector<std::int64_t> lam(n);
    if (method == FiberMethod::direct) {
        charge(p2n * n, "moment fiber count");
        std::uint64_t count = 0;
        for (std::uint64_t idx = 0; idx < p2n; ++idx) {
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < n; ++i) {
                std::int64_t x = static_cast<std::int64_t>(v % up);
                v /= up;
                std::int64_t y = static_cast<std::int64_t>(v % up);
                v /= up;
                lam[i] = x * y % p;
            }
            count += hits(lam) ? 1 : 0;
        }
        return BigInt(static_cast<unsigned long>(count));
    }
    charge(pn * n, "moment fiber count");
    // #{(v, w) : v w = lambda} over F_p
    BigInt n0 = 2 * p - 1;
    BigInt n1 = p - 1;
    BigInt total = 0;
    for (std::uint64_t idx = 0; idx < pn; ++idx) {
        std::uint64_t v = idx;
        int zeros = 0;
        for (std::size_t i = 0; i < n; ++i) {
            lam[i] = static_cast<std::int64_t>(v % up);
            v /= up;
            zeros += lam[i] == 0 ? 1 : 0;
        }
        if (hits(lam)) {
            total += big_pow(n0, static_cast<unsigned long>(zeros)) *
                     big_pow(n1, static_cast<unsigned long>(static_cast<int>(n) - zeros));
        }
    }
    return total;
}

} // namespace amz
