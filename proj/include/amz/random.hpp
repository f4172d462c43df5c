#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "arrangement.hpp"

namespace amz
{

// Uniform-ish draw in [lo, hi] by modulo reduction, so sequences are identical
// across standard libraries for a fixed seed.
inline long draw(std::mt19937_64 &rng, long lo, long hi)
{
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct RandomSpec {
    int max_n = 5;
    int max_m = 3;
    long entry = 2;
    bool coloop_free = false;
};

// Random essential arrangement with n <= max_n, m <= max_m, entries in
// [-entry, entry]; zero rows are dropped and draws repeat until the
// requested properties hold.
inline Arrangement random_arrangement(std::mt19937_64 &rng, const RandomSpec &spec = {})
{
    while (true) {
        int m = static_cast<int>(draw(rng, 1, spec.max_m));
        int n = static_cast<int>(draw(rng, 1, spec.max_n));
        std::vector<std::vector<long>> rows;
        for (int i = 0; i < n; ++i) {
            std::vector<long> r;
            bool zero = true;
            for (int j = 0; j < m; ++j) {
                r.push_back(draw(rng, -spec.entry, spec.entry));
                zero = zero && r.back() == 0;
            }
            if (!zero) {
                rows.push_back(std::move(r));
            }
        }
        if (rows.empty()) {
            continue;
        }
        Arrangement A = Arrangement::from_ints(static_cast<std::size_t>(m), rows);
        StructuralFlags f = structural_flags(A);
        if (!f.essential || (spec.coloop_free && !f.coloop_free)) {
            continue;
        }
        return A;
    }
}

inline std::vector<Arrangement> random_suite(std::uint64_t seed, int count, const RandomSpec &spec = {})
{
    std::mt19937_64 rng(seed);
    std::vector<Arrangement> out;
    for (int i = 0; i < count; ++i) {
        out.push_back(random_arrangement(rng, spec));
    }
    return out;
}

// Smallest prime strictly above the largest absolute minor (at least `floor`).
inline std::int64_t admissible_prime(const Arrangement &A, std::int64_t floor = 2)
{
    BigInt mm = structural_flags(A).max_abs_minor;
    std::int64_t p = std::max<std::int64_t>(floor, mm.get_si() + 1);
    while (!is_prime(p)) {
        ++p;
    }
    return p;
}

} // namespace amz
