#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "errors.hpp"

namespace amz
{

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt parse_bigint(std::string_view s)
{
    BigInt r;
    std::string tmp(s);
    std::string_view body = !s.empty() && s[0] == '+' ? s.substr(1) : s;
    bool signed_twice = body.size() != s.size() && !body.empty() && body[0] == '-';
    if (body.empty() || body[0] == '+' || signed_twice || r.set_str(std::string(body), 10) != 0) {
        throw parse_error("invalid integer literal '" + tmp + "'");
    }
    return r;
}

inline std::string to_string(const BigInt &x) { return x.get_str(10); }

inline std::string to_string(const Rational &x) { return x.get_str(10); }

inline BigInt big_pow(const BigInt &base, unsigned long e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt factorial(unsigned long k)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

inline BigInt big_gcd(const BigInt &a, const BigInt &b)
{
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// x^e for a rational base and a signed exponent.
inline Rational rational_pow(const Rational &x, long e)
{
    Rational r = 1;
    Rational b = e >= 0 ? x : Rational(1) / x;
    unsigned long k = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    while (k) {
        if (k & 1UL) {
            r *= b;
        }
        b *= b;
        k >>= 1;
    }
    return r;
}

inline bool is_prime(std::int64_t p)
{
    if (p < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace amz
