#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "rational_uni.hpp"

namespace amz
{

// Laurent polynomial in (q, t): t-exponent -> coefficient in Z[q, q^-1].
class BiPoly
{
public:
    using Map = std::map<int, LaurentPoly>;

    BiPoly() = default;

    static BiPoly from_q(const LaurentPoly &c, int t_exp = 0)
    {
        BiPoly p;
        if (!c.is_zero()) {
            p.c_.emplace(t_exp, c.with_var('q'));
        }
        return p;
    }

    static BiPoly monomial(const BigInt &c, int eq, int et)
    {
        return from_q(LaurentPoly::monomial(c, eq, 'q'), et);
    }

    // q^a - t
    static BiPoly factor(int a)
    {
        BiPoly p = monomial(1, a, 0);
        p.c_.emplace(1, LaurentPoly::constant(-1, 'q'));
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    const Map &coeffs() const { return c_; }

    LaurentPoly coeff(int t_exp) const
    {
        auto it = c_.find(t_exp);
        return it == c_.end() ? LaurentPoly('q') : it->second;
    }

    int t_low() const { return c_.begin()->first; }
    int t_high() const { return c_.rbegin()->first; }

    int q_low() const
    {
        int lo = c_.begin()->second.low_degree();
        for (const auto &[e, c] : c_) {
            lo = std::min(lo, c.low_degree());
        }
        return lo;
    }

    BiPoly shifted(int eq, int et) const
    {
        BiPoly r;
        for (const auto &[e, c] : c_) {
            r.c_.emplace(e + et, c.shifted(eq));
        }
        return r;
    }

    BiPoly &operator+=(const BiPoly &o)
    {
        for (const auto &[e, c] : o.c_) {
            add_term(e, c);
        }
        return *this;
    }

    BiPoly operator-() const
    {
        BiPoly r = *this;
        for (auto &[e, c] : r.c_) {
            c = -c;
        }
        return r;
    }

    BiPoly &operator-=(const BiPoly &o) { return *this += -o; }

    friend BiPoly operator+(BiPoly a, const BiPoly &b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly &b) { return a -= b; }

    friend BiPoly operator*(const BiPoly &a, const BiPoly &b)
    {
        BiPoly r;
        for (const auto &[ea, ca] : a.c_) {
            for (const auto &[eb, cb] : b.c_) {
                r.add_term(ea + eb, ca * cb);
            }
        }
        return r;
    }

    friend BiPoly operator*(const BiPoly &a, const LaurentPoly &c)
    {
        BiPoly r;
        if (c.is_zero()) {
            return r;
        }
        for (const auto &[e, x] : a.c_) {
            r.c_.emplace(e, x * c.with_var('q'));
        }
        return r;
    }

    friend bool operator==(const BiPoly &a, const BiPoly &b) { return a.c_ == b.c_; }

    // Value at t = q^a as a Laurent polynomial in q.
    LaurentPoly at_t_power(int a) const
    {
        LaurentPoly r('q');
        for (const auto &[e, c] : c_) {
            r += c.shifted(a * e);
        }
        return r;
    }

    // Quotient by (q^a - t) when exact.
    std::optional<BiPoly> div_factor(int a) const
    {
        if (is_zero()) {
            return BiPoly();
        }
        if (!at_t_power(a).is_zero()) {
            return std::nullopt;
        }
        // Synthetic division by (t - q^a) from the top t-degree down.
        BiPoly quot;
        LaurentPoly carry('q');
        for (int e = t_high(); e > t_low(); --e) {
            carry = coeff(e) + carry.shifted(a);
            quot.add_term(e - 1, -carry);
        }
        return quot;
    }

    // q -> q^-1, t -> t^-1
    BiPoly inverted() const
    {
        BiPoly r;
        for (const auto &[e, c] : c_) {
            r.c_.emplace(-e, c.inverted());
        }
        return r;
    }

    // t -> t * q^k
    BiPoly t_scaled(int k) const
    {
        BiPoly r;
        for (const auto &[e, c] : c_) {
            r.c_.emplace(e, c.shifted(k * e));
        }
        return r;
    }

    // Dense polynomial in t at q = q0; t-exponents relative to t_low().
    std::vector<Rational> eval_q(const Rational &q0) const
    {
        std::vector<Rational> out(static_cast<std::size_t>(t_high() - t_low() + 1), Rational(0));
        for (const auto &[e, c] : c_) {
            out[static_cast<std::size_t>(e - t_low())] = c.eval(q0);
        }
        return out;
    }

    // Sorted (e_q, e_t, coeff) triples.
    std::vector<std::tuple<int, int, BigInt>> triples() const
    {
        std::vector<std::tuple<int, int, BigInt>> out;
        for (const auto &[et, c] : c_) {
            for (const auto &[eq, x] : c.terms()) {
                out.emplace_back(eq, et, x);
            }
        }
        std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
            return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
        });
        return out;
    }

    void add_term(int e, const LaurentPoly &c)
    {
        if (c.is_zero()) {
            return;
        }
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, c.with_var('q'));
            return;
        }
        it->second += c.with_var('q');
        if (it->second.is_zero()) {
            c_.erase(it);
        }
    }

private:
    Map c_;
};

// Rational function in (q, t) of the form
//     q^eq t^et * N(q, t) / prod_a (q^a - t)^mult_a,   a >= 1.
//
// Canonical form: N has smallest t-exponent 0 and smallest q-exponent 0, no
// factor (q^a - t) of the denominator divides N, and zero is stored with an
// empty numerator and empty denominator. Structural equality is therefore
// mathematical equality.
class BiRational
{
public:
    using Den = std::map<int, int>;

    BiRational() = default;

    BiRational(BiPoly num, Den den = {}, int eq = 0, int et = 0) // NOLINT
        : num_(std::move(num)), den_(std::move(den)), eq_(eq), et_(et)
    {
        canonicalize();
    }

    static BiRational from_q(const LaurentPoly &c) { return BiRational(BiPoly::from_q(c)); }
    static BiRational from_q(const RationalUni &c);
    static BiRational constant(const BigInt &c) { return BiRational(BiPoly::monomial(c, 0, 0)); }
    static BiRational monomial(const BigInt &c, int eq, int et) { return BiRational(BiPoly::monomial(c, eq, et)); }

    // (q^a - t)^k for any integer k.
    static BiRational factor_power(int a, int k)
    {
        if (a < 1) {
            throw unsupported_denominator("factor q^" + std::to_string(a) + " - t outside the supported family");
        }
        if (k >= 0) {
            BiPoly p = BiPoly::monomial(1, 0, 0);
            for (int i = 0; i < k; ++i) {
                p = p * BiPoly::factor(a);
            }
            return BiRational(p);
        }
        return BiRational(BiPoly::monomial(1, 0, 0), Den{{a, -k}});
    }

    bool is_zero() const { return num_.is_zero(); }
    const BiPoly &num() const { return num_; }
    const Den &den() const { return den_; }
    int unit_q() const { return eq_; }
    int unit_t() const { return et_; }

    int multiplicity(int a) const
    {
        auto it = den_.find(a);
        return it == den_.end() ? 0 : it->second;
    }

    BiRational operator-() const
    {
        BiRational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    BiRational &operator+=(const BiRational &o)
    {
        if (o.is_zero()) {
            return *this;
        }
        if (is_zero()) {
            return *this = o;
        }
        Den common = den_;
        for (const auto &[a, k] : o.den_) {
            common[a] = std::max(common[a], k);
        }
        int eq = std::min(eq_, o.eq_);
        int et = std::min(et_, o.et_);
        BiPoly sum = lifted(common, eq, et) + o.lifted(common, eq, et);
        *this = BiRational(std::move(sum), std::move(common), eq, et);
        return *this;
    }

    BiRational &operator-=(const BiRational &o) { return *this += -o; }

    BiRational &operator*=(const BiRational &o)
    {
        if (is_zero() || o.is_zero()) {
            return *this = BiRational();
        }
        Den d = den_;
        for (const auto &[a, k] : o.den_) {
            d[a] += k;
        }
        *this = BiRational(num_ * o.num_, std::move(d), eq_ + o.eq_, et_ + o.et_);
        return *this;
    }

    friend BiRational operator+(BiRational a, const BiRational &b) { return a += b; }
    friend BiRational operator-(BiRational a, const BiRational &b) { return a -= b; }
    friend BiRational operator*(BiRational a, const BiRational &b) { return a *= b; }

    friend bool operator==(const BiRational &a, const BiRational &b)
    {
        return a.eq_ == b.eq_ && a.et_ == b.et_ && a.den_ == b.den_ && a.num_ == b.num_;
    }

    // t -> t * q^k. Factor (q^a - t) becomes q^k (q^(a-k) - t).
    BiRational t_scaled(int k) const
    {
        if (is_zero()) {
            return {};
        }
        Den d;
        int total = 0;
        for (const auto &[a, mult] : den_) {
            if (a - k < 1) {
                throw unsupported_denominator("substitution t -> t*q^" + std::to_string(k) + " leaves the family");
            }
            d[a - k] = mult;
            total += mult;
        }
        return BiRational(num_.t_scaled(k), std::move(d), eq_ + k * et_ - k * total, et_);
    }

    // (q, t) -> (1/q, 1/t).
    BiRational inverted() const
    {
        if (is_zero()) {
            return {};
        }
        // 1/(q^-a - t^-1) = -q^a t / (q^a - t)
        BiPoly n = num_.inverted();
        int eq = -eq_;
        int et = -et_;
        int sign = 1;
        for (const auto &[a, mult] : den_) {
            eq += a * mult;
            et += mult;
            if (mult % 2) {
                sign = -sign;
            }
        }
        if (sign < 0) {
            n = -n;
        }
        return BiRational(std::move(n), den_, eq, et);
    }

    // Value at t = q^a; requires no factor (q^a - t) in the denominator.
    RationalUni at_t_power(int a) const
    {
        if (is_zero()) {
            return RationalUni('q');
        }
        if (multiplicity(a) > 0) {
            throw precondition_error("substitution t = q^" + std::to_string(a) + " hits a pole");
        }
        LaurentPoly n = num_.at_t_power(a).shifted(eq_ + a * et_);
        LaurentPoly d = LaurentPoly::constant(1, 'q');
        for (const auto &[b, mult] : den_) {
            d *= (LaurentPoly::monomial(1, b, 'q') - LaurentPoly::monomial(1, a, 'q')).pow(static_cast<unsigned>(mult));
        }
        return RationalUni(n, d);
    }

    // Checks a == b by clearing denominators and comparing expanded numerators.
    static bool cross_equal(const BiRational &a, const BiRational &b)
    {
        BiPoly lhs = a.num_.shifted(a.eq_, a.et_);
        BiPoly rhs = b.num_.shifted(b.eq_, b.et_);
        for (const auto &[k, mult] : b.den_) {
            for (int i = 0; i < mult; ++i) {
                lhs = lhs * BiPoly::factor(k);
            }
        }
        for (const auto &[k, mult] : a.den_) {
            for (int i = 0; i < mult; ++i) {
                rhs = rhs * BiPoly::factor(k);
            }
        }
        return lhs == rhs;
    }

    // Power series coefficients in t at q = q0, orders 0..order.
    std::vector<Rational> expand_in_t(const Rational &q0, int order) const
    {
        if (q0 < 2) {
            throw precondition_error("expand_in_t needs q0 >= 2");
        }
        std::vector<Rational> out(static_cast<std::size_t>(order + 1), Rational(0));
        if (is_zero()) {
            return out;
        }
        // Work with exponents offset by `low` so negative powers are visible.
        int low = et_ + num_.t_low();
        int len = order + 1 - std::min(low, 0);
        if (len <= 0) {
            return out;
        }
        std::vector<Rational> s(static_cast<std::size_t>(len), Rational(0));
        auto n = num_.eval_q(q0);
        Rational unit = rational_pow(q0, eq_);
        for (std::size_t i = 0; i < n.size() && i < s.size(); ++i) {
            s[i] = n[i] * unit;
        }
        for (const auto &[a, mult] : den_) {
            // multiply by 1/(q0^a - t) = q0^-a sum_k (t/q0^a)^k, mult times
            Rational inv = rational_pow(q0, -a);
            for (int r = 0; r < mult; ++r) {
                for (std::size_t i = 0; i < s.size(); ++i) {
                    s[i] *= inv;
                    if (i > 0) {
                        s[i] += s[i - 1] * inv;
                    }
                }
            }
        }
        for (int i = 0; i < len; ++i) {
            int e = low + i;
            if (e < 0) {
                if (s[static_cast<std::size_t>(i)] != 0) {
                    throw precondition_error("expand_in_t: pole at t = 0");
                }
            } else if (e <= order) {
                out[static_cast<std::size_t>(e)] = s[static_cast<std::size_t>(i)];
            }
        }
        return out;
    }

    std::string to_string() const;

private:
    BiPoly lifted(const Den &common, int eq, int et) const
    {
        BiPoly p = num_.shifted(eq_ - eq, et_ - et);
        for (const auto &[a, k] : common) {
            for (int i = multiplicity(a); i < k; ++i) {
                p = p * BiPoly::factor(a);
            }
        }
        return p;
    }

    void canonicalize()
    {
        for (auto it = den_.begin(); it != den_.end();) {
            if (it->first < 1) {
                throw unsupported_denominator("factor q^" + std::to_string(it->first) + " - t outside the supported family");
            }
            if (it->second < 0) {
                throw unsupported_denominator("negative factor multiplicity");
            }
            if (it->second == 0) {
                it = den_.erase(it);
            } else {
                ++it;
            }
        }
        if (num_.is_zero()) {
            den_.clear();
            eq_ = et_ = 0;
            return;
        }
        for (auto &[a, k] : den_) {
            while (k > 0) {
                auto q = num_.div_factor(a);
                if (!q) {
                    break;
                }
                num_ = std::move(*q);
                --k;
            }
        }
        for (auto it = den_.begin(); it != den_.end();) {
            it = it->second == 0 ? den_.erase(it) : std::next(it);
        }
        int sq = num_.q_low();
        int st = num_.t_low();
        if (sq != 0 || st != 0) {
            num_ = num_.shifted(-sq, -st);
            eq_ += sq;
            et_ += st;
        }
    }

    BiPoly num_;
    Den den_;
    int eq_ = 0;
    int et_ = 0;
};

inline BiRational BiRational::from_q(const RationalUni &c)
{
    // Denominators in q alone are outside the family.
    return from_q(c.as_laurent());
}

inline std::string BiRational::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::string s = "q^" + std::to_string(eq_) + "*t^" + std::to_string(et_) + "*(";
    bool first = true;
    for (const auto &[et, c] : num_.coeffs()) {
        if (!first) {
            s += " + ";
        }
        first = false;
        s += "(" + c.to_string() + ")*t^" + std::to_string(et);
    }
    s += ")";
    for (const auto &[a, k] : den_) {
        s += "/(q^" + std::to_string(a) + " - t)";
        if (k != 1) {
            s += "^" + std::to_string(k);
        }
    }
    return s;
}

} // namespace amz
