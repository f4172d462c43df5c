#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace amz
{

// Exact Laurent polynomial in one named variable ('L', 'q', 't' or 'u').
//
// Stored densely: coefficient i of coeffs_ belongs to var^(low_ + i). The
// first and last stored coefficients are nonzero; the zero polynomial has no
// coefficients and low_ == 0.
class LaurentPoly
{
public:
    explicit LaurentPoly(char var = 'q') : var_(check_var(var)) {}

    static LaurentPoly constant(const BigInt &c, char var)
    {
        return monomial(c, 0, var);
    }

    static LaurentPoly monomial(const BigInt &c, int exp, char var)
    {
        LaurentPoly p(var);
        if (c != 0) {
            p.low_ = exp;
            p.coeffs_.push_back(c);
        }
        return p;
    }

    // Coefficients listed from exponent `low` upwards.
    static LaurentPoly from_coeffs(char var, int low, std::vector<BigInt> coeffs)
    {
        LaurentPoly p(var);
        p.low_ = low;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    // Convenience for tests and fixtures: ascending integer coefficients.
    static LaurentPoly from_ints(char var, int low, std::initializer_list<long> coeffs)
    {
        std::vector<BigInt> c;
        c.reserve(coeffs.size());
        for (long x : coeffs) {
            c.emplace_back(x);
        }
        return from_coeffs(var, low, std::move(c));
    }

    char var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1; }

    // Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    int low_degree() const { return low_; }

    // Highest exponent with a nonzero coefficient; precondition: nonzero.
    int degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<BigInt> &dense() const { return coeffs_; }

    BigInt coeff(int e) const
    {
        if (is_zero() || e < low_ || e > degree()) {
            return 0;
        }
        return coeffs_[static_cast<std::size_t>(e - low_)];
    }

    const BigInt &leading_coeff() const { return coeffs_.back(); }
    const BigInt &trailing_coeff() const { return coeffs_.front(); }

    bool is_polynomial() const { return is_zero() || low_ >= 0; }
    bool is_monomial() const { return coeffs_.size() == 1; }

    // Nonzero terms as (exponent, coefficient), ascending.
    std::vector<std::pair<int, BigInt>> terms() const
    {
        std::vector<std::pair<int, BigInt>> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] != 0) {
                out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
            }
        }
        return out;
    }

    LaurentPoly with_var(char v) const
    {
        LaurentPoly r = *this;
        r.var_ = check_var(v);
        return r;
    }

    // Multiply by var^k.
    LaurentPoly shifted(int k) const
    {
        LaurentPoly r = *this;
        if (!r.is_zero()) {
            r.low_ += k;
        }
        return r;
    }

    // var -> var^-1
    LaurentPoly inverted() const
    {
        LaurentPoly r(var_);
        if (is_zero()) {
            return r;
        }
        r.low_ = -degree();
        r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
        return r;
    }

    // var -> var^k for k >= 1
    LaurentPoly exponent_scaled(int k) const
    {
        LaurentPoly r(var_);
        if (is_zero()) {
            return r;
        }
        r.low_ = low_ * k;
        r.coeffs_.assign(static_cast<std::size_t>((degree() - low_) * k + 1), BigInt(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            r.coeffs_[i * static_cast<std::size_t>(k)] = coeffs_[i];
        }
        return r;
    }

    BigInt content() const
    {
        BigInt g = 0;
        for (const auto &c : coeffs_) {
            g = big_gcd(g, c);
        }
        return g;
    }

    Rational eval(const Rational &x) const
    {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + Rational(*it);
        }
        return acc * rational_pow(x, low_);
    }

    LaurentPoly pow(unsigned e) const
    {
        LaurentPoly r = constant(1, var_);
        LaurentPoly b = *this;
        while (e) {
            if (e & 1U) {
                r *= b;
            }
            e >>= 1;
            if (e) {
                b *= b;
            }
        }
        return r;
    }

    LaurentPoly operator-() const
    {
        LaurentPoly r = *this;
        for (auto &c : r.coeffs_) {
            c = -c;
        }
        return r;
    }

    LaurentPoly &operator+=(const LaurentPoly &o) { return add_scaled(o, 1); }
    LaurentPoly &operator-=(const LaurentPoly &o) { return add_scaled(o, -1); }

    LaurentPoly &operator*=(const LaurentPoly &o)
    {
        *this = *this * o;
        return *this;
    }

    LaurentPoly &operator*=(const BigInt &c)
    {
        if (c == 0) {
            coeffs_.clear();
            low_ = 0;
            return *this;
        }
        for (auto &x : coeffs_) {
            x *= c;
        }
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const BigInt &c) { return a *= c; }
    friend LaurentPoly operator*(const BigInt &c, LaurentPoly a) { return a *= c; }

    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
    {
        a.check_same(b);
        LaurentPoly r(a.var_);
        if (a.is_zero() || b.is_zero()) {
            return r;
        }
        r.low_ = a.low_ + b.low_;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
            }
        }
        r.trim();
        return r;
    }

    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b)
    {
        return a.var_ == b.var_ && a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }

    // Human readable, highest power first, e.g. "q^2 + 4*q + 1".
    std::string to_string() const
    {
        if (is_zero()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (int e = degree(); e >= low_; --e) {
            BigInt c = coeff(e);
            if (c == 0) {
                continue;
            }
            BigInt a = abs(c);
            if (first) {
                if (c < 0) {
                    os << '-';
                }
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (e == 0) {
                os << a.get_str();
                continue;
            }
            if (a != 1) {
                os << a.get_str() << '*';
            }
            os << var_;
            if (e != 1) {
                os << '^' << e;
            }
        }
        return os.str();
    }

    friend std::ostream &operator<<(std::ostream &os, const LaurentPoly &p) { return os << p.to_string(); }

    void check_same(const LaurentPoly &o) const
    {
        if (var_ != o.var_) {
            throw precondition_error(std::string("variable mismatch: ") + var_ + " vs " + o.var_);
        }
    }

private:
    static char check_var(char v)
    {
        if (v != 'L' && v != 'q' && v != 't' && v != 'u' && v != 'X') {
            throw precondition_error(std::string("unsupported variable tag '") + v + "'");
        }
        return v;
    }

    LaurentPoly &add_scaled(const LaurentPoly &o, int sign)
    {
        check_same(o);
        if (o.is_zero()) {
            return *this;
        }
        if (is_zero()) {
            *this = o;
            if (sign < 0) {
                *this = -*this;
            }
            return *this;
        }
        int lo = std::min(low_, o.low_);
        int hi = std::max(degree(), o.degree());
        std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            c[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            auto &slot = c[static_cast<std::size_t>(o.low_ - lo) + i];
            if (sign > 0) {
                slot += o.coeffs_[i];
            } else {
                slot -= o.coeffs_[i];
            }
        }
        low_ = lo;
        coeffs_ = std::move(c);
        trim();
        return *this;
    }

    void trim()
    {
        std::size_t first = 0;
        while (first < coeffs_.size() && coeffs_[first] == 0) {
            ++first;
        }
        if (first == coeffs_.size()) {
            coeffs_.clear();
            low_ = 0;
            return;
        }
        std::size_t last = coeffs_.size();
        while (coeffs_[last - 1] == 0) {
            --last;
        }
        if (first != 0 || last != coeffs_.size()) {
            coeffs_ = std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                          coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
        }
        low_ += static_cast<int>(first);
    }

    char var_;
    int low_ = 0;
    std::vector<BigInt> coeffs_;
};

// The "variable" x = var^1.
inline LaurentPoly var_poly(char var) { return LaurentPoly::monomial(1, 1, var); }

// Returns c with a = b*c in Z[x, x^-1], or nullopt when b does not divide a.
inline std::optional<LaurentPoly> exact_div(const LaurentPoly &a, const LaurentPoly &b)
{
    a.check_same(b);
    if (b.is_zero()) {
        throw precondition_error("exact_div: division by the zero polynomial");
    }
    if (a.is_zero()) {
        return LaurentPoly(a.var());
    }
    // Normalize both to polynomials with nonzero constant term; the monomial
    // parts are units of the Laurent ring.
    const auto &num = a.dense();
    const auto &den = b.dense();
    if (den.size() > num.size()) {
        return std::nullopt;
    }
    std::vector<BigInt> rem = num;
    std::vector<BigInt> quot(num.size() - den.size() + 1, BigInt(0));
    const BigInt &lead = den.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigInt &top = rem[k + den.size() - 1];
        if (top == 0) {
            continue;
        }
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
            return std::nullopt;
        }
        BigInt f = top / lead;
        quot[k] = f;
        for (std::size_t j = 0; j < den.size(); ++j) {
            mpz_submul(rem[k + j].get_mpz_t(), f.get_mpz_t(), den[j].get_mpz_t());
        }
    }
    for (const auto &r : rem) {
        if (r != 0) {
            return std::nullopt;
        }
    }
    return LaurentPoly::from_coeffs(a.var(), a.low_degree() - b.low_degree(), std::move(quot));
}

// Palindromicity of a genuine nonzero polynomial p: returns (p(x) == x^d p(1/x), d)
// with d the actual degree.
inline std::pair<bool, int> palindromic_check(const LaurentPoly &p)
{
    if (p.is_zero()) {
        throw precondition_error("palindromic_check: zero polynomial");
    }
    if (!p.is_polynomial()) {
        throw precondition_error("palindromic_check: negative exponents present");
    }
    int d = p.degree();
    for (int e = 0; e <= d; ++e) {
        if (p.coeff(e) != p.coeff(d - e)) {
            return {false, d};
        }
    }
    return {true, d};
}

} // namespace amz
