#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"

namespace amz
{

namespace detail
{

using Dense = std::vector<BigInt>; // ascending coefficients, trimmed

inline void trim_dense(Dense &a)
{
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

inline BigInt dense_content(const Dense &a)
{
    BigInt g = 0;
    for (const auto &c : a) {
        g = big_gcd(g, c);
    }
    return g;
}

inline void make_primitive(Dense &a)
{
    BigInt g = dense_content(a);
    if (g == 0 || g == 1) {
        return;
    }
    for (auto &c : a) {
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
}

// Pseudo remainder of a by b (deg a >= deg b, b nonzero).
inline Dense pseudo_rem(Dense a, const Dense &b)
{
    const BigInt &lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        BigInt la = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto &c : a) {
            c *= lb;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_submul(a[shift + j].get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
        }
        trim_dense(a);
        make_primitive(a);
    }
    return a;
}

// Primitive gcd in Z[x], positive leading coefficient.
inline Dense dense_gcd(Dense a, Dense b)
{
    trim_dense(a);
    trim_dense(b);
    if (a.empty()) {
        std::swap(a, b);
    }
    if (a.empty()) {
        return {};
    }
    make_primitive(a);
    make_primitive(b);
    if (a.size() < b.size()) {
        std::swap(a, b);
    }
    while (!b.empty()) {
        Dense r = pseudo_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    make_primitive(a);
    if (a.back() < 0) {
        for (auto &c : a) {
            c = -c;
        }
    }
    return a;
}

} // namespace detail

// Reduced quotient of two Laurent polynomials in one variable.
//
// Canonical form: the denominator is a polynomial with nonzero constant term
// and positive leading coefficient, coprime to the numerator in Z[x], and the
// integer contents of numerator and denominator are coprime. All monomial
// factors live in the numerator.
class RationalUni
{
public:
    explicit RationalUni(char var = 'q') : num_(var), den_(LaurentPoly::constant(1, var)) {}

    RationalUni(const LaurentPoly &p) : num_(p), den_(LaurentPoly::constant(1, p.var())) {} // NOLINT

    RationalUni(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den))
    {
        num_.check_same(den_);
        normalize();
    }

    static RationalUni constant(const BigInt &c, char var) { return RationalUni(LaurentPoly::constant(c, var)); }

    char var() const { return num_.var(); }
    const LaurentPoly &num() const { return num_; }
    const LaurentPoly &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }

    // Numerator as a Laurent polynomial; precondition is_laurent().
    LaurentPoly as_laurent() const
    {
        if (!is_laurent()) {
            throw invariant_error("rational function " + to_string() + " is not a Laurent polynomial");
        }
        return num_;
    }

    // deg(num) - deg(den); precondition: nonzero.
    int degree() const { return num_.degree() - den_.degree(); }

    Rational eval(const Rational &x) const
    {
        Rational d = den_.eval(x);
        if (d == 0) {
            throw precondition_error("evaluation at a pole of " + to_string());
        }
        return num_.eval(x) / d;
    }

    RationalUni inverse() const
    {
        if (is_zero()) {
            throw precondition_error("inverse of zero rational function");
        }
        return RationalUni(den_, num_);
    }

    RationalUni pow(int e) const
    {
        if (e < 0) {
            return inverse().pow(-e);
        }
        RationalUni r = constant(1, var());
        RationalUni b = *this;
        while (e) {
            if (e & 1) {
                r *= b;
            }
            e >>= 1;
            if (e) {
                b *= b;
            }
        }
        return r;
    }

    RationalUni operator-() const
    {
        RationalUni r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RationalUni &operator+=(const RationalUni &o)
    {
        if (o.is_zero()) {
            return *this;
        }
        if (den_ == o.den_) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ = den_ * o.den_;
        }
        normalize();
        return *this;
    }

    RationalUni &operator-=(const RationalUni &o) { return *this += -o; }

    RationalUni &operator*=(const RationalUni &o)
    {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }

    RationalUni &operator/=(const RationalUni &o) { return *this *= o.inverse(); }

    friend RationalUni operator+(RationalUni a, const RationalUni &b) { return a += b; }
    friend RationalUni operator-(RationalUni a, const RationalUni &b) { return a -= b; }
    friend RationalUni operator*(RationalUni a, const RationalUni &b) { return a *= b; }
    friend RationalUni operator/(RationalUni a, const RationalUni &b) { return a /= b; }

    friend bool operator==(const RationalUni &a, const RationalUni &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const
    {
        if (is_laurent()) {
            return num_.to_string();
        }
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

    friend std::ostream &operator<<(std::ostream &os, const RationalUni &r) { return os << r.to_string(); }

private:
    void normalize()
    {
        if (den_.is_zero()) {
            throw precondition_error("rational function with zero denominator");
        }
        char v = num_.var();
        if (num_.is_zero()) {
            den_ = LaurentPoly::constant(1, v);
            return;
        }
        int shift = num_.low_degree() - den_.low_degree();
        detail::Dense n = num_.dense();
        detail::Dense d = den_.dense();
        detail::Dense g = detail::dense_gcd(n, d);
        if (g.size() > 1) {
            auto gp = LaurentPoly::from_coeffs(v, 0, g);
            auto nq = exact_div(LaurentPoly::from_coeffs(v, 0, n), gp);
            auto dq = exact_div(LaurentPoly::from_coeffs(v, 0, d), gp);
            if (!nq || !dq) {
                throw invariant_error("polynomial gcd does not divide its inputs");
            }
            n = nq->dense();
            d = dq->dense();
        }
        BigInt c = big_gcd(detail::dense_content(n), detail::dense_content(d));
        if (d.back() < 0) {
            c = -c;
        }
        if (c != 1) {
            for (auto &x : n) {
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
            }
            for (auto &x : d) {
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
            }
        }
        num_ = LaurentPoly::from_coeffs(v, shift, std::move(n));
        den_ = LaurentPoly::from_coeffs(v, 0, std::move(d));
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

} // namespace amz
