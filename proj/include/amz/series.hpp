#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "rational_uni.hpp"

namespace amz
{

using Exponent = std::vector<int>;

inline int total_degree(const Exponent &v) { return std::accumulate(v.begin(), v.end(), 0); }

// All exponent vectors in N^r with |v| <= D, ordered by total degree, then
// lexicographically.
inline std::vector<Exponent> graded_exponents(int r, int D)
{
    std::vector<Exponent> out;
    Exponent v(static_cast<std::size_t>(r), 0);
    for (int deg = 0; deg <= D; ++deg) {
        // compositions of deg into r parts, lexicographically decreasing in v[0]
        std::vector<Exponent> level;
        auto rec = [&](auto &&self, int i, int left) -> void {
            if (i == r - 1) {
                v[static_cast<std::size_t>(i)] = left;
                level.push_back(v);
                return;
            }
            for (int x = left; x >= 0; --x) {
                v[static_cast<std::size_t>(i)] = x;
                self(self, i + 1, left - x);
            }
        };
        if (r == 0) {
            if (deg == 0) {
                out.emplace_back();
            }
            continue;
        }
        rec(rec, 0, deg);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

// Truncated power series in r commuting variables T_1..T_r with coefficients
// in the field of rational functions of one variable.
class MultiSeries
{
public:
    using Map = std::map<Exponent, RationalUni>;

    MultiSeries(int r, int D, char var = 'L') : r_(r), D_(D), var_(var)
    {
        if (r < 0 || D < 0) {
            throw precondition_error("MultiSeries needs r >= 0 and D >= 0");
        }
    }

    static MultiSeries one(int r, int D, char var = 'L')
    {
        MultiSeries s(r, D, var);
        s.set(Exponent(static_cast<std::size_t>(r), 0), RationalUni::constant(1, var));
        return s;
    }

    int vars() const { return r_; }
    int bound() const { return D_; }
    char var() const { return var_; }
    const Map &coeffs() const { return c_; }

    RationalUni coeff(const Exponent &v) const
    {
        auto it = c_.find(v);
        return it == c_.end() ? RationalUni(var_) : it->second;
    }

    void set(const Exponent &v, const RationalUni &x)
    {
        check(v);
        if (total_degree(v) > D_) {
            return;
        }
        if (x.is_zero()) {
            c_.erase(v);
        } else {
            c_.insert_or_assign(v, x);
        }
    }

    void add(const Exponent &v, const RationalUni &x)
    {
        check(v);
        if (total_degree(v) > D_ || x.is_zero()) {
            return;
        }
        auto it = c_.find(v);
        if (it == c_.end()) {
            c_.emplace(v, x);
            return;
        }
        it->second += x;
        if (it->second.is_zero()) {
            c_.erase(it);
        }
    }

    MultiSeries &operator+=(const MultiSeries &o)
    {
        same_shape(o);
        for (const auto &[v, x] : o.c_) {
            add(v, x);
        }
        return *this;
    }

    friend MultiSeries operator+(MultiSeries a, const MultiSeries &b) { return a += b; }

    friend MultiSeries operator*(const MultiSeries &a, const MultiSeries &b)
    {
        a.same_shape(b);
        MultiSeries r(a.r_, a.D_, a.var_);
        for (const auto &[u, x] : a.c_) {
            int du = total_degree(u);
            for (const auto &[v, y] : b.c_) {
                if (du + total_degree(v) > a.D_) {
                    continue;
                }
                Exponent w = u;
                for (std::size_t i = 0; i < w.size(); ++i) {
                    w[i] += v[i];
                }
                r.add(w, x * y);
            }
        }
        return r;
    }

    friend bool operator==(const MultiSeries &a, const MultiSeries &b)
    {
        return a.r_ == b.r_ && a.D_ == b.D_ && a.c_ == b.c_;
    }

    void same_shape(const MultiSeries &o) const
    {
        if (r_ != o.r_ || D_ != o.D_ || var_ != o.var_) {
            throw precondition_error("series shape mismatch");
        }
    }

private:
    void check(const Exponent &v) const
    {
        if (static_cast<int>(v.size()) != r_) {
            throw precondition_error("exponent vector of wrong length");
        }
        for (int x : v) {
            if (x < 0) {
                throw precondition_error("negative exponent in power series");
            }
        }
    }

    int r_;
    int D_;
    char var_;
    Map c_;
};

// num / den up to the common truncation bound.
inline MultiSeries series_div(const MultiSeries &num, const MultiSeries &den)
{
    num.same_shape(den);
    Exponent zero(static_cast<std::size_t>(num.vars()), 0);
    RationalUni c0 = den.coeff(zero);
    if (c0.is_zero()) {
        throw precondition_error("series_div: denominator has zero constant term");
    }
    RationalUni inv0 = c0.inverse();
    MultiSeries out(num.vars(), num.bound(), num.var());
    for (const auto &v : graded_exponents(num.vars(), num.bound())) {
        RationalUni acc = num.coeff(v);
        for (const auto &[u, x] : out.coeffs()) {
            bool below = true;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (u[i] > v[i]) {
                    below = false;
                    break;
                }
            }
            if (!below) {
                continue;
            }
            Exponent w = v;
            for (std::size_t i = 0; i < w.size(); ++i) {
                w[i] -= u[i];
            }
            auto it = den.coeffs().find(w);
            if (it != den.coeffs().end()) {
                acc -= x * it->second;
            }
        }
        out.set(v, acc * inv0);
    }
    return out;
}

} // namespace amz
