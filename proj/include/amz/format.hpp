#pragma once

#include <map>
#include <string>
#include <vector>

#include "birational.hpp"

namespace amz
{

enum class Style { plain, latex };

namespace detail
{

inline std::string power(const std::string &base, const std::string &exp, Style st)
{
    if (exp == "1") {
        return base;
    }
    return st == Style::latex ? base + "^{" + exp + "}" : base + "^" + (exp.size() > 1 ? "(" + exp + ")" : exp);
}

inline std::string q_pow_s(int k, Style st)
{
    if (k == 0) {
        return "";
    }
    std::string e = k == 1 ? "s" : k == -1 ? "-s" : std::to_string(k) + "s";
    return power("q", e, st);
}

} // namespace detail

// Highest power first: "q^{6} + 2q^{5} - 2q^{3}" or "q^6 + 2*q^5 - 2*q^3".
inline std::string format_poly(const LaurentPoly &p, Style st)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    auto terms = p.terms();
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto &[e, c] = *it;
        BigInt a = abs(c);
        if (first) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (e == 0) {
            out += a.get_str();
            continue;
        }
        if (a != 1) {
            out += a.get_str() + (st == Style::plain ? "*" : "");
        }
        out += detail::power(std::string(1, p.var()), std::to_string(e), st);
    }
    return out;
}

inline std::string format_rational(const RationalUni &r, Style st)
{
    if (r.is_laurent()) {
        return format_poly(r.num(), st);
    }
    if (st == Style::latex) {
        return "\\frac{" + format_poly(r.num(), st) + "}{" + format_poly(r.den(), st) + "}";
    }
    return "(" + format_poly(r.num(), st) + ")/(" + format_poly(r.den(), st) + ")";
}

// Rendering in the variable q^s with t = q^{-s}:
//   (q-1)^r q^{e s} [ q^{k s}(c_k(q)) + ... + c_0(q) ] / prod (q^{s+a} - 1)^mult
inline std::string format_zeta(const BiRational &z, Style st)
{
    if (z.is_zero()) {
        return "0";
    }
    int M = 0;
    for (const auto &[a, k] : z.den()) {
        M += k;
    }
    // coefficient of q^{K s}: t^j contributes K = M - et - j
    std::map<int, LaurentPoly> groups;
    for (const auto &[j, c] : z.num().coeffs()) {
        groups.emplace(M - z.unit_t() - j, c.shifted(z.unit_q()));
    }
    LaurentPoly qm1 = var_poly('q') - LaurentPoly::constant(1, 'q');
    int r = 0;
    while (true) {
        std::map<int, LaurentPoly> next;
        bool ok = true;
        for (const auto &[k, c] : groups) {
            auto d = exact_div(c, qm1);
            if (!d) {
                ok = false;
                break;
            }
            next.emplace(k, *d);
        }
        if (!ok) {
            break;
        }
        groups = std::move(next);
        ++r;
    }
    int kmin = groups.begin()->first;
    std::string prefix;
    if (r > 0) {
        prefix += detail::power("(q - 1)", std::to_string(r), st);
    }
    std::string qs = detail::q_pow_s(kmin, st);
    if (!qs.empty()) {
        prefix += (prefix.empty() || st == Style::latex ? "" : "*") + qs;
    }
    std::string body;
    bool first = true;
    for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
        const auto &[k, c] = *it;
        std::string cs = format_poly(c, st);
        std::string term;
        std::string qk = detail::q_pow_s(k - kmin, st);
        if (qk.empty()) {
            term = cs;
        } else {
            std::string open = st == Style::latex ? "\\left(" : "(";
            std::string close = st == Style::latex ? "\\right)" : ")";
            term = qk + (st == Style::plain ? "*" : "") + open + cs + close;
        }
        if (!first && term[0] == '-') {
            body += " - " + term.substr(1);
        } else {
            body += (first ? "" : " + ") + term;
        }
        first = false;
    }
    std::string num;
    if (groups.size() == 1 && !prefix.empty()) {
        std::string only = groups.begin()->second.is_one() ? "" : body;
        num = prefix + (only.empty() ? "" : (st == Style::latex ? "\\left(" + only + "\\right)" : "*(" + only + ")"));
    } else if (prefix.empty()) {
        num = body;
    } else {
        num = prefix + (st == Style::latex ? "\\left(" + body + "\\right)" : "*(" + body + ")");
    }
    std::string den;
    for (const auto &[a, k] : z.den()) {
        std::string f = "(q^" + std::string(st == Style::latex ? "{s+" + std::to_string(a) + "}" : "(s+" + std::to_string(a) + ")") + " - 1)";
        if (!den.empty() && st == Style::plain) {
            den += "*";
        }
        den += detail::power(f, std::to_string(k), st);
    }
    if (den.empty()) {
        return num;
    }
    if (st == Style::latex) {
        return "\\frac{" + num + "}{" + den + "}";
    }
    return "(" + num + ")/(" + den + ")";
}

} // namespace amz
