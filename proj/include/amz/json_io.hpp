#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrangement.hpp"
#include "birational.hpp"
#include "quiver.hpp"
#include "rational_uni.hpp"

namespace amz
{

using Json = nlohmann::json;

namespace detail
{

inline BigInt json_int(const Json &j)
{
    if (j.is_string()) {
        return parse_bigint(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return BigInt(std::to_string(j.get<long long>()));
    }
    throw parse_error("expected an integer, got " + j.dump());
}

inline int json_small(const Json &j)
{
    if (!j.is_number_integer()) {
        throw parse_error("expected a small integer, got " + j.dump());
    }
    return j.get<int>();
}

inline const Json &field(const Json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw parse_error(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

} // namespace detail

inline Json to_json(const LaurentPoly &p)
{
    Json c = Json::object();
    for (const auto &[e, x] : p.terms()) {
        c[std::to_string(e)] = x.get_str();
    }
    return Json{{"var", std::string(1, p.var())}, {"coeffs", c}};
}

inline LaurentPoly laurent_from_json(const Json &j)
{
    auto v = detail::field(j, "var").get<std::string>();
    if (v.size() != 1) {
        throw parse_error("bad variable tag \"" + v + "\"");
    }
    LaurentPoly p(v[0]);
    for (const auto &[k, x] : detail::field(j, "coeffs").items()) {
        int e = 0;
        try {
            std::size_t pos = 0;
            e = std::stoi(k, &pos);
            if (pos != k.size()) {
                throw std::invalid_argument(k);
            }
        } catch (const std::exception &) {
            throw parse_error("bad exponent key \"" + k + "\"");
        }
        p += LaurentPoly::monomial(detail::json_int(x), e, v[0]);
    }
    return p;
}

inline Json to_json(const RationalUni &r) { return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

inline RationalUni rational_from_json(const Json &j)
{
    return RationalUni(laurent_from_json(detail::field(j, "num")), laurent_from_json(detail::field(j, "den")));
}

inline Json to_json(const BiRational &x)
{
    Json num = Json::array();
    for (const auto &[eq, et, c] : x.num().triples()) {
        num.push_back(Json::array({eq, et, c.get_str()}));
    }
    Json den = Json::array();
    for (const auto &[a, k] : x.den()) {
        den.push_back(Json::array({a, k}));
    }
    return Json{{"unit", Json::array({x.unit_q(), x.unit_t()})}, {"num", num}, {"den", den}};
}

inline BiRational birational_from_json(const Json &j)
{
    const auto &unit = detail::field(j, "unit");
    if (!unit.is_array() || unit.size() != 2) {
        throw parse_error("\"unit\" must be [e_q, e_t]");
    }
    BiPoly num;
    for (const auto &t : detail::field(j, "num")) {
        if (!t.is_array() || t.size() != 3) {
            throw parse_error("numerator terms must be [e_q, e_t, coeff]");
        }
        num.add_term(detail::json_small(t[1]), LaurentPoly::monomial(detail::json_int(t[2]), detail::json_small(t[0]), 'q'));
    }
    BiRational::Den den;
    for (const auto &f : detail::field(j, "den")) {
        if (!f.is_array() || f.size() != 2) {
            throw parse_error("denominator factors must be [a, multiplicity]");
        }
        den[detail::json_small(f[0])] += detail::json_small(f[1]);
    }
    return BiRational(std::move(num), std::move(den), detail::json_small(unit[0]), detail::json_small(unit[1]));
}

inline Json to_json(const Arrangement &A)
{
    Json rows = Json::array();
    for (const auto &r : A.normals()) {
        Json row = Json::array();
        for (const auto &x : r) {
            if (x.fits_slong_p()) {
                row.push_back(x.get_si());
            } else {
                row.push_back(x.get_str());
            }
        }
        rows.push_back(row);
    }
    return Json{{"normals", rows}, {"m", A.m()}};
}

inline Arrangement arrangement_from_json(const Json &j)
{
    const auto &rows = detail::field(j, "normals");
    if (!rows.is_array()) {
        throw parse_error("\"normals\" must be an array of rows");
    }
    IntMatrix a;
    for (const auto &r : rows) {
        if (!r.is_array()) {
            throw parse_error("each normal must be an array");
        }
        IntRow row;
        for (const auto &x : r) {
            row.push_back(detail::json_int(x));
        }
        a.push_back(std::move(row));
    }
    std::size_t m = 0;
    if (j.contains("m")) {
        m = static_cast<std::size_t>(detail::json_small(j.at("m")));
    } else if (!a.empty()) {
        m = a[0].size();
    }
    return Arrangement(m, std::move(a));
}

inline Json to_json(const Quiver &g)
{
    Json e = Json::array();
    for (const auto &[s, t] : g.edges) {
        e.push_back(Json::array({s + 1, t + 1}));
    }
    return Json{{"vertices", g.vertices}, {"edges", e}};
}

inline Quiver quiver_from_json(const Json &j)
{
    int v = detail::json_small(detail::field(j, "vertices"));
    std::vector<std::pair<int, int>> edges;
    for (const auto &e : detail::field(j, "edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw parse_error("edges must be [source, target] pairs");
        }
        int s = detail::json_small(e[0]);
        int t = detail::json_small(e[1]);
        if (s < 1 || t < 1 || s > v || t > v) {
            throw parse_error("edge endpoint out of range (vertices are 1-based)");
        }
        edges.emplace_back(s - 1, t - 1);
    }
    return Quiver(v, std::move(edges));
}

inline bool is_quiver_json(const Json &j) { return j.is_object() && j.contains("vertices") && j.contains("edges"); }

inline Json parse_json_text(const std::string &text)
{
    try {
        return Json::parse(text);
    } catch (const Json::exception &e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

inline Json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw parse_error("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

} // namespace amz
