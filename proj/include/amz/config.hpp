#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <thread>

#include "errors.hpp"

namespace amz
{

struct Budget {
    std::uint64_t max_flats = 1000000;
    std::uint64_t max_ops = 1000000000;
};

struct Config {
    Budget budget;
    unsigned threads = 1;
};

inline std::uint64_t parse_count(std::string_view s)
{
    std::string t(s);
    char *end = nullptr;
    // accept 1e9 style as well as plain integers
    double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || v < 0 || v > 1.8e19) {
        throw parse_error("bad budget value '" + t + "'");
    }
    return static_cast<std::uint64_t>(v);
}

// AMZ_BUDGET is either a single number (operation budget) or a comma list of
// key=value with keys "flats" and "ops".
inline Budget parse_budget(std::string_view spec, Budget b = {})
{
    if (spec.find('=') == std::string_view::npos) {
        b.max_ops = parse_count(spec);
        return b;
    }
    while (!spec.empty()) {
        auto comma = spec.find(',');
        auto item = spec.substr(0, comma);
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw parse_error("bad AMZ_BUDGET item '" + std::string(item) + "'");
        }
        auto key = item.substr(0, eq);
        auto val = parse_count(item.substr(eq + 1));
        if (key == "flats") {
            b.max_flats = val;
        } else if (key == "ops") {
            b.max_ops = val;
        } else {
            throw parse_error("unknown AMZ_BUDGET key '" + std::string(key) + "'");
        }
    }
    return b;
}

inline Config &config()
{
    static Config c = [] {
        Config x;
        if (const char *env = std::getenv("AMZ_BUDGET")) {
            x.budget = parse_budget(env);
        }
        return x;
    }();
    return c;
}

inline void charge(std::uint64_t ops, const char *what)
{
    if (ops > config().budget.max_ops) {
        throw budget_error(std::string(what) + ": " + std::to_string(ops) + " operations exceed the budget of " +
                           std::to_string(config().budget.max_ops));
    }
}

} // namespace amz
