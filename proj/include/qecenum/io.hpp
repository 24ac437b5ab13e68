#pragma once

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "qecenum/enumerators.hpp"
#include "qecenum/metrics.hpp"
#include "qecenum/monte_carlo.hpp"

namespace qecenum {

inline long long to_int64(const BigInt& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("value does not fit in a 64-bit JSON number: " + v.str());
    return v.convert_to<long long>();
}

inline nlohmann::json rational_json(const Rational& r) {
    return {{"num", to_int64(boost::multiprecision::numerator(r))},
            {"den", to_int64(boost::multiprecision::denominator(r))}};
}

inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// CSV table of enumerators by weight: m, A_m, B_m, A'_m, B'_m.
inline std::string enums_csv(const EnumeratorSet& e) {
    std::string out = "m,A_m,B_m,A'_m,B'_m\n";
    for (int m = 0; m <= e.n; ++m) {
        out += std::to_string(m) + ",";
        out += std::to_string(e.a.counts[static_cast<size_t>(m)]) + ",";
        out += std::to_string(e.b.counts[static_cast<size_t>(m)]) + ",";
        out += fraction_string(e.a_rains[static_cast<size_t>(m)]) + ",";
        out += fraction_string(e.b_rains[static_cast<size_t>(m)]) + "\n";
    }
    return out;
}

inline nlohmann::json enums_json(const EnumeratorSet& e) {
    nlohmann::json rows = nlohmann::json::array();
    for (int m = 0; m <= e.n; ++m) {
        rows.push_back({{"m", m},
                        {"A", e.a.counts[static_cast<size_t>(m)]},
                        {"B", e.b.counts[static_cast<size_t>(m)]},
                        {"A_prime", rational_json(e.a_rains[static_cast<size_t>(m)])},
                        {"B_prime", rational_json(e.b_rains[static_cast<size_t>(m)])}});
    }
    return rows;
}

inline std::string curve_csv(const std::vector<CurvePoint>& curve) {
    std::string out = "p,Td,Fd,Fc,FailD,FailC\n";
    for (const auto& pt : curve) {
        out += format_double(pt.p) + "," + format_double(pt.td) + "," + format_double(pt.fd) + "," +
               format_double(pt.fc) + "," + format_double(pt.fail_d) + "," + format_double(pt.fail_c) +
               "\n";
    }
    return out;
}

inline nlohmann::json curve_json(const std::vector<CurvePoint>& curve) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& pt : curve)
        rows.push_back({{"p", pt.p},
                        {"Td", pt.td},
                        {"Fd", pt.fd},
                        {"Fc", pt.fc},
                        {"FailD", pt.fail_d},
                        {"FailC", pt.fail_c}});
    return rows;
}

inline std::string rank_table(const std::vector<RankEntry>& entries) {
    size_t name_width = 4;
    for (const auto& e : entries) name_width = std::max(name_width, e.name.size());
    std::string out;
    for (size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        char head[16];
        std::snprintf(head, sizeof head, "%2zu  ", i + 1);
        out += head;
        out += e.name;
        out += std::string(name_width - e.name.size() + 2, ' ');
        out += std::to_string(e.d) + "  " + fraction_string(e.c);
        if (e.tied_with_prev) out += "  (tie)";
        out += "\n";
    }
    return out;
}

inline nlohmann::json rank_json(const std::vector<RankEntry>& entries) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : entries) {
        rows.push_back({{"name", e.name},
                        {"d", e.d},
                        {"c_num", to_int64(boost::multiprecision::numerator(e.c))},
                        {"c_den", to_int64(boost::multiprecision::denominator(e.c))},
                        {"tie", e.tied_with_prev}});
    }
    return rows;
}

inline nlohmann::json mc_report_json(const McReport& r) {
    return {{"estimate", r.estimate}, {"stderr", r.std_error}, {"samples", r.samples},
            {"seed", r.seed},         {"mode", r.mode},        {"arg", r.arg}};
}

}  // namespace qecenum
