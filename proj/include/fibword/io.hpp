#pragma once

// CSV and JSON emitters for curves and tables.

#include "catalan.hpp"
#include "density.hpp"
#include "exact.hpp"
#include "fuzzy.hpp"
#include "squarefree.hpp"
#include "words.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fibword::io {

/// Shortest decimal that round-trips.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

/// Integers within int64 become JSON numbers; larger ones stay exact as decimal strings.
inline nlohmann::ordered_json exact_integer_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline std::string curve_csv(const std::vector<DensitySample>& samples) {
    std::ostringstream out;
    out << "n,value\n";
    for (const auto& s : samples) out << s.n << ',' << format_double(s.value_real) << '\n';
    return out.str();
}

inline nlohmann::ordered_json curve_json(const std::vector<DensitySample>& samples) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : samples) {
        nlohmann::ordered_json row;
        row["n"] = s.n;
        row["numerator"] = exact_integer_json(boost::multiprecision::numerator(s.value));
        row["denominator"] = exact_integer_json(boost::multiprecision::denominator(s.value));
        row["value"] = s.value_real;
        arr.push_back(std::move(row));
    }
    return arr;
}

/// Occurrence count implied by a density sample (value * n).
inline BigInt sample_count(const DensitySample& s) {
    const Rational c = s.value * Rational(s.n);
    return boost::multiprecision::numerator(c);
}

inline std::string pal_density_csv(const std::map<Word, DensitySample>& table) {
    std::ostringstream out;
    out << "palindrome,count,n,density\n";
    for (const auto& [p, s] : table)
        out << p.str() << ',' << sample_count(s) << ',' << s.n << ',' << format_double(s.value_real) << '\n';
    return out.str();
}

inline std::string brandenburg_csv(const std::vector<BoundRow>& rows) {
    std::ostringstream out;
    out << "n,s_n,lower,upper,lower_holds,upper_holds\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.s_n << ',' << format_double(r.lower) << ',' << format_double(r.upper) << ','
            << (r.lower_holds ? "true" : "false") << ',' << (r.upper_holds ? "true" : "false") << '\n';
    }
    return out.str();
}

inline std::string catalan_csv(const std::vector<CatalanRecord>& records) {
    std::ostringstream out;
    out << "n,c_n,table_expr,g_n\n";
    for (const auto& r : records)
        out << r.n << ',' << r.c_n << ',' << to_string(r.table_expr) << ',' << to_string(r.g_n) << '\n';
    return out.str();
}

inline nlohmann::ordered_json fuzzy_json(const FuzzyWord& fw) {
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < fw.size(); ++i) {
        nlohmann::ordered_json e;
        e["symbol"] = std::string(1, fw.symbols()[i]);
        e["membership"] = fw.memberships()[i];
        arr.push_back(std::move(e));
    }
    return arr;
}

}  // namespace fibword::io
