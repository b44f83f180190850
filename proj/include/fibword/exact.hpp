#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibword {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den rounded to double without overflowing on very large operands.
inline double ratio_to_double(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("division by zero");
    if (num == 0) return 0.0;
    const bool negative = (num < 0) != (den < 0);
    num = abs(num);
    den = abs(den);
    // Scale so the integer quotient carries ~64 significant bits.
    const long shift = 64 - (static_cast<long>(msb(num)) - static_cast<long>(msb(den)));
    BigInt q = shift >= 0 ? BigInt((num << shift) / den) : BigInt(num / (den << -shift));
    double r = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
    return negative ? -r : r;
}

inline double to_double(const Rational& r) {
    return ratio_to_double(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

/// "p/q", or "p" for integers.
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;  // exact: acc is C(n-k+i, i) after this step
    }
    return acc;
}

inline BigInt factorial(std::uint64_t n) {
    BigInt acc = 1;
    for (std::uint64_t i = 2; i <= n; ++i) acc *= i;
    return acc;
}

}  // namespace fibword
