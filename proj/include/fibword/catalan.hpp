#pragma once

#include "exact.hpp"
#include "fibonacci.hpp"
#include "words.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fibword {

/// C_n = binom(2n, n) / (n + 1)
inline BigInt catalan(std::uint64_t n) { return binomial(2 * n, n) / (n + 1); }

inline constexpr std::uint64_t kMaxCatalanWordIndex = 30;  // bound on C_n for word construction

/// fib_word(C_n) under the standard seeds; defined for n >= 3.
inline Word fib_word_at_catalan(std::uint64_t n) {
    if (n < 3) throw std::invalid_argument("fib_word_at_catalan: n must be at least 3");
    const BigInt c = catalan(n);
    if (c > kMaxCatalanWordIndex) throw GuardError("fib_word_at_catalan: C_n exceeds 30");
    return fib_word(c.convert_to<std::uint64_t>());
}

/// F(C_n + 1) / F(C_n) for Fibonacci numbers at Catalan indices.
inline double catalan_fib_ratio(std::uint64_t n) {
    if (n < 3 || n > 12) throw std::invalid_argument("catalan_fib_ratio: n must be in [3, 12]");
    const auto c = catalan(n).convert_to<std::uint64_t>();
    return ratio_to_double(fib(c + 1), fib(c));
}

/// ((n+1)(n!)^2 + (2n)!) / (2n)!  =  1 + (n+1)/binom(2n, n)
inline Rational limit_function_g(std::uint64_t n) {
    if (n < 1 || n > 200) throw std::invalid_argument("limit_function_g: n must be in [1, 200]");
    const BigInt f = factorial(n);
    const BigInt f2 = factorial(2 * n);
    return Rational(BigInt((n + 1) * f * f + f2), f2);
}

/// C_n - 1
inline Rational table_expr(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("table_expr: n must be at least 1");
    return Rational(catalan(n) - 1);
}

struct CatalanRecord {
    std::uint64_t n = 0;
    BigInt c_n;
    Rational table_expr;
    Rational g_n;
};

inline CatalanRecord catalan_record(std::uint64_t n) {
    return {n, catalan(n), table_expr(n), limit_function_g(n)};
}

inline std::vector<CatalanRecord> catalan_records(std::uint64_t n_max) {
    std::vector<CatalanRecord> out;
    for (std::uint64_t n = 1; n <= n_max; ++n) out.push_back(catalan_record(n));
    return out;
}

}  // namespace fibword
