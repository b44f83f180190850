#pragma once

#include "exact.hpp"
#include "words.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace fibword {

/// Golden-ratio constants at double precision.
struct GoldenConstants {
    static constexpr double phi = std::numbers::phi;
    static constexpr double psi = 1.0 - phi;
    static constexpr double sqrt5 = 2.0 * phi - 1.0;
};

/// Exact F_n with F_1 = F_2 = 1, by fast doubling.
inline BigInt fib(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("fib: index starts at 1 (F_1 = F_2 = 1)");
    BigInt a = 0, b = 1;  // (F_k, F_{k+1}) with k = 0
    for (int bit = 63; bit >= 0; --bit) {
        BigInt c = a * (2 * b - a);  // F_{2k}
        BigInt d = a * a + b * b;    // F_{2k+1}
        if ((n >> bit) & 1U) {
            a = d;
            b = c + d;
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    }
    return a;
}

/// Largest index whose Binet value still rounds to the exact F_n in double precision.
inline constexpr std::uint64_t kBinetMaxIndex = 70;

inline double fib_binet(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("fib_binet: index starts at 1");
    if (n > kBinetMaxIndex) throw std::domain_error("fib_binet: n > 70 exceeds exact double representation of F_n");
    const double nd = static_cast<double>(n);
    return (std::pow(GoldenConstants::phi, nd) - std::pow(GoldenConstants::psi, nd)) / GoldenConstants::sqrt5;
}

/// F_{k,n}: F_{k,0} = 0, F_{k,1} = 1, F_{k,n+1} = k F_{k,n} + F_{k,n-1}.
inline BigInt k_fib(std::uint64_t k, std::uint64_t n) {
    if (k == 0) throw std::invalid_argument("k_fib: k must be positive");
    BigInt prev = 0, cur = 1;
    if (n == 0) return prev;
    for (std::uint64_t i = 1; i < n; ++i) {
        BigInt next = k * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// F_{k,n} / F_{k,n-1}; tends to the positive root of a^2 - k a - 1 = 0.
inline double k_fib_ratio(std::uint64_t k, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("k_fib_ratio: n must be at least 2");
    return ratio_to_double(k_fib(k, n), k_fib(k, n - 1));
}

/// Seed pair (f_1, f_2) for the concatenation recurrence f_n = f_{n-1} f_{n-2}.
struct FibSeeds {
    Word first;
    Word second;

    FibSeeds(Word f1, Word f2) : first(std::move(f1)), second(std::move(f2)) {
        if (first.empty() || second.empty()) throw std::invalid_argument("Fibonacci seeds must be nonempty");
        detail::require_shared_alphabet(first, second);
    }

    /// f_1 = 1, f_2 = 0.
    static FibSeeds standard() { return {Word(Alphabet::binary(), "1"), Word(Alphabet::binary(), "0")}; }
    /// f_1 = 1, f_2 = 10, as used by the density-reproduction program.
    static FibSeeds program() { return {Word(Alphabet::binary(), "1"), Word(Alphabet::binary(), "10")}; }
};

inline Word fib_word(std::uint64_t n, const FibSeeds& seeds = FibSeeds::standard()) {
    if (n == 0) throw std::invalid_argument("fib_word: index starts at 1");
    if (n == 1) return seeds.first;
    if (n == 2) return seeds.second;
    // Check the final length before allocating anything.
    std::uint64_t len_prev = seeds.first.size(), len_cur = seeds.second.size();
    for (std::uint64_t i = 3; i <= n; ++i) {
        std::uint64_t next = len_cur + len_prev;
        if (next > kMaxWordLength) throw GuardError("fib_word: result exceeds 2^31 symbols");
        len_prev = len_cur;
        len_cur = next;
    }
    std::string prev = seeds.first.str(), cur = seeds.second.str();
    for (std::uint64_t i = 3; i <= n; ++i) {
        std::string next;
        next.reserve(cur.size() + prev.size());
        next.append(cur).append(prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return Word(seeds.first.alphabet(), std::move(cur));
}

/// First `len` symbols of the fixed point of 0 -> 01, 1 -> 0.
inline Word infinite_prefix(std::uint64_t len) {
    if (len > kMaxWordLength) throw GuardError("infinite_prefix: length exceeds 2^31 symbols");
    // s_{k+1} = s_k s_{k-1} with s_0 = 0, s_1 = 01 are the iterates sigma^k(0).
    std::string older = "0", cur = "01";
    while (cur.size() < len) {
        std::string next;
        next.reserve(cur.size() + older.size());
        next.append(cur).append(older);
        older = std::move(cur);
        cur = std::move(next);
    }
    cur.resize(static_cast<std::size_t>(len));
    return Word(Alphabet::binary(), std::move(cur));
}

/// Symbol i (0-indexed) of the infinite Fibonacci word, located by descending through sigma-images.
inline Symbol nth_symbol(std::uint64_t i) {
    // lengths[k] = |sigma^k(0)|
    std::array<std::uint64_t, 94> lengths{};
    lengths[0] = 1;
    lengths[1] = 2;
    std::size_t k = 1;
    while (lengths[k] <= i) {
        if (k + 1 >= lengths.size()) throw GuardError("nth_symbol: index beyond 64-bit Fibonacci lengths");
        ++k;
        lengths[k] = lengths[k - 1] + lengths[k - 2];
    }
    // sigma^k(0) = sigma^{k-1}(0) sigma^{k-2}(0)
    while (k >= 2) {
        if (i < lengths[k - 1]) {
            k -= 1;
        } else {
            i -= lengths[k - 1];
            k -= 2;
        }
    }
    if (k == 0) return '0';
    return i == 0 ? '0' : '1';
}

}  // namespace fibword
