#pragma once

#include "exact.hpp"
#include "words.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibword {

/// True iff w has no factor xx with x nonempty. O(|w|^2): for each period p,
/// a square exists iff some run of p consecutive matches w[i] == w[i+p] occurs.
inline bool is_square_free(const Word& w) {
    const std::string& s = w.str();
    const std::size_t n = s.size();
    for (std::size_t p = 1; 2 * p <= n; ++p) {
        std::size_t run = 0;
        for (std::size_t i = 0; i + p < n; ++i) {
            run = s[i] == s[i + p] ? run + 1 : 0;
            if (run >= p) return false;
        }
    }
    return true;
}

inline constexpr std::size_t kMaxSquareFreeLength = 20;

namespace detail {

inline Alphabet square_free_alphabet(int alphabet_size) {
    if (alphabet_size == 2) return Alphabet::binary_ab();
    if (alphabet_size == 3) return Alphabet::ternary();
    throw std::invalid_argument("square-free enumeration supports alphabets of size 2 or 3");
}

// Only squares ending at the last symbol can be new.
inline bool has_square_suffix(const std::string& s) {
    const std::size_t n = s.size();
    for (std::size_t p = 1; 2 * p <= n; ++p) {
        if (s.compare(n - p, p, s, n - 2 * p, p) == 0) return true;
    }
    return false;
}

template <typename Visit>
void extend_square_free(std::string& prefix, std::size_t target, const std::string& letters, Visit& visit) {
    if (prefix.size() == target) {
        visit(prefix);
        return;
    }
    for (char c : letters) {
        prefix.push_back(c);
        if (!has_square_suffix(prefix)) extend_square_free(prefix, target, letters, visit);
        prefix.pop_back();
    }
}

}  // namespace detail

struct SquareFreeEnumeration {
    std::vector<Word> words;  // lexicographic
    std::uint64_t count = 0;  // s(n)
};

/// All square-free words of length exactly n over {a,b} or {a,b,c}.
inline SquareFreeEnumeration enumerate_square_free(int alphabet_size, std::size_t n) {
    const Alphabet alphabet = detail::square_free_alphabet(alphabet_size);
    if (n > kMaxSquareFreeLength) throw GuardError("enumerate_square_free: n > 20");
    SquareFreeEnumeration out;
    std::string prefix;
    auto visit = [&](const std::string& s) { out.words.emplace_back(alphabet, s); };
    detail::extend_square_free(prefix, n, alphabet.symbols(), visit);
    out.count = out.words.size();
    return out;
}

/// s(n) without materialising the words.
inline std::uint64_t count_square_free(int alphabet_size, std::size_t n) {
    const Alphabet alphabet = detail::square_free_alphabet(alphabet_size);
    if (n > kMaxSquareFreeLength) throw GuardError("count_square_free: n > 20");
    std::uint64_t count = 0;
    std::string prefix;
    auto visit = [&](const std::string&) { ++count; };
    detail::extend_square_free(prefix, n, alphabet.symbols(), visit);
    return count;
}

/// One row of the ternary growth-bound table 6*1.032^n <= s(n) <= 6*1.379^n.
struct BoundRow {
    std::uint64_t n = 0;
    BigInt s_n;
    double lower = 0.0;
    double upper = 0.0;
    bool lower_holds = false;
    bool upper_holds = false;
};

/// Reports the bounds for n = 1..n_max against enumerated ternary counts; never asserts them.
inline std::vector<BoundRow> brandenburg_table(std::uint64_t n_max) {
    if (n_max > kMaxSquareFreeLength) throw GuardError("brandenburg_table: n_max > 20");
    std::vector<BoundRow> rows;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        BoundRow row;
        row.n = n;
        row.s_n = count_square_free(3, n);
        row.lower = 6.0 * std::pow(1.032, static_cast<double>(n));
        row.upper = 6.0 * std::pow(1.379, static_cast<double>(n));
        const double s = row.s_n.convert_to<double>();
        row.lower_holds = row.lower <= s;
        row.upper_holds = s <= row.upper;
        rows.push_back(std::move(row));
    }
    return rows;
}

inline constexpr std::uint64_t kMaxThueMorseLength = std::uint64_t{1} << 20;

/// Prefix of the fixed point of 0 -> 01, 1 -> 10; symbol i is the parity of popcount(i).
inline Word thue_morse_prefix(std::uint64_t len) {
    if (len > kMaxThueMorseLength) throw GuardError("thue_morse_prefix: length exceeds 2^20");
    std::string s(static_cast<std::size_t>(len), '0');
    for (std::uint64_t i = 0; i < len; ++i) s[i] = (std::popcount(i) & 1) ? '1' : '0';
    return Word(Alphabet::binary(), std::move(s));
}

/// Inverse of a -> abb, b -> ab, c -> a by greedy longest-match factorisation.
inline Word delta_decode(const Word& x) {
    if (!(x.alphabet() == Alphabet::binary_ab())) throw std::invalid_argument("delta_decode: input must be over {a,b}");
    const std::string& s = x.str();
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != 'a') throw std::invalid_argument("delta_decode: no factorisation at position " + std::to_string(i) + " (expected 'a')");
        std::size_t bs = 0;
        while (i + 1 + bs < s.size() && s[i + 1 + bs] == 'b' && bs < 2) ++bs;
        out.push_back(bs == 2 ? 'a' : (bs == 1 ? 'b' : 'c'));
        i += 1 + bs;
    }
    return Word(Alphabet::ternary(), std::move(out));
}

/// Number of factorisations of x over {a, ab, abb}, by exhaustive dynamic programming.
inline std::uint64_t delta_factorization_count(const Word& x) {
    const std::string& s = x.str();
    const std::size_t n = s.size();
    std::vector<std::uint64_t> ways(n + 1, 0);
    ways[0] = 1;
    static const std::string blocks[] = {"a", "ab", "abb"};
    for (std::size_t i = 0; i < n; ++i) {
        if (ways[i] == 0) continue;
        for (const auto& b : blocks) {
            if (s.compare(i, b.size(), b) == 0 && i + b.size() <= n) ways[i + b.size()] += ways[i];
        }
    }
    return ways[n];
}

}  // namespace fibword
