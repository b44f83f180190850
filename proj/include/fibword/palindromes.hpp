#pragma once

#include "density.hpp"
#include "eertree.hpp"
#include "exact.hpp"
#include "fibonacci.hpp"
#include "words.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace fibword {

inline bool is_palindrome(std::string_view s) noexcept {
    return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

inline bool is_palindrome(const Word& w) noexcept { return is_palindrome(w.view()); }

/// Decimal-digit palindrome test.
inline bool is_numeric_palindrome(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("is_numeric_palindrome: negative input");
    return is_palindrome(std::to_string(n));
}

struct PalindromeReport {
    Word word;
    std::vector<Word> pal_factors;     // distinct nonempty palindromic factors, sorted
    std::size_t p_count = 0;           // P(w)
    std::optional<BigInt> sp_count;    // SP(w), when computed
};

/// Above this length pal_factors switches from direct enumeration to the eertree.
inline constexpr std::size_t kDirectPalindromeLimit = 4096;

namespace detail {

inline std::vector<Word> sorted_words(const Alphabet& a, const std::vector<std::string_view>& views) {
    std::vector<Word> out;
    out.reserve(views.size());
    for (auto v : views) out.emplace_back(a, std::string(v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Distinct palindromic factors by expanding around every centre.
inline std::vector<Word> pal_factors_direct(const Word& w) {
    const std::string_view s = w.view();
    const long n = static_cast<long>(s.size());
    std::unordered_set<std::string_view> seen;
    std::vector<std::string_view> found;
    // Centre 2c covers odd palindromes at c, 2c+1 even ones between c and c+1.
    for (long centre = 0; centre < 2 * n - 1; ++centre) {
        long lo = centre / 2, hi = lo + centre % 2;
        while (lo >= 0 && hi < n && s[static_cast<std::size_t>(lo)] == s[static_cast<std::size_t>(hi)]) {
            --lo;
            ++hi;
        }
        // Maximal palindrome is s[lo+1, hi-1]. The set stays closed under stripping
        // the outer letters, so insertion can stop at the first one already present.
        for (++lo, --hi; lo <= hi; ++lo, --hi) {
            const auto p = s.substr(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi - lo + 1));
            if (!seen.insert(p).second) break;
            found.push_back(p);
        }
    }
    return detail::sorted_words(w.alphabet(), found);
}

inline std::vector<Word> pal_factors_eertree(const Word& w) {
    return detail::sorted_words(w.alphabet(), Eertree(w).palindromes());
}

/// P(w) with the factor set; sp_count is left unset.
inline PalindromeReport pal_factors(const Word& w) {
    PalindromeReport r{w, w.size() <= kDirectPalindromeLimit ? pal_factors_direct(w) : pal_factors_eertree(w), 0, std::nullopt};
    r.p_count = r.pal_factors.size();
    return r;
}

inline constexpr std::size_t kMaxScatteredLength = 10000;

/// SP(w): distinct nonempty palindromic subsequences.
///
/// A(i, j) over w[i..j] sums, per letter c present, 1 if c occurs once and
/// 2 + A(p+1, q-1) otherwise, where p and q are the first and last occurrences
/// of c. Rows are produced for decreasing i and only the rows some future i can
/// reach (p+1 for the next occurrence p of each letter) are kept.
inline BigInt sp_count(const Word& w) {
    const std::size_t n = w.size();
    if (n > kMaxScatteredLength) throw GuardError("sp_count: word longer than 10^4 symbols");
    if (n == 0) return 0;
    const std::size_t sigma = w.alphabet().size();
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = w.alphabet().index_of(w[i]);

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    // prev_occ[j*sigma + c]: last position <= j holding c.
    std::vector<std::size_t> prev_occ(n * sigma, none);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t c = 0; c < sigma; ++c) prev_occ[j * sigma + c] = j > 0 ? prev_occ[(j - 1) * sigma + c] : none;
        prev_occ[j * sigma + idx[j]] = j;
    }

    // rows[r][j + 1] = A(r, j); column 0 holds A(r, r-1)-style empty intervals.
    std::map<std::size_t, std::vector<BigInt>> rows;
    rows.emplace(n, std::vector<BigInt>(n + 1, 0));
    std::vector<std::size_t> next_occ(sigma, none);  // first position >= i holding c

    for (std::size_t i = n; i-- > 0;) {
        next_occ[idx[i]] = i;
        std::vector<BigInt> row(n + 1, 0);
        for (std::size_t j = i; j < n; ++j) {
            BigInt total = 0;
            for (std::size_t c = 0; c < sigma; ++c) {
                const std::size_t p = next_occ[c];
                if (p == none || p > j) continue;
                const std::size_t q = prev_occ[j * sigma + c];
                if (p == q) {
                    total += 1;
                } else {
                    total += 2;
                    if (q > p + 1) total += rows.at(p + 1)[q];  // A(p+1, q-1)
                }
            }
            row[j + 1] = std::move(total);
        }
        rows.emplace(i, std::move(row));
        // Keep row i and the rows i-1 and earlier can still reach.
        for (auto it = rows.begin(); it != rows.end();) {
            const std::size_t r = it->first;
            bool keep = r == i;
            for (std::size_t c = 0; c < sigma && !keep; ++c) keep = next_occ[c] != none && next_occ[c] + 1 == r;
            it = keep ? std::next(it) : rows.erase(it);
        }
    }
    return rows.at(0)[n];
}

/// SP(w a) - SP(w): palindromic subsequences created by appending `a`.
inline BigInt sp_delta(const Word& w, Symbol a) {
    if (w.size() + 1 > kMaxScatteredLength) throw GuardError("sp_delta: word longer than 10^4 symbols");
    const Word extended = concat(w, Word(w.alphabet(), std::string(1, a)));
    return sp_count(extended) - sp_count(w);
}

/// P(w) and SP(w) together.
inline PalindromeReport analyze_palindromes(const Word& w) {
    PalindromeReport r = pal_factors(w);
    r.sp_count = sp_count(w);
    return r;
}

/// Density of every binary palindrome of length L in the first prefix_len symbols
/// of the infinite Fibonacci word; absent palindromes report 0.
inline std::map<Word, DensitySample> pal_density_table(std::uint64_t prefix_len, std::size_t length) {
    if (length < 1 || length > 8) throw std::invalid_argument("pal_density_table: L must be in [1, 8]");
    if (prefix_len < length) throw std::invalid_argument("pal_density_table: prefix shorter than L");
    const Word prefix = infinite_prefix(prefix_len);
    std::map<Word, DensitySample> table;
    for (std::uint32_t bits = 0; bits < (1U << length); ++bits) {
        std::string s(length, '0');
        for (std::size_t i = 0; i < length; ++i)
            if ((bits >> (length - 1 - i)) & 1U) s[i] = '1';
        if (!is_palindrome(s)) continue;
        Word p(Alphabet::binary(), s);
        const auto count = count_occurrences(p, prefix);
        table.emplace(std::move(p), DensitySample(prefix_len, Rational(count, prefix_len)));
    }
    return table;
}

}  // namespace fibword
