#pragma once

// Brute-force reference implementations. Nothing here calls into the other
// modules' algorithms; differential tests compare the two.

#include "words.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibword::oracle {

namespace detail {

inline bool mirror_equal(const std::string& s) {
    for (std::size_t i = 0, j = s.size(); i < j; ++i, --j) {
        if (s[i] != s[j - 1]) return false;
    }
    return true;
}

inline std::vector<Word> to_words(const Alphabet& a, const std::set<std::string>& strings) {
    std::vector<Word> out;
    for (const auto& s : strings) out.emplace_back(a, s);
    return out;
}

}  // namespace detail

/// Every distinct nonempty palindromic subsequence, by enumerating all index subsets.
inline std::vector<Word> brute_sp_enumerate(const Word& w) {
    if (w.size() > 20) throw GuardError("brute_sp_enumerate: |w| > 20");
    const std::string& s = w.str();
    const std::uint32_t n = static_cast<std::uint32_t>(s.size());
    std::set<std::string> found;
    std::string sub;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        sub.clear();
        for (std::uint32_t i = 0; i < n; ++i)
            if (mask & (std::uint32_t{1} << i)) sub.push_back(s[i]);
        if (detail::mirror_equal(sub)) found.insert(sub);
    }
    std::vector<Word> out = detail::to_words(w.alphabet(), found);
    std::sort(out.begin(), out.end());
    return out;
}

/// Overlapping occurrences by comparing every window.
inline std::uint64_t brute_count(const Word& pattern, const Word& text) {
    if (pattern.empty()) throw std::invalid_argument("brute_count: empty pattern");
    const std::string& p = pattern.str();
    const std::string& t = text.str();
    std::uint64_t count = 0;
    for (std::size_t i = 0; i + p.size() <= t.size(); ++i) {
        if (t.substr(i, p.size()) == p) ++count;
    }
    return count;
}

/// True iff some factor xx (x nonempty) occurs, by testing every start and half-length.
inline bool brute_square_scan(const Word& w) {
    if (w.size() > 1000) throw GuardError("brute_square_scan: |w| > 1000");
    const std::string& s = w.str();
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t len = 1; i + 2 * len <= s.size(); ++len) {
            if (s.substr(i, len) == s.substr(i + len, len)) return true;
        }
    }
    return false;
}

/// Distinct length-k factors from an ordered set of every window.
inline std::vector<Word> brute_distinct_factors(const Word& w, std::size_t k) {
    std::set<std::string> found;
    for (std::size_t i = 0; i + k <= w.size(); ++i) found.insert(w.str().substr(i, k));
    std::vector<Word> out = detail::to_words(w.alphabet(), found);
    std::sort(out.begin(), out.end());
    return out;
}

/// Distinct nonempty palindromic factors by testing every window.
inline std::vector<Word> brute_pal_factors(const Word& w) {
    std::set<std::string> found;
    const std::string& s = w.str();
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t len = 1; i + len <= s.size(); ++len) {
            std::string f = s.substr(i, len);
            if (detail::mirror_equal(f)) found.insert(std::move(f));
        }
    }
    std::vector<Word> out = detail::to_words(w.alphabet(), found);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fibword::oracle
