#pragma once

#include "words.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fibword {

/// Word with a membership degree in [0, 1] attached to each position.
class FuzzyWord {
public:
    FuzzyWord(Word symbols, std::vector<double> memberships)
        : symbols_(std::move(symbols)), memberships_(std::move(memberships)) {
        if (symbols_.size() != memberships_.size()) throw std::invalid_argument("fuzzy word: one membership per symbol");
        for (double m : memberships_) {
            if (!(m >= 0.0 && m <= 1.0)) throw std::invalid_argument("fuzzy word: membership outside [0, 1]");
        }
    }

    [[nodiscard]] const Word& symbols() const noexcept { return symbols_; }
    [[nodiscard]] const std::vector<double>& memberships() const noexcept { return memberships_; }
    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }

    friend bool operator==(const FuzzyWord&, const FuzzyWord&) = default;

private:
    Word symbols_;
    std::vector<double> memberships_;
};

inline FuzzyWord concat(const FuzzyWord& u, const FuzzyWord& v) {
    std::vector<double> m = u.memberships();
    m.insert(m.end(), v.memberships().begin(), v.memberships().end());
    return {concat(u.symbols(), v.symbols()), std::move(m)};
}

inline constexpr std::uint64_t kMaxFuzzyIndex = 30;

/// F(0) = b, F(1) = a, F(n) = F(n-1) F(n-2); every a carries mu_a and every b carries mu_b.
inline FuzzyWord fuzzy_fib_word(std::uint64_t n, double mu_a, double mu_b) {
    if (!(mu_a >= 0.0 && mu_a <= 1.0) || !(mu_b >= 0.0 && mu_b <= 1.0))
        throw std::invalid_argument("fuzzy_fib_word: membership outside [0, 1]");
    if (n > kMaxFuzzyIndex) throw GuardError("fuzzy_fib_word: n > 30");
    std::string older = "b", cur = "a";
    if (n == 0) cur = older;
    for (std::uint64_t i = 2; i <= n; ++i) {
        std::string next = cur + older;
        older = std::move(cur);
        cur = std::move(next);
    }
    std::vector<double> m(cur.size());
    std::transform(cur.begin(), cur.end(), m.begin(), [&](char c) { return c == 'a' ? mu_a : mu_b; });
    return {Word(Alphabet::binary_ab(), std::move(cur)), std::move(m)};
}

/// Membership of the whole word: the minimum over its symbols.
inline double word_membership(const FuzzyWord& fw) {
    if (fw.empty()) throw std::invalid_argument("word_membership: empty fuzzy word");
    return *std::min_element(fw.memberships().begin(), fw.memberships().end());
}

}  // namespace fibword
