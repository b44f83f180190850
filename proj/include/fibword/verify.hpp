#pragma once

// Differential sweeps pairing each main algorithm with its brute-force oracle.

#include "density.hpp"
#include "fibonacci.hpp"
#include "oracle.hpp"
#include "palindromes.hpp"
#include "squarefree.hpp"
#include "words.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fibword {

struct VerificationResult {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
    [[nodiscard]] bool ok() const noexcept { return mismatches == 0; }
};

/// Calls visit(word) for every word over `alphabet` with length in [min_len, max_len].
inline void for_each_word(const Alphabet& alphabet, std::size_t min_len, std::size_t max_len,
                          const std::function<void(const Word&)>& visit) {
    const std::uint64_t sigma = alphabet.size();
    for (std::size_t len = min_len; len <= max_len; ++len) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < len; ++i) total *= sigma;
        std::string s(len, alphabet[0]);
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t rest = code;
            for (std::size_t pos = len; pos-- > 0; rest /= sigma) s[pos] = alphabet[rest % sigma];
            visit(Word(alphabet, s));
        }
    }
}

inline std::vector<VerificationResult> run_verification() {
    std::vector<VerificationResult> results;

    {
        VerificationResult r{"sp_count vs subset enumeration (binary, |w| <= 10)"};
        for_each_word(Alphabet::binary_ab(), 0, 10, [&](const Word& w) {
            ++r.checked;
            if (sp_count(w) != oracle::brute_sp_enumerate(w).size()) ++r.mismatches;
        });
        results.push_back(r);
    }
    {
        VerificationResult r{"palindromic factors: centre expansion vs eertree vs window scan (ternary, |w| <= 7)"};
        for_each_word(Alphabet::ternary(), 0, 7, [&](const Word& w) {
            ++r.checked;
            const auto brute = oracle::brute_pal_factors(w);
            if (pal_factors_direct(w) != brute || pal_factors_eertree(w) != brute) ++r.mismatches;
        });
        results.push_back(r);
    }
    {
        VerificationResult r{"count_occurrences vs window scan (binary patterns <= 4, texts <= 10)"};
        std::vector<Word> patterns, texts;
        for_each_word(Alphabet::binary(), 1, 4, [&](const Word& w) { patterns.push_back(w); });
        for_each_word(Alphabet::binary(), 0, 10, [&](const Word& w) { texts.push_back(w); });
        for (const auto& p : patterns)
            for (const auto& t : texts) {
                ++r.checked;
                if (count_occurrences(p, t) != oracle::brute_count(p, t)) ++r.mismatches;
            }
        results.push_back(r);
    }
    {
        VerificationResult r{"is_square_free vs all-pairs scan (ternary, |w| <= 8)"};
        for_each_word(Alphabet::ternary(), 0, 8, [&](const Word& w) {
            ++r.checked;
            if (is_square_free(w) == oracle::brute_square_scan(w)) ++r.mismatches;
        });
        results.push_back(r);
    }
    {
        VerificationResult r{"distinct_factors vs ordered window set (Fibonacci prefix 610, k <= 15)"};
        const Word prefix = infinite_prefix(610);
        for (std::size_t k = 0; k <= 15; ++k) {
            ++r.checked;
            if (distinct_factors(prefix, k) != oracle::brute_distinct_factors(prefix, k)) ++r.mismatches;
        }
        results.push_back(r);
    }
    {
        VerificationResult r{"nth_symbol vs generated prefix (i < 10^5)"};
        const Word prefix = infinite_prefix(100000);
        for (std::uint64_t i = 0; i < prefix.size(); ++i) {
            ++r.checked;
            if (nth_symbol(i) != prefix[i]) ++r.mismatches;
        }
        results.push_back(r);
    }
    {
        VerificationResult r{"delta_decode round trip (ternary, |b| <= 7)"};
        const Morphism delta = delta_morphism();
        for_each_word(Alphabet::ternary(), 0, 7, [&](const Word& b) {
            ++r.checked;
            const Word x = delta(b);
            if (!(delta_decode(x) == b) || delta_factorization_count(x) != 1) ++r.mismatches;
        });
        results.push_back(r);
    }
    {
        VerificationResult r{"square-free enumeration vs filtered extension (ternary, n <= 9)"};
        std::vector<std::string> level{""};
        for (std::size_t n = 1; n <= 9; ++n) {
            std::vector<std::string> next;
            for (const auto& s : level)
                for (char c : std::string("abc")) {
                    std::string t = s + c;
                    if (!oracle::brute_square_scan(Word(Alphabet::ternary(), t))) next.push_back(t);
                }
            level = std::move(next);
            const auto e = enumerate_square_free(3, n);
            ++r.checked;
            bool same = e.words.size() == level.size();
            for (std::size_t i = 0; same && i < level.size(); ++i) same = e.words[i].str() == level[i];
            if (!same) ++r.mismatches;
        }
        results.push_back(r);
    }
    return results;
}

}  // namespace fibword
