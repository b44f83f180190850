#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibword {

/// Raised when an input would push a computation past a fixed size or length guard.
class GuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Symbol guard shared by every word generator.
inline constexpr std::size_t kMaxWordLength = std::size_t{1} << 31;

using Symbol = char;

/// Ordered set of distinct single-character symbols.
class Alphabet {
public:
    explicit Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
        if (symbols_.empty()) throw std::invalid_argument("alphabet must contain at least one symbol");
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (symbols_.find(symbols_[i], i + 1) != std::string::npos)
                throw std::invalid_argument(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
        }
    }

    static Alphabet binary() { return Alphabet("01"); }
    static Alphabet binary_ab() { return Alphabet("ab"); }
    static Alphabet ternary() { return Alphabet("abc"); }

    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] const std::string& symbols() const noexcept { return symbols_; }
    [[nodiscard]] Symbol operator[](std::size_t i) const { return symbols_.at(i); }
    [[nodiscard]] bool contains(Symbol s) const noexcept { return symbols_.find(s) != std::string::npos; }

    /// Position of `s` in the alphabet order; throws if absent.
    [[nodiscard]] std::size_t index_of(Symbol s) const {
        auto pos = symbols_.find(s);
        if (pos == std::string::npos) throw std::invalid_argument(std::string("symbol '") + s + "' not in alphabet {" + symbols_ + "}");
        return pos;
    }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::string symbols_;
};

/// Immutable finite word over an alphabet. Serializes as the plain symbol string.
class Word {
public:
    explicit Word(Alphabet alphabet, std::string symbols = {})
        : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
        for (Symbol s : symbols_) {
            if (!alphabet_.contains(s))
                throw std::invalid_argument(std::string("symbol '") + s + "' not in alphabet {" + alphabet_.symbols() + "}");
        }
    }

    [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] const std::string& str() const noexcept { return symbols_; }
    [[nodiscard]] std::string_view view() const noexcept { return symbols_; }
    [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
    [[nodiscard]] bool empty() const noexcept { return symbols_.empty(); }
    [[nodiscard]] Symbol operator[](std::size_t i) const { return symbols_[i]; }
    [[nodiscard]] auto begin() const noexcept { return symbols_.begin(); }
    [[nodiscard]] auto end() const noexcept { return symbols_.end(); }

    /// Factor of length `len` starting at `pos`.
    [[nodiscard]] Word slice(std::size_t pos, std::size_t len) const {
        return Word(alphabet_, symbols_.substr(pos, len), trusted_t{});
    }

    friend bool operator==(const Word&, const Word&) = default;

    /// Lexicographic under alphabet order; a proper prefix sorts first.
    friend bool operator<(const Word& lhs, const Word& rhs) {
        const Alphabet& a = lhs.alphabet_;
        return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                                            [&a](Symbol x, Symbol y) { return a.index_of(x) < a.index_of(y); });
    }

private:
    struct trusted_t {};
    Word(Alphabet alphabet, std::string symbols, trusted_t)
        : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {}

    friend Word concat(const Word&, const Word&);
    friend Word reversed(const Word&);
    friend class Morphism;

    Alphabet alphabet_;
    std::string symbols_;
};

namespace detail {
inline void require_shared_alphabet(const Word& u, const Word& v) {
    if (!(u.alphabet() == v.alphabet()))
        throw std::invalid_argument("alphabet mismatch: {" + u.alphabet().symbols() + "} vs {" + v.alphabet().symbols() + "}");
}
}  // namespace detail

inline Word concat(const Word& u, const Word& v) {
    detail::require_shared_alphabet(u, v);
    return Word(u.alphabet_, u.symbols_ + v.symbols_, Word::trusted_t{});
}

inline Word reversed(const Word& w) {
    return Word(w.alphabet_, std::string(w.symbols_.rbegin(), w.symbols_.rend()), Word::trusted_t{});
}

/// |w|_a
inline std::size_t letter_count(const Word& w, Symbol a) {
    if (!w.alphabet().contains(a))
        throw std::invalid_argument(std::string("symbol '") + a + "' not in alphabet {" + w.alphabet().symbols() + "}");
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
}

/// Total map from domain symbols to nonempty codomain words, extended to words by concatenation.
class Morphism {
public:
    /// `images[i]` is the image of `domain[i]`.
    Morphism(Alphabet domain, Alphabet codomain, const std::vector<std::string>& images)
        : domain_(std::move(domain)), codomain_(std::move(codomain)) {
        if (images.size() != domain_.size())
            throw std::invalid_argument("morphism needs exactly one image per domain symbol");
        images_.reserve(images.size());
        for (const auto& img : images) {
            if (img.empty()) throw std::invalid_argument("morphism images must be nonempty");
            images_.emplace_back(codomain_, img);
        }
    }

    [[nodiscard]] const Alphabet& domain() const noexcept { return domain_; }
    [[nodiscard]] const Alphabet& codomain() const noexcept { return codomain_; }
    [[nodiscard]] const Word& image(Symbol s) const { return images_[domain_.index_of(s)]; }

    [[nodiscard]] Word apply(const Word& w) const {
        if (!(w.alphabet() == domain_))
            throw std::invalid_argument("word alphabet {" + w.alphabet().symbols() + "} is not the morphism domain {" + domain_.symbols() + "}");
        std::string out;
        for (Symbol s : w) out += images_[domain_.index_of(s)].str();
        return Word(codomain_, std::move(out), Word::trusted_t{});
    }

    Word operator()(const Word& w) const { return apply(w); }

private:
    Alphabet domain_;
    Alphabet codomain_;
    std::vector<Word> images_;
};

inline Word apply_morphism(const Morphism& m, const Word& w) { return m.apply(w); }

/// 0 -> 01, 1 -> 0
inline Morphism fibonacci_morphism() { return Morphism(Alphabet::binary(), Alphabet::binary(), {"01", "0"}); }

/// 0 -> 01, 1 -> 10
inline Morphism thue_morse_morphism() { return Morphism(Alphabet::binary(), Alphabet::binary(), {"01", "10"}); }

/// Ternary-to-binary coding a -> abb, b -> ab, c -> a.
inline Morphism delta_morphism() { return Morphism(Alphabet::ternary(), Alphabet::binary_ab(), {"abb", "ab", "a"}); }

/// Contiguous occurrence; the empty word is a factor of everything.
inline bool is_factor(const Word& v, const Word& x) {
    detail::require_shared_alphabet(v, x);
    return x.view().find(v.view()) != std::string_view::npos;
}

/// Subsequence test.
inline bool is_scattered_subword(const Word& v, const Word& x) {
    detail::require_shared_alphabet(v, x);
    std::size_t i = 0;
    for (Symbol s : x) {
        if (i == v.size()) break;
        if (s == v[i]) ++i;
    }
    return i == v.size();
}

/// Distinct length-k factors, sorted under alphabet order. Empty when k > |w|.
inline std::vector<Word> distinct_factors(const Word& w, std::size_t k) {
    std::vector<Word> out;
    if (k > w.size()) return out;
    std::vector<std::string_view> views;
    views.reserve(w.size() - k + 1);
    for (std::size_t i = 0; i + k <= w.size(); ++i) views.push_back(w.view().substr(i, k));
    const Alphabet& a = w.alphabet();
    auto less = [&a](std::string_view x, std::string_view y) {
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                            [&a](Symbol p, Symbol q) { return a.index_of(p) < a.index_of(q); });
    };
    std::sort(views.begin(), views.end(), less);
    views.erase(std::unique(views.begin(), views.end()), views.end());
    out.reserve(views.size());
    for (auto v : views) out.emplace_back(a, std::string(v));
    return out;
}

}  // namespace fibword

template <>
struct std::hash<fibword::Word> {
    std::size_t operator()(const fibword::Word& w) const noexcept { return std::hash<std::string>{}(w.str()); }
};
