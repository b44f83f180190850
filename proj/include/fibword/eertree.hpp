#pragma once

#include "words.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace fibword {

/// Palindromic tree: one node per distinct nonempty palindromic factor, built in linear time.
class Eertree {
public:
    explicit Eertree(const Word& w) : text_(w.str()), alphabet_(w.alphabet()) {
        const std::size_t sigma = alphabet_.size();
        // Node 0: imaginary root of length -1; node 1: empty root of length 0.
        nodes_.push_back({-1, 0, 0});
        nodes_.push_back({0, 0, 0});
        edges_.assign(2 * sigma, kNone);
        std::size_t suffix = 1;
        for (std::size_t i = 0; i < text_.size(); ++i) {
            const std::size_t c = alphabet_.index_of(text_[i]);
            std::size_t cur = find_extendable(suffix, i);
            if (edges_[cur * sigma + c] != kNone) {
                suffix = edges_[cur * sigma + c];
                continue;
            }
            const long len = nodes_[cur].length + 2;
            std::size_t link = 1;
            if (len > 1) {
                std::size_t l = find_extendable(nodes_[cur].link, i);
                link = edges_[l * sigma + c];
            }
            nodes_.push_back({len, link, i});
            edges_.resize(edges_.size() + sigma, kNone);
            suffix = nodes_.size() - 1;
            edges_[cur * sigma + c] = suffix;
        }
    }

    /// Number of distinct nonempty palindromic factors.
    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size() - 2; }

    /// Distinct palindromic factors in order of first completion.
    [[nodiscard]] std::vector<std::string_view> palindromes() const {
        std::vector<std::string_view> out;
        out.reserve(size());
        const std::string_view text = text_;
        for (std::size_t v = 2; v < nodes_.size(); ++v) {
            const auto len = static_cast<std::size_t>(nodes_[v].length);
            out.push_back(text.substr(nodes_[v].end + 1 - len, len));
        }
        return out;
    }

private:
    static constexpr std::size_t kNone = 0;  // node 0 is never an edge target

    struct Node {
        long length;
        std::size_t link;
        std::size_t end;  // last index of the first occurrence
    };

    std::size_t find_extendable(std::size_t v, std::size_t i) const {
        for (;;) {
            const long len = nodes_[v].length;
            const long start = static_cast<long>(i) - len - 1;
            if (start >= 0 && text_[static_cast<std::size_t>(start)] == text_[i]) return v;
            if (len == -1) return v;
            v = nodes_[v].link;
        }
    }

    std::string text_;
    Alphabet alphabet_;
    std::vector<Node> nodes_;
    std::vector<std::size_t> edges_;
};

}  // namespace fibword
