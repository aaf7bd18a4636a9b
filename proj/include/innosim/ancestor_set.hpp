#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace innosim {

// Set of basic-idea indices carried by each idea in the pool.
//
// Backed by a growable array of 64-bit words, so any number of basic ideas
// can be injected over a run. Trailing zero words are never stored: the
// representation is canonical and sets compare equal by word content alone,
// which lets the pool keep them in a hash set for duplicate detection.
class AncestorSet {
public:
    AncestorSet() = default;

    static AncestorSet singleton(std::size_t index) {
        AncestorSet s;
        s.words_.resize(index / 64 + 1, 0);
        s.words_[index / 64] = std::uint64_t{1} << (index % 64);
        return s;
    }

    bool empty() const noexcept { return words_.empty(); }

    bool contains(std::size_t index) const noexcept {
        const std::size_t w = index / 64;
        return w < words_.size() && (words_[w] >> (index % 64)) & 1u;
    }

    /// Number of basic-idea indices in the set.
    std::size_t count() const noexcept {
        std::size_t n = 0;
        for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool is_singleton() const noexcept { return count() == 1; }

    bool disjoint_with(const AncestorSet& other) const noexcept {
        const std::size_t n = std::min(words_.size(), other.words_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (words_[i] & other.words_[i]) return false;
        }
        return true;
    }

    AncestorSet union_with(const AncestorSet& other) const {
        const AncestorSet& wide = words_.size() >= other.words_.size() ? *this : other;
        const AncestorSet& narrow = words_.size() >= other.words_.size() ? other : *this;
        AncestorSet out = wide;
        for (std::size_t i = 0; i < narrow.words_.size(); ++i) {
            out.words_[i] |= narrow.words_[i];
        }
        return out;  // top word of `wide` is nonzero, so no trim needed
    }

    /// Member indices in ascending order (test and debug aid).
    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int b = std::countr_zero(bits);
                out.push_back(w * 64 + static_cast<std::size_t>(b));
                bits &= bits - 1;
            }
        }
        return out;
    }

    bool operator==(const AncestorSet&) const = default;

    std::size_t hash() const noexcept {
        // FNV-1a over the words
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }

private:
    std::vector<std::uint64_t> words_;
};

struct AncestorSetHash {
    std::size_t operator()(const AncestorSet& s) const noexcept { return s.hash(); }
};

}  // namespace innosim
