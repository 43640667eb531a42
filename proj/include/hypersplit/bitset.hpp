#ifndef HYPERSPLIT_BITSET_HPP
#define HYPERSPLIT_BITSET_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace hypersplit {

// Fixed-universe bit set over elements 0..n-1. Element order matters: the
// lexicographic comparison below reads membership from element 0 upward,
// which is what canonical halfspace keys are defined over.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static Bitset from_indices(int universe, std::span<const int> indices) {
        Bitset b(universe);
        for (int i : indices) b.set(i);
        return b;
    }

    int universe() const { return n_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (std::uint64_t w : words_) {
            if (w) return false;
        }
        return true;
    }
    bool full() const { return count() == n_; }

    Bitset complement() const {
        Bitset out(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
        out.mask_tail();
        return out;
    }

    friend Bitset operator&(const Bitset& a, const Bitset& b) {
        Bitset out(a.n_);
        for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] = a.words_[i] & b.words_[i];
        return out;
    }
    friend Bitset operator|(const Bitset& a, const Bitset& b) {
        Bitset out(a.n_);
        for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] = a.words_[i] | b.words_[i];
        return out;
    }

    int intersect_count(const Bitset& other) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    bool operator==(const Bitset& other) const = default;

    // True when, at the first element where the two sets differ, this set
    // excludes it. Reads element 0 as the most significant position.
    bool lex_less(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t diff = words_[i] ^ other.words_[i];
            if (diff) {
                std::uint64_t lowest = diff & (~diff + 1);
                return (words_[i] & lowest) == 0;
            }
        }
        return false;
    }

    // The lexicographically smaller of this set and its complement; with a
    // nonempty universe that is always the side excluding element 0.
    Bitset canonical_key() const {
        Bitset comp = complement();
        return lex_less(comp) ? *this : comp;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int bit = std::countr_zero(w);
                out.push_back(static_cast<int>(i * 64 + bit));
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                fn(static_cast<int>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    void mask_tail() {
        if (n_ % 64 != 0 && !words_.empty()) {
            words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
        }
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetLexLess {
    bool operator()(const Bitset& a, const Bitset& b) const { return a.lex_less(b); }
};

}  // namespace hypersplit

#endif
