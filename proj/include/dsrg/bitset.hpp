#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dsrg {

/// Dynamic bitset sized at construction. Provides just the operations the
/// graph algorithms use; indices are not range-checked in release paths.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int size)
        : size_(size), words_(static_cast<size_t>((size + 63) / 64), 0) {}

    int size() const { return size_; }

    void set(int i) { words_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { words_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }

    /// Calls f(i) for every set bit, ascending.
    template <typename F>
    void for_each(F&& f) const {
        for (size_t wi = 0; wi < words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w) {
                int bit = std::countr_zero(w);
                f(static_cast<int>(wi * 64) + bit);
                w &= w - 1;
            }
        }
    }

    friend int intersection_count(const Bitset& a, const Bitset& b) {
        int c = 0;
        size_t n = std::min(a.words_.size(), b.words_.size());
        for (size_t i = 0; i < n; ++i) c += std::popcount(a.words_[i] & b.words_[i]);
        return c;
    }

    bool operator==(const Bitset&) const = default;

private:
    int size_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace dsrg
