#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace corona {

/// Fixed-capacity dynamic bitset sized at construction. Just enough surface
/// for the branch-and-bound searches.
class Bits {
  public:
    Bits() = default;
    explicit Bits(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    /// Lowest set bit, or -1 when empty.
    int lowest() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    /// Lowest set bit strictly above `from`, or -1.
    int next(int from) const {
        for (int i = from + 1; i < n_;) {
            const std::uint64_t w = words_[i >> 6] >> (i & 63);
            if (w) return i + std::countr_zero(w);
            i = ((i >> 6) + 1) << 6;
        }
        return -1;
    }

    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    int and_count(const Bits& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    Bits& operator&=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// this &= ~o
    Bits& and_not(const Bits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

    friend bool operator==(const Bits&, const Bits&) = default;

    template <typename F>
    void for_each(F f) const {
        for (int v = lowest(); v >= 0; v = next(v)) f(v);
    }

  private:
    void trim() {
        if (n_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
        if (n_ == 0 && !words_.empty()) words_.back() = 0;
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace corona
