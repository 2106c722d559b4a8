#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ke {

/// Fixed-width bit vector backed by 64-bit words. Used both for element
/// membership masks (width = ground-set size) and for member index sets
/// (width = family size). Binary operations require equal widths.
///
/// Comparison treats the bits as one unsigned integer (bit 0 least
/// significant), which gives the canonical ordering used everywhere:
/// members of a family are stored ascending by mask value, atom cells
/// ascending by signature value.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;

    explicit Bitset(std::size_t width) : width_(width), words_(word_count(width), 0) {}

    static Bitset full(std::size_t width) {
        Bitset b(width);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    static Bitset of(std::size_t width, std::initializer_list<std::size_t> bits) {
        Bitset b(width);
        for (std::size_t i : bits) b.set(i);
        return b;
    }

    template <typename Range>
    static Bitset from_indices(std::size_t width, const Range& bits) {
        Bitset b(width);
        for (std::size_t i : bits) b.set(i);
        return b;
    }

    std::size_t width() const { return width_; }

    bool test(std::size_t i) const {
        assert(i < width_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    Bitset& set(std::size_t i) {
        assert(i < width_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        return *this;
    }

    Bitset& reset(std::size_t i) {
        assert(i < width_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
        return *this;
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w != 0) return true;
        return false;
    }

    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        assert(width_ == o.width_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(width_ == o.width_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    Bitset& operator^=(const Bitset& o) {
        assert(width_ == o.width_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    /// Set difference.
    Bitset& operator-=(const Bitset& o) {
        assert(width_ == o.width_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    /// Complement within the fixed width.
    Bitset complemented() const {
        Bitset b(width_);
        for (std::size_t i = 0; i < words_.size(); ++i) b.words_[i] = ~words_[i];
        b.trim();
        return b;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(width_ == o.width_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        assert(width_ == o.width_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    std::size_t find_first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0) return (i << 6) + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return npos;
    }

    /// First set bit strictly after `prev`, or npos.
    std::size_t find_next(std::size_t prev) const {
        std::size_t i = prev + 1;
        if (i >= width_) return npos;
        std::size_t w = i >> 6;
        std::uint64_t masked = words_[w] & (~std::uint64_t{0} << (i & 63));
        if (masked != 0) return (w << 6) + static_cast<std::size_t>(std::countr_zero(masked));
        for (++w; w < words_.size(); ++w)
            if (words_[w] != 0) return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return npos;
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t i = find_first(); i != npos; i = find_next(i)) out.push_back(i);
        return out;
    }

    bool operator==(const Bitset& o) const = default;

    /// Numeric comparison, most significant word first. Widths must match.
    static int compare(const Bitset& a, const Bitset& b) {
        assert(a.width_ == b.width_);
        for (std::size_t i = a.words_.size(); i-- > 0;) {
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i] ? -1 : 1;
        }
        return 0;
    }

    bool operator<(const Bitset& o) const { return compare(*this, o) < 0; }

    std::uint64_t hash() const {
        std::uint64_t h = 14695981039346656037ull;
        for (auto w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h ^ width_;
    }

private:
    static std::size_t word_count(std::size_t width) { return (width + 63) >> 6; }

    // Keep bits past the width zero so equality and count stay exact.
    void trim() {
        if (width_ & 63) words_.back() &= ~std::uint64_t{0} >> (64 - (width_ & 63));
        if (width_ == 0 && !words_.empty()) words_.clear();
    }

    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace ke
