#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hdx {

/// Fixed-length bit vector over F2. Bit i is face i of one dimension in the
/// canonical face order.
class Bits {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bits() = default;
    explicit Bits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    std::uint64_t word(std::size_t i) const noexcept { return words_[i]; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void assign(std::size_t i, bool v) noexcept {
        if (v) set(i); else reset(i);
    }

    Bits& operator^=(const Bits& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

    /// this \ o
    Bits minus(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
        return r;
    }

    bool is_subset_of(const Bits& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const noexcept { return !none(); }

    void clear() noexcept {
        for (auto& w : words_) w = 0;
    }
    void fill() noexcept {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    /// First set bit at or after `from`, or npos.
    std::size_t next(std::size_t from) const noexcept {
        if (from >= size_) return npos;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi >= words_.size()) return npos;
            w = words_[wi];
        }
    }
    std::size_t first() const noexcept { return next(0); }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = first(); i != npos; i = next(i + 1)) out.push_back(i);
        return out;
    }

    friend bool operator==(const Bits& a, const Bits& b) = default;

    /// Canonical cochain order: compare as binary numbers with bit i worth 2^i.
    friend std::strong_ordering operator<=>(const Bits& a, const Bits& b) noexcept {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        for (std::size_t i = a.words_.size(); i-- > 0;)
            if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    void trim() noexcept {
        if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
        if (size_ == 0) words_.clear();
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace hdx
