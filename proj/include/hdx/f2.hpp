#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "hdx/bits.hpp"
#include "hdx/error.hpp"

namespace hdx {

/// Row-reduced echelon basis of a subspace of F2^n. Pivots are the lowest set
/// bit of each row, strictly increasing, and cleared from every other row.
/// When built with tracking, preimages[i] records which input vectors sum to
/// rows[i].
class Echelon {
public:
    Echelon() = default;
    explicit Echelon(std::size_t n) : n_(n) {}

    static Echelon span_of(std::size_t n, const std::vector<Bits>& vectors);
    /// Same span, with preimages expressed over `tags` (tags[i] maps to vectors[i]).
    static Echelon span_of(std::size_t n, const std::vector<Bits>& vectors, const std::vector<Bits>& tags);

    std::size_t ambient() const noexcept { return n_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<Bits>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    const std::vector<Bits>& preimages() const noexcept { return preimages_; }

    /// Reduces v against the basis; returns the remainder (zero iff v in span).
    Bits reduce(Bits v) const;
    bool contains(const Bits& v) const { return reduce(v).none(); }

    /// Columns that carry no pivot; indicator vectors on them represent the cosets.
    std::vector<std::size_t> free_columns() const;

    /// Inserts v; returns false when v was already in the span.
    bool insert(Bits v, Bits tag = {});

private:
    std::size_t n_ = 0;
    std::vector<Bits> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<Bits> preimages_;
};

/// Kernel of the linear map sending e_i to images[i].
Echelon kernel_of(std::size_t n, std::size_t m, const std::vector<Bits>& images);

/// Integer masses of subsets: sum of per-bit weights via byte lookup tables.
class MassTable {
public:
    MassTable() = default;
    explicit MassTable(std::span<const std::int64_t> weights);

    std::int64_t operator()(const Bits& b) const noexcept {
        std::int64_t m = 0;
        const std::size_t words = b.word_count();
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t x = b.word(w);
            const std::int64_t* t = tables_.data() + w * 8 * 256;
            for (int byte = 0; x; ++byte, x >>= 8, t += 256) m += t[x & 0xFF];
        }
        return m;
    }

private:
    std::vector<std::int64_t> tables_;
};

/// Default exhaustive enumeration cap (number of enumerated elements).
inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 24;

/// Throws TooLarge when 2^exponent elements exceed the cap.
void require_enumerable(std::size_t exponent, std::uint64_t cap, const std::string& what);

/// Worker count: explicit request, else HDX_THREADS, else 1.
unsigned resolve_threads(unsigned requested);

/// Calls fn(lo, hi, worker) on contiguous slices of [begin, end).
template <class Fn>
void parallel_ranges(std::uint64_t begin, std::uint64_t end, unsigned threads, Fn&& fn) {
    const std::uint64_t total = end > begin ? end - begin : 0;
    if (threads <= 1 || total < 1024) {
        fn(begin, end, 0U);
        return;
    }
    const std::uint64_t chunk = (total + threads - 1) / threads;
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        std::uint64_t lo = begin + t * chunk;
        if (lo >= end) break;
        std::uint64_t hi = std::min(end, lo + chunk);
        pool.emplace_back([&fn, lo, hi, t] { fn(lo, hi, t); });
    }
}

}  // namespace hdx
