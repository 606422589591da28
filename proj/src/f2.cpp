#include "hdx/f2.hpp"

#include <algorithm>
#include <cstdlib>

namespace hdx {

Echelon Echelon::span_of(std::size_t n, const std::vector<Bits>& vectors) {
    Echelon e(n);
    for (const auto& v : vectors) e.insert(v);
    return e;
}

Echelon Echelon::span_of(std::size_t n, const std::vector<Bits>& vectors, const std::vector<Bits>& tags) {
    Echelon e(n);
    for (std::size_t i = 0; i < vectors.size(); ++i) e.insert(vectors[i], tags[i]);
    return e;
}

Bits Echelon::reduce(Bits v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (v.test(pivots_[r])) v ^= rows_[r];
    return v;
}

std::vector<std::size_t> Echelon::free_columns() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c < n_; ++c) {
        if (p < pivots_.size() && pivots_[p] == c) {
            ++p;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

bool Echelon::insert(Bits v, Bits tag) {
    const bool track = tag.size() > 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (v.test(pivots_[r])) {
            v ^= rows_[r];
            if (track) tag ^= preimages_[r];
        }
    }
    const std::size_t p = v.first();
    if (p == Bits::npos) return false;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].test(p)) {
            rows_[r] ^= v;
            if (track) preimages_[r] ^= tag;
        }
    }
    auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    if (track) preimages_.insert(preimages_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(tag));
    return true;
}

Echelon kernel_of(std::size_t n, std::size_t m, const std::vector<Bits>& images) {
    Echelon image(m);
    std::vector<Bits> kernel;
    for (std::size_t i = 0; i < n; ++i) {
        Bits tag(n);
        tag.set(i);
        Bits v = images[i];
        // reduce with tracking by hand so the zero remainder keeps its tag
        for (std::size_t r = 0; r < image.rank(); ++r) {
            if (v.test(image.pivots()[r])) {
                v ^= image.rows()[r];
                tag ^= image.preimages()[r];
            }
        }
        if (v.none())
            kernel.push_back(std::move(tag));
        else
            image.insert(std::move(v), std::move(tag));
    }
    return Echelon::span_of(n, kernel);
}

MassTable::MassTable(std::span<const std::int64_t> weights) {
    const std::size_t words = (weights.size() + 63) / 64;
    tables_.assign(words * 8 * 256, 0);
    for (std::size_t block = 0; block < words * 8; ++block) {
        std::int64_t* t = tables_.data() + block * 256;
        for (std::size_t value = 1; value < 256; ++value) {
            std::int64_t s = 0;
            for (std::size_t b = 0; b < 8; ++b) {
                std::size_t idx = block * 8 + b;
                if ((value >> b) & 1U && idx < weights.size()) s += weights[idx];
            }
            t[value] = s;
        }
    }
}

void require_enumerable(std::size_t exponent, std::uint64_t cap, const std::string& what) {
    if (exponent >= 63 || (std::uint64_t{1} << exponent) > cap) {
        throw Error(ErrorKind::TooLarge, what + " needs 2^" + std::to_string(exponent) +
                                             " enumerated elements; cap is " + std::to_string(cap));
    }
}

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HDX_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(std::min(v, 256L));
    }
    return 1;
}

}  // namespace hdx
