#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/f2.hpp"

namespace hdx {

enum class SpaceKind { Cocycles, Coboundaries };
enum class ExpansionMode { Coboundary, Cocycle };

/// Limits for the exhaustive searches.
struct EnumerationOptions {
    std::uint64_t cap = kDefaultCap;
    unsigned threads = 0;  // 0: HDX_THREADS or 1
};

Cochain coboundary(const Complex& X, const Cochain& A);

/// delta(e_i) for every face i of X(k), as bit vectors over X(k+1).
std::vector<Bits> coboundary_images(const Complex& X, int k);

/// Echelon basis of B^k = im delta^{k-1}. With track_preimages, each row
/// remembers a (k-1)-cochain mapping onto it.
Echelon coboundary_space(const Complex& X, int k, bool track_preimages = false);
/// Echelon basis of Z^k = ker delta^k.
Echelon cocycle_space(const Complex& X, int k);

struct F2Basis {
    int k = 0;
    SpaceKind kind = SpaceKind::Cocycles;
    std::vector<Cochain> rows;
    std::vector<std::size_t> pivots;

    std::size_t dim() const noexcept { return rows.size(); }
};

F2Basis space_basis(const Complex& X, int k, SpaceKind kind);

struct CohomologyDims {
    int k = 0;
    std::size_t cocycles = 0;
    std::size_t coboundaries = 0;
    std::size_t cohomology() const noexcept { return cocycles - coboundaries; }
};

CohomologyDims cohomology_dims(const Complex& X, int k);

struct CosystoleReport {
    int k = 0;
    ExtRat value;                   // infinity when Z^k = B^k
    std::optional<Cochain> witness; // a minimal-norm cocycle outside B^k
};

/// min ||z|| over z in Z^k \ B^k.
CosystoleReport cosystole(const Complex& X, int k, const EnumerationOptions& opts = {});

struct ExpansionReport {
    int k = 0;
    ExpansionMode mode = ExpansionMode::Coboundary;
    ExtRat value;                    // infinity when every cochain lies in the subspace
    std::optional<Cochain> witness;  // min-norm member of the minimizing coset
};

/// Exp_b^k (mode Coboundary) or Exp_z^k (mode Cocycle) by coset-structured search.
ExpansionReport expansion(const Complex& X, int k, ExpansionMode mode, const EnumerationOptions& opts = {});

const char* to_string(ExpansionMode mode);

}  // namespace hdx
