#pragma once

#include <vector>

#include "hdx/cohomology.hpp"
#include "hdx/complex.hpp"

namespace hdx {

/// Fat-face hierarchy of a k-cochain A for a fatness constant eta in (0,1).
struct FatProfile {
    int k = 0;
    Rat eta;
    Cochain A;
    std::vector<Cochain> fat;      // fat[i + 1] = S^i, i = -1..k; S^k = A
    std::vector<Cochain> ladders;  // ladders[i + 1] = L(A, i), k-cochains
    Cochain upsilon;               // degenerate (k+1)-faces

    const Cochain& S(int i) const { return fat.at(static_cast<std::size_t>(i + 1)); }
    const Cochain& L(int i) const { return ladders.at(static_cast<std::size_t>(i + 1)); }
};

/// eta^(2^(k-i)): the bar an (i-1)-face must reach to be fat.
Rat fatness_threshold(const Rat& eta, int k, int i);

FatProfile fat_profile(const Complex& X, const Cochain& A, const Rat& eta);

/// L(A, sigma): members of A reachable from sigma along chains of fat faces
/// growing one vertex at a time. Empty when sigma itself is not fat.
Cochain ladder_from(const Complex& X, const FatProfile& P, const Face& sigma);

struct SeepRow {
    int i = 0;
    Rat lhs;           // beta / C(k+2, i+1) * ||L(A,i)||
    Rat delta_norm;    // ||delta A||
    Rat ladder_below;  // ||L(A,i-1)||
    Rat upsilon_norm;  // ||Upsilon(A)||
    Rat rhs;           // delta_norm + (k+2) ladder_below + upsilon_norm
    bool pass = false;
};

struct SeepReport {
    int k = 0;
    Rat eta, beta;
    std::vector<SeepRow> rows;
    bool pass = false;
};

/// Checks the ladder-seepage inequality for each 0 <= i <= k. A must be
/// locally minimal (PreconditionUnverified otherwise); beta is the caller's
/// lower bound on the coboundary expansion of the links involved.
SeepReport verify_seep(const Complex& X, const Cochain& A, const Rat& eta, const Rat& beta,
                       const EnumerationOptions& opts = {});

struct UpsilonReport {
    int k = 0;
    Rat eta;
    Rat link_alpha;   // measured max alpha* over links
    Rat alpha_bound;  // eta^(2^(k+1))
    Rat upsilon_norm;
    Rat rhs;          // (k+2) 2^(k+4) eta ||A||
    bool pass = false;
};

/// Checks ||Upsilon(A)|| <= (k+2) 2^(k+4) eta ||A||. Throws HypothesisFailed
/// when link_alpha > eta^(2^(k+1)).
UpsilonReport verify_upsilon_bound(const Complex& X, const Cochain& A, const Rat& eta, const Rat& link_alpha);

}  // namespace hdx
