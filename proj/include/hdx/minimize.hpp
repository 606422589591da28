#pragma once

#include <optional>
#include <vector>

#include "hdx/cohomology.hpp"
#include "hdx/complex.hpp"

namespace hdx {

/// ||A|| <= ||A + b|| for every b in B^k (exhaustive over B^k).
bool is_minimal(const Complex& X, const Cochain& A, const EnumerationOptions& opts = {});

/// Every localization I_sigma(A), sigma nonempty, is minimal in its link.
bool is_locally_minimal(const Complex& X, const Cochain& A, const EnumerationOptions& opts = {});

struct MinimizeStep {
    Face sigma;
    std::vector<Face> link_cochain;  // c, as faces of X_sigma (vertex ids of X)
    Cochain lifted;                  // I^sigma(c) in C^{k-1}(X)
};

struct MinimizeTrace {
    Cochain initial;
    Cochain final;
    Cochain gamma;  // final = initial + delta(gamma)
    std::vector<MinimizeStep> steps;
};

/// Applies canonically-first strict local improvements until none is left.
MinimizeTrace locally_minimize(const Complex& X, const Cochain& A, const EnumerationOptions& opts = {});

/// The local views of X used by the local-minimality tests at dimension k:
/// for every face sigma with 1 <= |sigma| <= k, the link, the coboundary
/// space of the link at dimension k - |sigma| (with preimages) and its weights.
class LocalViews {
public:
    LocalViews(const Complex& X, int k, const EnumerationOptions& opts = {});

    struct Improvement {
        std::size_t view;
        Cochain link_correction;  // c with ||I_sigma(A) + delta_sigma(c)|| < ||I_sigma(A)||
    };

    /// First improving move in (dimension, face index, combination index) order.
    std::optional<Improvement> first_improvement(const Cochain& A) const;
    bool locally_minimal(const Cochain& A) const { return !first_improvement(A).has_value(); }

    const Link& link(std::size_t view) const { return views_[view].link; }
    std::size_t size() const noexcept { return views_.size(); }

private:
    struct View {
        Link link;
        int j;
        Echelon space;
        MassTable mass;
    };

    const Complex* X_;
    int k_;
    std::vector<View> views_;
};

}  // namespace hdx
