#include "hdx/minimize.hpp"

#include <bit>

namespace hdx {

namespace {

std::vector<std::int64_t> level_weights(const Complex& X, int k) {
    std::vector<std::int64_t> w(X.num_faces(k));
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = X.top_count(k, i);
    return w;
}

}  // namespace

bool is_minimal(const Complex& X, const Cochain& A, const EnumerationOptions& opts) {
    X.check(A);
    const int k = A.dim();
    if (k < 0) return true;
    const Echelon B = coboundary_space(X, k);
    require_enumerable(B.rank(), opts.cap, "minimality test over B^" + std::to_string(k));
    const auto weights = level_weights(X, k);
    const MassTable mass(weights);
    const std::int64_t base = mass(A.bits());
    Bits cur = A.bits();
    const std::uint64_t count = std::uint64_t{1} << B.rank();
    for (std::uint64_t g = 1; g < count; ++g) {
        cur ^= B.rows()[static_cast<std::size_t>(std::countr_zero(g))];
        if (mass(cur) < base) return false;
    }
    return true;
}

LocalViews::LocalViews(const Complex& X, int k, const EnumerationOptions& opts) : X_(&X), k_(k) {
    if (k < 0 || k > X.dim()) throw Error(ErrorKind::BadDimension, "local views need 0 <= k <= d");
    for (int s = 0; s < k; ++s) {
        for (std::size_t i = 0; i < X.num_faces(s); ++i) {
            View v{hdx::link(X, X.face(s, i)), k - s - 1, {}, {}};
            v.space = coboundary_space(v.link.complex, v.j, true);
            require_enumerable(v.space.rank(), opts.cap,
                               "local minimality in the link of " + X.face_label(X.face(s, i)));
            v.mass = MassTable(level_weights(v.link.complex, v.j));
            views_.push_back(std::move(v));
        }
    }
}

std::optional<LocalViews::Improvement> LocalViews::first_improvement(const Cochain& A) const {
    X_->check(A);
    if (A.dim() != k_) throw Error(ErrorKind::BadDimension, "cochain dimension differs from the local views");
    for (std::size_t vi = 0; vi < views_.size(); ++vi) {
        const View& v = views_[vi];
        const Cochain local = localize(*X_, v.link, A);
        const std::int64_t base = v.mass(local.bits());
        const auto& rows = v.space.rows();
        const std::uint64_t count = std::uint64_t{1} << rows.size();
        Bits b(local.universe());
        for (std::uint64_t c = 1; c < count; ++c) {
            // binary counting: c-1 -> c flips combination bits 0..ctz(c)
            const int top = std::countr_zero(c);
            for (int bit = 0; bit <= top; ++bit) b ^= rows[static_cast<std::size_t>(bit)];
            if (v.mass(local.bits() ^ b) < base) {
                Bits pre(v.link.complex.num_faces(v.j - 1));
                for (std::size_t bit = 0; bit < rows.size(); ++bit)
                    if ((c >> bit) & 1U) pre ^= v.space.preimages()[bit];
                return Improvement{vi, Cochain(v.link.complex.id(), v.j - 1, std::move(pre))};
            }
        }
    }
    return std::nullopt;
}

bool is_locally_minimal(const Complex& X, const Cochain& A, const EnumerationOptions& opts) {
    X.check(A);
    if (A.dim() < 0) return true;
    return LocalViews(X, A.dim(), opts).locally_minimal(A);
}

MinimizeTrace locally_minimize(const Complex& X, const Cochain& A, const EnumerationOptions& opts) {
    X.check(A);
    const int k = A.dim();
    if (k < 0) throw Error(ErrorKind::BadDimension, "local minimization needs k >= 0");
    const LocalViews views(X, k, opts);
    MinimizeTrace trace{A, A, X.empty_cochain(k - 1), {}};
    while (auto imp = views.first_improvement(trace.final)) {
        const Link& L = views.link(imp->view);
        MinimizeStep step;
        step.sigma = L.sigma;
        step.lifted = lift(X, L, imp->link_correction);
        for (auto t : imp->link_correction.members()) {
            const auto gi = L.global_index(imp->link_correction.dim() + static_cast<int>(L.sigma.size()), t);
            Face f = X.face(k - 1, gi);
            Face tau;
            for (auto vtx : f.vertices)
                if (!L.sigma.contains(Face{{vtx}})) tau.vertices.push_back(vtx);
            step.link_cochain.push_back(std::move(tau));
        }
        trace.final += coboundary(X, step.lifted);
        trace.gamma += step.lifted;
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

}  // namespace hdx
