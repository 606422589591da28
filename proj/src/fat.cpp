#include "hdx/fat.hpp"

#include "hdx/minimize.hpp"

namespace hdx {

namespace {

void check_eta(const Rat& eta) {
    if (eta <= 0 || eta >= 1) throw Error(ErrorKind::BadEta, "eta must lie in (0,1), got " + eta.get_str());
}

// Upward reachability through fat faces, starting from `start` at dimension i.
Cochain climb(const Complex& X, const FatProfile& P, Cochain start, int i) {
    for (int j = i; j < P.k; ++j) {
        Cochain up = X.empty_cochain(j + 1);
        for (auto s : start.members())
            for (auto c : X.cofacets(j, s))
                if (P.S(j + 1).contains(c)) up.insert(c);
        start = std::move(up);
    }
    return start;
}

}  // namespace

Rat fatness_threshold(const Rat& eta, int k, int i) { return pow(eta, 1UL << static_cast<unsigned>(k - i)); }

FatProfile fat_profile(const Complex& X, const Cochain& A, const Rat& eta) {
    X.check(A);
    check_eta(eta);
    const int k = A.dim();
    const int d = X.dim();
    if (k < 0 || k > d - 1) throw Error(ErrorKind::BadDimension, "fat profile needs 0 <= k <= d-1");

    FatProfile P;
    P.k = k;
    P.eta = eta;
    P.A = A;
    P.fat.assign(static_cast<std::size_t>(k + 2), Cochain());
    P.fat[static_cast<std::size_t>(k + 1)] = A;

    for (int i = k; i >= 0; --i) {
        const Cochain& upper = P.S(i);
        std::vector<std::int64_t> local(X.num_faces(i - 1), 0);
        for (auto t : upper.members()) {
            const auto w = X.top_count(i, t);
            if (i == 0)
                local[0] += w;
            else
                for (auto f : X.facets(i, t)) local[f] += w;
        }
        // sigma in X(i-1), |sigma| = i: ||I_sigma(S^i)||_sigma = local / ((d+1-i) top(sigma))
        const Rat threshold = fatness_threshold(eta, k, i);
        Cochain lower = X.empty_cochain(i - 1);
        for (std::size_t s = 0; s < local.size(); ++s) {
            if (local[s] == 0) continue;
            const BigInt lhs = BigInt(static_cast<long>(local[s])) * threshold.get_den();
            const BigInt rhs = threshold.get_num() * BigInt(static_cast<long>((d + 1 - i) * X.top_count(i - 1, s)));
            if (lhs >= rhs) lower.insert(s);
        }
        P.fat[static_cast<std::size_t>(i)] = std::move(lower);
    }

    P.ladders.reserve(static_cast<std::size_t>(k + 2));
    for (int i = -1; i <= k; ++i) P.ladders.push_back(climb(X, P, P.S(i), i));

    // dead-ends: two fat j-faces meeting in a non-fat (j-1)-face, indexed by that face
    std::vector<Cochain> unions;
    for (int j = 0; j <= k; ++j) {
        Cochain U = X.empty_cochain(j + 1);
        for (std::size_t r = 0; r < X.num_faces(j - 1); ++r) {
            if (P.S(j - 1).contains(r)) continue;
            std::vector<std::uint32_t> fat_up;
            for (auto c : X.cofacets(j - 1, r))
                if (P.S(j).contains(c)) fat_up.push_back(c);
            for (std::size_t a = 0; a < fat_up.size(); ++a) {
                for (std::size_t b = a + 1; b < fat_up.size(); ++b) {
                    auto u = X.find(face_union(X.face(j, fat_up[a]), X.face(j, fat_up[b])));
                    if (u) U.insert(*u);
                }
            }
        }
        unions.push_back(std::move(U));
    }
    P.upsilon = X.empty_cochain(k + 1);
    for (auto& U : unions) P.upsilon.bits() |= container(X, U, k + 1).bits();
    return P;
}

Cochain ladder_from(const Complex& X, const FatProfile& P, const Face& sigma) {
    const int i = sigma.dim();
    if (i < -1 || i > P.k) return X.empty_cochain(P.k);
    Cochain start = X.empty_cochain(i);
    const auto idx = X.index_of(sigma);
    if (P.S(i).contains(idx)) start.insert(idx);
    return climb(X, P, std::move(start), i);
}

SeepReport verify_seep(const Complex& X, const Cochain& A, const Rat& eta, const Rat& beta,
                       const EnumerationOptions& opts) {
    X.check(A);
    check_eta(eta);
    if (beta <= 0) throw Error(ErrorKind::BadParam, "beta must be positive");
    const int k = A.dim();
    if (k < 0 || k >= X.dim()) throw Error(ErrorKind::BadDimension, "seep check needs 0 <= k <= d-1");
    if (!is_locally_minimal(X, A, opts))
        throw Error(ErrorKind::PreconditionUnverified, "the cochain is not locally minimal");

    const FatProfile P = fat_profile(X, A, eta);
    SeepReport report;
    report.k = k;
    report.eta = eta;
    report.beta = beta;
    report.pass = true;
    const Rat delta_norm = X.norm(coboundary(X, A));
    const Rat upsilon_norm = X.norm(P.upsilon);
    for (int i = 0; i <= k; ++i) {
        SeepRow row;
        row.i = i;
        row.lhs = beta / Rat(binomial(k + 2, i + 1)) * X.norm(P.L(i));
        row.delta_norm = delta_norm;
        row.ladder_below = X.norm(P.L(i - 1));
        row.upsilon_norm = upsilon_norm;
        row.rhs = delta_norm + Rat(k + 2) * row.ladder_below + upsilon_norm;
        row.pass = row.lhs <= row.rhs;
        report.pass = report.pass && row.pass;
        report.rows.push_back(std::move(row));
    }
    return report;
}

UpsilonReport verify_upsilon_bound(const Complex& X, const Cochain& A, const Rat& eta, const Rat& link_alpha) {
    X.check(A);
    check_eta(eta);
    const int k = A.dim();
    UpsilonReport report;
    report.k = k;
    report.eta = eta;
    report.link_alpha = link_alpha;
    report.alpha_bound = fatness_threshold(eta, k, -1);
    if (link_alpha > report.alpha_bound)
        throw Error(ErrorKind::HypothesisFailed, "link skeleton expansion alpha* = " + link_alpha.get_str() +
                                                     " exceeds eta^(2^(k+1)) = " + report.alpha_bound.get_str());
    const FatProfile P = fat_profile(X, A, eta);
    report.upsilon_norm = X.norm(P.upsilon);
    report.rhs = Rat((k + 2) * (std::int64_t{1} << (k + 4))) * eta * X.norm(A);
    report.pass = report.upsilon_norm <= report.rhs;
    return report;
}

}  // namespace hdx
