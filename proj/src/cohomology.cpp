#include "hdx/cohomology.hpp"

#include <bit>
#include <mutex>

namespace hdx {

namespace {

std::vector<std::int64_t> level_weights(const Complex& X, int k) {
    std::vector<std::int64_t> w(X.num_faces(k));
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = X.top_count(k, i);
    return w;
}

// Minimum-mass element of start + span(rows); ties go to the canonically smaller vector.
struct CosetMin {
    std::int64_t mass = 0;
    Bits vec;
};

CosetMin coset_minimum(const Bits& start, const std::vector<Bits>& rows, const MassTable& mass) {
    CosetMin best{mass(start), start};
    Bits cur = start;
    const std::uint64_t count = std::uint64_t{1} << rows.size();
    for (std::uint64_t g = 1; g < count; ++g) {
        cur ^= rows[static_cast<std::size_t>(std::countr_zero(g))];
        const std::int64_t m = mass(cur);
        if (m < best.mass || (m == best.mass && cur < best.vec)) {
            best.mass = m;
            best.vec = cur;
        }
    }
    return best;
}

}  // namespace

const char* to_string(ExpansionMode mode) { return mode == ExpansionMode::Coboundary ? "coboundary" : "cocycle"; }

Cochain coboundary(const Complex& X, const Cochain& A) {
    X.check(A);
    const int k = A.dim();
    if (k >= X.dim()) throw Error(ErrorKind::BadDimension, "coboundary of a top-dimensional cochain");
    Cochain out = X.empty_cochain(k + 1);
    for (auto i : A.members())
        for (auto c : X.cofacets(k, i)) out.toggle(c);
    return out;
}

std::vector<Bits> coboundary_images(const Complex& X, int k) {
    if (k < -1 || k >= X.dim()) throw Error(ErrorKind::BadDimension, "coboundary images need -1 <= k < d");
    std::vector<Bits> images(X.num_faces(k), Bits(X.num_faces(k + 1)));
    for (std::size_t i = 0; i < images.size(); ++i)
        for (auto c : X.cofacets(k, i)) images[i].flip(c);
    return images;
}

Echelon coboundary_space(const Complex& X, int k, bool track_preimages) {
    const std::size_t n = X.num_faces(k);
    if (k == -1) return Echelon(n);
    auto images = coboundary_images(X, k - 1);
    if (!track_preimages) return Echelon::span_of(n, images);
    std::vector<Bits> tags(images.size(), Bits(images.size()));
    for (std::size_t i = 0; i < tags.size(); ++i) tags[i].set(i);
    return Echelon::span_of(n, images, tags);
}

Echelon cocycle_space(const Complex& X, int k) {
    const std::size_t n = X.num_faces(k);
    if (k == X.dim()) {
        std::vector<Bits> units(n, Bits(n));
        for (std::size_t i = 0; i < n; ++i) units[i].set(i);
        return Echelon::span_of(n, units);
    }
    return kernel_of(n, X.num_faces(k + 1), coboundary_images(X, k));
}

F2Basis space_basis(const Complex& X, int k, SpaceKind kind) {
    if (k < -1 || k > X.dim()) throw Error(ErrorKind::BadDimension, "space dimension outside -1..d");
    if (kind == SpaceKind::Coboundaries && k < 0) throw Error(ErrorKind::BadDimension, "coboundary space needs k >= 0");
    Echelon e = kind == SpaceKind::Cocycles ? cocycle_space(X, k) : coboundary_space(X, k);
    F2Basis basis;
    basis.k = k;
    basis.kind = kind;
    basis.pivots = e.pivots();
    for (const auto& r : e.rows()) basis.rows.emplace_back(X.id(), k, r);
    return basis;
}

CohomologyDims cohomology_dims(const Complex& X, int k) {
    if (k < -1 || k > X.dim()) throw Error(ErrorKind::BadDimension, "cohomology dimension outside -1..d");
    return {k, cocycle_space(X, k).rank(), coboundary_space(X, k).rank()};
}

CosystoleReport cosystole(const Complex& X, int k, const EnumerationOptions& opts) {
    if (k < 0 || k > X.dim()) throw Error(ErrorKind::BadDimension, "cosystole needs 0 <= k <= d");
    const Echelon Z = cocycle_space(X, k);
    const Echelon B = coboundary_space(X, k);
    require_enumerable(Z.rank(), opts.cap, "cosystole Z^" + std::to_string(k));

    Echelon extended = B;
    std::vector<Bits> classes;
    for (const auto& z : Z.rows()) {
        Bits rem = extended.reduce(z);
        if (rem.none()) continue;
        extended.insert(rem);
        classes.push_back(std::move(rem));
    }
    CosystoleReport report;
    report.k = k;
    if (classes.empty()) return report;

    const auto weights = level_weights(X, k);
    const MassTable mass(weights);
    const std::uint64_t count = std::uint64_t{1} << classes.size();
    const unsigned threads = resolve_threads(opts.threads);

    std::mutex guard;
    std::optional<CosetMin> best;
    parallel_ranges(1, count, threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
        std::optional<CosetMin> local;
        for (std::uint64_t c = lo; c < hi; ++c) {
            Bits h(X.num_faces(k));
            for (std::size_t b = 0; b < classes.size(); ++b)
                if ((c >> b) & 1U) h ^= classes[b];
            CosetMin m = coset_minimum(h, B.rows(), mass);
            if (!local || m.mass < local->mass || (m.mass == local->mass && m.vec < local->vec)) local = std::move(m);
        }
        std::lock_guard lock(guard);
        if (local && (!best || local->mass < best->mass || (local->mass == best->mass && local->vec < best->vec)))
            best = std::move(local);
    });
    report.value = make_rat(best->mass, X.denominator(k));
    report.witness = Cochain(X.id(), k, best->vec);
    return report;
}

ExpansionReport expansion(const Complex& X, int k, ExpansionMode mode, const EnumerationOptions& opts) {
    if (k < 0 || k >= X.dim()) throw Error(ErrorKind::BadDimension, "expansion needs 0 <= k <= d-1");
    const std::size_t n = X.num_faces(k);
    require_enumerable(n, opts.cap, "expansion over C^" + std::to_string(k));

    const Echelon S = mode == ExpansionMode::Coboundary ? coboundary_space(X, k) : cocycle_space(X, k);
    const auto free = S.free_columns();
    ExpansionReport report;
    report.k = k;
    report.mode = mode;
    if (free.empty()) return report;

    const auto wk = level_weights(X, k);
    const auto wk1 = level_weights(X, k + 1);
    const MassTable mass(wk), mass_up(wk1);
    const auto images = coboundary_images(X, k);

    struct Candidate {
        std::int64_t delta_mass;
        CosetMin min;
    };
    // ratio delta/min, then canonical witness order
    auto better = [](const Candidate& a, const Candidate& b) {
        const __int128 lhs = static_cast<__int128>(a.delta_mass) * b.min.mass;
        const __int128 rhs = static_cast<__int128>(b.delta_mass) * a.min.mass;
        if (lhs != rhs) return lhs < rhs;
        return a.min.vec < b.min.vec;
    };

    std::mutex guard;
    std::optional<Candidate> best;
    const std::uint64_t count = std::uint64_t{1} << free.size();
    parallel_ranges(1, count, resolve_threads(opts.threads), [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
        std::optional<Candidate> local;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            Bits rep(n), delta(X.num_faces(k + 1));
            for (std::size_t b = 0; b < free.size(); ++b) {
                if ((idx >> b) & 1U) {
                    rep.set(free[b]);
                    delta ^= images[free[b]];
                }
            }
            Candidate c{mass_up(delta), coset_minimum(rep, S.rows(), mass)};
            if (!local || better(c, *local)) local = std::move(c);
        }
        std::lock_guard lock(guard);
        if (local && (!best || better(*local, *best))) best = std::move(local);
    });

    report.value = make_rat(BigInt(static_cast<long>(best->delta_mass)) * X.denominator(k),
                            BigInt(static_cast<long>(best->min.mass)) * X.denominator(k + 1));
    report.witness = Cochain(X.id(), k, best->min.vec);
    return report;
}

}  // namespace hdx
