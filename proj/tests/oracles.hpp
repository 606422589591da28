#pragma once

// Brute-force reference implementations straight from the definitions.
// Nothing here calls the search code under test; only the face tables of
// Complex are shared.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/rational.hpp"

namespace oracle {

using hdx::Complex;
using hdx::Cochain;
using hdx::ExtRat;
using hdx::Face;
using hdx::Rat;

inline std::vector<std::vector<int>> subsets_of_size(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Random pure d-complex: each (d+1)-subset of n vertices is kept with
/// probability p (at least one is kept).
inline Complex random_complex(std::mt19937_64& rng, int n, int d, double p) {
    auto all = subsets_of_size(n, d + 1);
    std::bernoulli_distribution keep(p);
    std::vector<std::vector<std::string>> tops;
    for (const auto& s : all) {
        if (!keep(rng)) continue;
        std::vector<std::string> f;
        for (int v : s) f.push_back(std::to_string(v));
        tops.push_back(f);
    }
    if (tops.empty()) {
        std::vector<std::string> f;
        for (int v : all[rng() % all.size()]) f.push_back(std::to_string(v));
        tops.push_back(f);
    }
    return Complex::build(tops);
}

inline Cochain random_cochain(std::mt19937_64& rng, const Complex& X, int k, double p) {
    Cochain A = X.empty_cochain(k);
    std::bernoulli_distribution keep(p);
    for (std::size_t i = 0; i < X.num_faces(k); ++i)
        if (keep(rng)) A.insert(i);
    return A;
}

/// w(sigma) = #{top faces containing sigma} / (C(d+1,|sigma|) |X(d)|), by scanning X(d).
inline Rat weight(const Complex& X, const Face& sigma) {
    const int d = X.dim();
    std::int64_t count = 0;
    for (const auto& F : X.faces(d))
        if (std::includes(F.vertices.begin(), F.vertices.end(), sigma.vertices.begin(), sigma.vertices.end())) ++count;
    return hdx::make_rat(count, hdx::binomial(d + 1, static_cast<std::int64_t>(sigma.size())) *
                                    static_cast<std::int64_t>(X.num_faces(d)));
}

inline Rat norm(const Complex& X, const Cochain& A) {
    Rat s = 0;
    for (auto i : A.members()) s += oracle::weight(X, X.face(A.dim(), i));
    return s;
}

/// delta(A): (k+1)-faces with an odd number of facets in A, by removing vertices.
inline Cochain coboundary(const Complex& X, const Cochain& A) {
    const int k = A.dim();
    Cochain out = X.empty_cochain(k + 1);
    for (std::size_t j = 0; j < X.num_faces(k + 1); ++j) {
        const Face& t = X.face(k + 1, j);
        int parity = 0;
        for (std::size_t drop = 0; drop < t.size(); ++drop) {
            Face f;
            for (std::size_t m = 0; m < t.size(); ++m)
                if (m != drop) f.vertices.push_back(t.vertices[m]);
            if (A.contains(X.index_of(f))) parity ^= 1;
        }
        if (parity) out.insert(j);
    }
    return out;
}

/// Cochains on at most 63 faces as plain masks.
inline std::uint64_t mask_of(const Cochain& A) { return A.bits().word_count() ? A.bits().word(0) : 0; }

inline Cochain from_mask(const Complex& X, int k, std::uint64_t m) {
    Cochain A = X.empty_cochain(k);
    for (std::size_t i = 0; i < X.num_faces(k); ++i)
        if ((m >> i) & 1U) A.insert(i);
    return A;
}

inline std::vector<std::int64_t> masses(const Complex& X, int k) {
    std::vector<std::int64_t> w(X.num_faces(k));
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = X.top_count(k, i);
    return w;
}

inline std::int64_t mass(const std::vector<std::int64_t>& w, std::uint64_t m) {
    std::int64_t s = 0;
    for (std::size_t i = 0; m; ++i, m >>= 1)
        if (m & 1U) s += w[i];
    return s;
}

/// B^k as a set of masks: the span of the coboundaries of single (k-1)-faces,
/// closed under sums (k >= 0; C^{-1} holds the empty face).
inline std::vector<std::uint64_t> coboundaries(const Complex& X, int k) {
    std::unordered_set<std::uint64_t> span{0};
    for (std::size_t f = 0; f < X.num_faces(k - 1); ++f) {
        Cochain e = X.empty_cochain(k - 1);
        e.insert(f);
        const std::uint64_t g = mask_of(oracle::coboundary(X, e));
        std::vector<std::uint64_t> grown;
        for (auto s : span)
            if (!span.count(s ^ g)) grown.push_back(s ^ g);
        span.insert(grown.begin(), grown.end());
    }
    std::vector<std::uint64_t> out(span.begin(), span.end());
    std::sort(out.begin(), out.end());
    return out;
}

/// Z^k as masks, by scanning all of C^k.
inline std::vector<std::uint64_t> cocycles(const Complex& X, int k) {
    std::vector<std::uint64_t> out;
    const std::size_t n = X.num_faces(k);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (k == X.dim() || oracle::coboundary(X, from_mask(X, k, m)).empty()) out.push_back(m);
    }
    return out;
}

/// Distance (as mass) from m to the subspace S.
inline std::int64_t dist_mass(const std::vector<std::int64_t>& w, std::uint64_t m, const std::vector<std::uint64_t>& S) {
    std::int64_t best = -1;
    for (auto s : S) {
        std::int64_t v = mass(w, m ^ s);
        if (best < 0 || v < best) best = v;
    }
    return best;
}

/// min over A outside S of ||delta A|| / dist(A, S), scanning all of C^k.
inline ExtRat expansion(const Complex& X, int k, bool cocycle_mode) {
    const auto S = cocycle_mode ? cocycles(X, k) : coboundaries(X, k);
    const auto w = masses(X, k);
    const std::size_t n = X.num_faces(k);
    const std::unordered_set<std::uint64_t> inS(S.begin(), S.end());
    ExtRat best = ExtRat::infinity();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (inS.count(m)) continue;
        Cochain A = from_mask(X, k, m);
        Rat ratio = oracle::norm(X, oracle::coboundary(X, A)) /
                    hdx::make_rat(dist_mass(w, m, S), X.denominator(k));
        if (ExtRat(ratio) < best) best = ratio;
    }
    return best;
}

inline ExtRat cosystole(const Complex& X, int k) {
    const auto Z = cocycles(X, k);
    const auto B = coboundaries(X, k);
    const std::unordered_set<std::uint64_t> inB(B.begin(), B.end());
    const auto w = masses(X, k);
    ExtRat best = ExtRat::infinity();
    for (auto z : Z) {
        if (inB.count(z)) continue;
        Rat v = hdx::make_rat(mass(w, z), X.denominator(k));
        if (ExtRat(v) < best) best = v;
    }
    return best;
}

struct FlatScan {
    ExtRat exp_b, exp_z, syst;
};

/// Exp_b^k, Exp_z^k and Syst^k in one pass over all 2^|X(k)| cochains; the
/// distance to a subspace is the least mass in the coset. Needs |X(k)| <= 20.
inline FlatScan flat_scan(const Complex& X, int k) {
    const std::size_t n = X.num_faces(k);
    const std::uint64_t total = std::uint64_t{1} << n;
    const auto w = masses(X, k);
    const bool top = k == X.dim();

    std::vector<hdx::Bits> image(n);
    std::vector<std::int64_t> up_mass;
    if (!top) {
        up_mass = masses(X, k + 1);
        for (std::size_t i = 0; i < n; ++i) {
            Cochain e = X.empty_cochain(k);
            e.insert(i);
            image[i] = oracle::coboundary(X, e).bits();
        }
    }
    std::vector<std::int64_t> m_of(total), dmass(total, 0);
    for (std::uint64_t m = 0; m < total; ++m) {
        m_of[m] = mass(w, m);
        if (top) continue;
        hdx::Bits d(X.num_faces(k + 1));
        for (std::size_t i = 0; i < n; ++i)
            if ((m >> i) & 1U) d ^= image[i];
        for (auto j : d.indices()) dmass[m] += up_mass[j];
    }

    auto coset_min = [&](const std::vector<std::uint64_t>& S) {
        std::vector<std::int64_t> best(total, -1);
        for (std::uint64_t m = 0; m < total; ++m) {
            if (best[m] >= 0) continue;
            std::int64_t lo = -1;
            for (auto s : S) lo = (lo < 0 || m_of[m ^ s] < lo) ? m_of[m ^ s] : lo;
            for (auto s : S) best[m ^ s] = lo;
        }
        return best;
    };
    const auto B = coboundaries(X, k);
    std::vector<std::uint64_t> Z;
    // every face has positive mass, so zero coboundary mass means a cocycle
    for (std::uint64_t m = 0; m < total; ++m)
        if (dmass[m] == 0) Z.push_back(m);
    const std::unordered_set<std::uint64_t> inB(B.begin(), B.end()), inZ(Z.begin(), Z.end());

    FlatScan out;
    const std::int64_t up_den = top ? 1 : X.denominator(k + 1);
    auto ratio = [&](std::uint64_t m, std::int64_t dist) -> Rat {
        return hdx::make_rat(dmass[m], up_den) / hdx::make_rat(dist, X.denominator(k));
    };
    if (!top) {
        const auto nb = coset_min(B), nz = coset_min(Z);
        for (std::uint64_t m = 0; m < total; ++m) {
            if (!inB.count(m)) {
                ExtRat r = ratio(m, nb[m]);
                if (r < out.exp_b) out.exp_b = r;
            }
            if (!inZ.count(m)) {
                ExtRat r = ratio(m, nz[m]);
                if (r < out.exp_z) out.exp_z = r;
            }
        }
    }
    for (auto z : Z) {
        if (inB.count(z)) continue;
        ExtRat v = hdx::make_rat(m_of[z], X.denominator(k));
        if (v < out.syst) out.syst = v;
    }
    return out;
}

/// ||A|| <= ||A + b|| for every b in B^k.
inline bool is_minimal(const Complex& X, const Cochain& A) {
    const auto B = coboundaries(X, A.dim());
    const auto w = masses(X, A.dim());
    const std::uint64_t m = mask_of(A);
    return dist_mass(w, m, B) == mass(w, m);
}

/// Every localization minimal in its link, via the reference minimality.
inline bool is_locally_minimal(const Complex& X, const Cochain& A) {
    const int k = A.dim();
    for (int s = 1; s <= k + 1 && s <= X.dim(); ++s) {
        for (const auto& sigma : X.faces(s - 1)) {
            hdx::Link L = hdx::link(X, sigma);
            Cochain loc = hdx::localize(X, L, A);
            if (loc.dim() < 0) {
                // C^{-1} of the link: B^{-1} = 0, so every (-1)-cochain is minimal.
                continue;
            }
            if (!oracle::is_minimal(L.complex, loc)) return false;
        }
    }
    return true;
}

/// Normalized edge count E(A,B) from the definition.
inline Rat edges_between(const Complex& X, std::uint64_t a, std::uint64_t b) {
    Rat s = 0;
    for (std::size_t e = 0; e < X.num_faces(1); ++e) {
        const auto& f = X.face(1, e);
        auto x = static_cast<unsigned>(f.vertices[0]), y = static_cast<unsigned>(f.vertices[1]);
        bool in = (((a >> x) & 1U) && ((b >> y) & 1U)) || (((a >> y) & 1U) && ((b >> x) & 1U));
        if (in) s += oracle::weight(X, f);
    }
    return s;
}

}  // namespace oracle
