#include <doctest.h>

#include <random>

#include "hdx/criterion.hpp"
#include "hdx/fat.hpp"
#include "hdx/generators.hpp"
#include "hdx/minimize.hpp"
#include "oracles.hpp"

using namespace hdx;

namespace {

// S^{i-1} = { sigma in X(i-1) : ||I_sigma(S^i)||_sigma >= eta^(2^(k-i)) }, through real links.
std::vector<Cochain> fat_oracle(const Complex& X, const Cochain& A, const Rat& eta) {
    const int k = A.dim();
    std::vector<Cochain> S(static_cast<std::size_t>(k + 2));
    S[static_cast<std::size_t>(k + 1)] = A;
    for (int i = k; i >= 0; --i) {
        const Rat bar = pow(eta, 1UL << (k - i));
        Cochain lower = X.empty_cochain(i - 1);
        for (std::size_t s = 0; s < X.num_faces(i - 1); ++s) {
            Link L = link(X, X.face(i - 1, s));
            if (L.complex.norm(localize(X, L, S[static_cast<std::size_t>(i + 1)])) >= bar) lower.insert(s);
        }
        S[static_cast<std::size_t>(i)] = lower;
    }
    return S;
}

bool fat(const std::vector<Cochain>& S, const Complex& X, const Face& f) {
    return S[static_cast<std::size_t>(f.dim() + 1)].contains(X.index_of(f));
}

// Members of A reachable from sigma by a chain of fat faces, one vertex at a time.
Cochain ladder_oracle(const Complex& X, const std::vector<Cochain>& S, const Face& sigma, int k) {
    Cochain out = X.empty_cochain(k);
    if (!fat(S, X, sigma)) return out;
    auto rec = [&](auto&& self, const Face& cur) -> void {
        if (cur.dim() == k) {
            out.insert(X.index_of(cur));
            return;
        }
        for (const auto& up : X.faces(cur.dim() + 1))
            if (up.contains(cur) && fat(S, X, up)) self(self, up);
    };
    rec(rec, sigma);
    return out;
}

// (k+1)-faces holding two equal-size fat faces that meet in a non-fat codim-1 face.
Cochain upsilon_oracle(const Complex& X, const std::vector<Cochain>& S, int k) {
    Cochain out = X.empty_cochain(k + 1);
    for (std::size_t p = 0; p < X.num_faces(k + 1); ++p) {
        const Face& P = X.face(k + 1, p);
        bool degenerate = false;
        for (int j = 0; j <= k && !degenerate; ++j) {
            for (const auto& a : X.faces(j)) {
                if (!P.contains(a) || !fat(S, X, a)) continue;
                for (const auto& b : X.faces(j)) {
                    if (!(a < b) || !P.contains(b) || !fat(S, X, b)) continue;
                    Face m = face_intersection(a, b);
                    if (m.dim() == j - 1 && !fat(S, X, m)) degenerate = true;
                }
            }
        }
        if (degenerate) out.insert(p);
    }
    return out;
}

Rat random_eta(std::mt19937_64& rng) {
    const long den = 2 + static_cast<long>(rng() % 15);
    const long num = 1 + static_cast<long>(rng() % static_cast<unsigned long>(den - 1));
    return make_rat(num, den);
}

}  // namespace

TEST_CASE("empty cochain has no fat faces") {
    Complex X = complete(5, 2);
    FatProfile P = fat_profile(X, X.empty_cochain(1), make_rat(1, 2));
    for (int i = -1; i <= 1; ++i) CHECK(P.S(i).empty());
    for (int i = -1; i <= 1; ++i) CHECK(P.L(i).empty());
    CHECK(P.upsilon.empty());
    CHECK(verify_seep(X, X.empty_cochain(1), make_rat(1, 2), make_rat(1)).pass);
    CHECK(verify_upsilon_bound(X, X.empty_cochain(1), make_rat(1, 2), make_rat(0)).pass);
}

TEST_CASE("eta range") {
    Complex X = complete(4, 2);
    CHECK_THROWS_AS(fat_profile(X, X.empty_cochain(0), make_rat(0)), Error);
    CHECK_THROWS_AS(fat_profile(X, X.empty_cochain(0), make_rat(1)), Error);
}

TEST_CASE("fat profile matches the definition") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        const int d = 2 + static_cast<int>(rng() % 2);
        Complex X = oracle::random_complex(rng, d + 3, d, 0.6);
        const int k = static_cast<int>(rng() % static_cast<unsigned long>(d));
        Cochain A = oracle::random_cochain(rng, X, k, 0.5);
        const Rat eta = random_eta(rng);
        FatProfile P = fat_profile(X, A, eta);
        auto S = fat_oracle(X, A, eta);
        for (int i = -1; i <= k; ++i) CHECK(P.S(i) == S[static_cast<std::size_t>(i + 1)]);
        CHECK(P.upsilon == upsilon_oracle(X, S, k));
        for (int i = -1; i <= k; ++i) {
            Cochain L = X.empty_cochain(k);
            for (const auto& f : X.faces(i)) {
                Cochain l = ladder_oracle(X, S, f, k);
                CHECK(ladder_from(X, P, f) == l);
                L.bits() |= l.bits();
            }
            CHECK(P.L(i) == L);
        }
    }
}

TEST_CASE("too small eta for the measured link alpha") {
    Complex X = complete(5, 2);
    CHECK_THROWS_AS(verify_upsilon_bound(X, X.empty_cochain(1), make_rat(1, 2), make_rat(1, 8)), Error);
}

TEST_CASE("seep check needs a locally minimal cochain") {
    Complex K = complete(5, 2);
    Cochain star = container(K, K.cochain_of_faces(0, {K.face_from_names({"0"})}), 1);
    REQUIRE_FALSE(is_locally_minimal(K, star));
    try {
        verify_seep(K, star, make_rat(1, 2), make_rat(1));
        FAIL("expected PreconditionUnverified");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PreconditionUnverified);
    }
}

TEST_CASE("seepage on complete(6,2)") {
    Complex X = complete(6, 2);
    const Rat beta = seep_beta(X, 1);
    CHECK(beta > 0);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        Cochain A = locally_minimize(X, oracle::random_cochain(rng, X, 1, 0.3)).final;
        for (Rat eta : {make_rat(1, 8), make_rat(1, 3), make_rat(3, 4)}) {
            auto r = verify_seep(X, A, eta, beta);
            CHECK(r.pass);
            CHECK(r.rows.size() == 2);
        }
    }
}
