#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "hdx/generators.hpp"
#include "hdx/spectral.hpp"
#include "oracles.hpp"

using namespace hdx;

namespace {

// Eigenvalues of the bipartite adjacency matrix, descending, from Eigen.
std::vector<double> eigen_spectrum(const BipartiteTypeGraph& G) {
    const auto a = static_cast<Eigen::Index>(G.left.size());
    const auto n = a + static_cast<Eigen::Index>(G.right.size());
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (auto [l, r] : G.edges) {
        M(static_cast<Eigen::Index>(l), a + static_cast<Eigen::Index>(r)) = 1;
        M(a + static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(l)) = 1;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(v.rbegin(), v.rend());
    return v;
}

Complex six_cycle_bipartite() {
    return Complex::build({{"a0", "b0"}, {"b0", "a1"}, {"a1", "b1"}, {"b1", "a2"}, {"a2", "b2"}, {"b2", "a0"}});
}

}  // namespace

TEST_CASE("jacobi against Eigen on random symmetric matrices") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng() % 12;
        std::vector<double> m(n * n);
        Eigen::MatrixXd M(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                double x = u(rng);
                m[i * n + j] = m[j * n + i] = x;
                M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = x;
                M(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = x;
            }
        auto ours = jacobi_eigen(m, n);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
        std::vector<double> ref(es.eigenvalues().data(), es.eigenvalues().data() + n);
        std::sort(ref.rbegin(), ref.rend());
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ours.values[i] - ref[i]) < 1e-9);
        CHECK(ours.off_diagonal < 1e-9);
    }
}

TEST_CASE("regularity of complete partite complexes") {
    for (int d = 1; d <= 3; ++d) {
        for (int m = 1; m <= 3; ++m) {
            Generated P = complete_partite(d, m);
            auto r = regularity(P.complex, P.types);
            REQUIRE(r.regular());
            const unsigned full = (1U << (d + 1)) - 1;
            // extending a type-I face to a type-J face: m choices per missing type
            for (auto [key, value] : r.structure->table) {
                auto [I, J] = key;
                CHECK(value == static_cast<std::int64_t>(std::pow(m, std::popcount(J) - std::popcount(I))));
            }
            CHECK(r.structure->count(0, full) == static_cast<std::int64_t>(std::pow(m, d + 1)));
        }
    }
}

TEST_CASE("typing failures") {
    Complex K4 = Complex::build({{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
    CHECK_THROWS_AS(infer_types(K4), Error);
    CHECK_THROWS_AS(regularity(K4), Error);
    Complex path = Complex::build({{"a", "b"}, {"b", "c"}, {"c", "d"}});
    auto r = regularity(path);
    CHECK_FALSE(r.regular());
    REQUIRE(r.violation.has_value());
}

TEST_CASE("flag complex of F_2^3") {
    Generated P = projective_flag(2, 3);
    auto r = regularity(P.complex, P.types);
    REQUIRE(r.regular());
    CHECK(r.structure->count(0, 1) == 7);
    auto G = type_graph(P.complex, *r.structure, 0, 1);
    CHECK(G.left_degree == 3);
    CHECK(G.right_degree == 3);
    auto s = lambda2(G);
    CHECK(std::abs(s.lambda2_normalized - std::sqrt(2.0) / 3.0) < 1e-9);
    CHECK(std::abs(s.lambda1 - 3.0) < 1e-9);
    auto ref = eigen_spectrum(G);
    CHECK(std::abs(ref[1] / ref[0] - s.lambda2_normalized) < 1e-9);

    auto inferred = regularity(P.complex);
    REQUIRE(inferred.regular());
    CHECK(std::abs(lambda_max(P.complex, *inferred.structure).value - std::sqrt(2.0) / 3.0) < 1e-9);
}

TEST_CASE("complete bipartite and six-cycle") {
    for (int a = 1; a <= 6; ++a) {
        for (int b = 1; b <= 6; ++b) {
            std::vector<std::vector<std::string>> edges;
            for (int x = 0; x < a; ++x)
                for (int y = 0; y < b; ++y) edges.push_back({"l" + std::to_string(x), "r" + std::to_string(y)});
            Complex K = Complex::build(edges);
            auto r = regularity(K);
            REQUIRE(r.regular());
            auto L = lambda_max(K, *r.structure);
            CHECK(std::abs(L.value) < 1e-9);
            CHECK(std::abs(L.pairs[0].lambda1 - std::sqrt(a * b)) < 1e-9);
        }
    }
    Complex C6 = six_cycle_bipartite();
    auto r = regularity(C6);
    REQUIRE(r.regular());
    CHECK(std::abs(lambda_max(C6, *r.structure).value - 0.5) < 1e-9);
}

TEST_CASE("mixing examples") {
    Generated K22 = complete_partite(1, 2);
    const Complex& X = K22.complex;
    auto m0 = mixing_check(X, 0.0, X.empty_cochain(0), X.empty_cochain(0));
    CHECK(m0.verdict == Verdict::Pass);
    Cochain A = X.empty_cochain(0), B = X.empty_cochain(0);
    for (std::size_t v = 0; v < X.num_vertices(); ++v) ((*K22.types)[v] == 0 ? A : B).insert(v);
    auto m = mixing_check(X, 0.0, A, B);
    CHECK(m.lhs == 1);
    CHECK(m.rhs == doctest::Approx(1.0));
    CHECK(m.verdict != Verdict::Fail);
}

TEST_CASE("mixing scan matches a direct scan") {
    Generated P = complete_partite(2, 2);
    const Complex& X = P.complex;
    auto r = regularity(X, P.types);
    const double lam = lambda_max(X, *r.structure).value;
    auto scan = mixing_scan(X, lam, kDefaultCap, 2);
    const std::size_t n = X.num_vertices();
    CHECK(scan.pairs == (std::uint64_t{1} << (2 * n)));
    std::uint64_t fails = 0;
    const double c = 2.0 * (X.dim() + 1) / X.dim();
    for (std::uint64_t a = 0; a < (1U << n); ++a)
        for (std::uint64_t b = 0; b < (1U << n); ++b) {
            const double lhs = oracle::edges_between(X, a, b).get_d();
            const double na = oracle::norm(X, oracle::from_mask(X, 0, a)).get_d();
            const double nb = oracle::norm(X, oracle::from_mask(X, 0, b)).get_d();
            if (lhs > c * (na * nb + lam * std::sqrt(na * nb)) + kMixingSlack) ++fails;
        }
    CHECK(scan.failures == fails);
    CHECK(fails == 0);
}

TEST_CASE("exhaustive alpha") {
    Complex T = Complex::build({{"a", "b", "c"}});
    auto a = skeleton_alpha_exhaustive(T);
    REQUIRE(a.exact.has_value());
    // reference: max over the 7 nonempty subsets
    Rat best = 0;
    for (std::uint64_t m = 1; m < 8; ++m) {
        Rat nA = oracle::norm(T, oracle::from_mask(T, 0, m));
        Rat e = oracle::edges_between(T, m, m);
        Rat v = (e / 4 - nA * nA) / nA;
        if (v > best) best = v;
    }
    CHECK(*a.exact == best);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Complex X = oracle::random_complex(rng, 6, 1 + static_cast<int>(rng() % 2), 0.5);
        Rat ref = 0;
        for (std::uint64_t m = 1; m < (1U << X.num_vertices()); ++m) {
            Rat nA = oracle::norm(X, oracle::from_mask(X, 0, m));
            Rat v = (oracle::edges_between(X, m, m) / 4 - nA * nA) / nA;
            if (v > ref) ref = v;
        }
        CHECK(*skeleton_alpha_exhaustive(X, 20, 1).exact == ref);
        CHECK(*skeleton_alpha_exhaustive(X, 20, 3).exact == ref);
    }
}

TEST_CASE("spectral alpha fallback") {
    Generated P = projective_flag(2, 3);
    AlphaOptions o;
    o.max_vertices = 8;
    o.types = P.types;
    auto a = skeleton_alpha(P.complex, o);
    CHECK(a.mode == AlphaMode::Spectral);
    CHECK(std::abs(a.value - std::sqrt(2.0) / 3.0) < 1e-9);
    auto e = skeleton_alpha_exhaustive(P.complex);
    CHECK(e.value <= a.value + 1e-9);
}
