#include <doctest.h>

#include <random>

#include "hdx/complex.hpp"
#include "hdx/generators.hpp"
#include "oracles.hpp"

using namespace hdx;

namespace {

Complex triangle() { return Complex::build({{"a", "b", "c"}}); }

Cochain faces_named(const Complex& X, int k, const std::vector<std::vector<std::string>>& names) {
    std::vector<Face> fs;
    for (const auto& n : names) fs.push_back(X.face_from_names(n));
    return X.cochain_of_faces(k, fs);
}

}  // namespace

TEST_CASE("closure of a single simplex") {
    Complex X = triangle();
    CHECK(X.dim() == 2);
    CHECK(X.num_faces(-1) == 1);
    CHECK(X.num_faces(0) == 3);
    CHECK(X.num_faces(1) == 3);
    CHECK(X.num_faces(2) == 1);
}

TEST_CASE("cycle closure and purity") {
    Complex C3 = Complex::build({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(C3.dim() == 1);
    CHECK(C3.num_faces(1) == 3);
    try {
        Complex::build({{"a", "b", "c"}, {"c", "d"}});
        FAIL("expected NotPure");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPure);
    }
}

TEST_CASE("vertex order is natural") {
    Complex X = Complex::build({{"10", "2", "b"}, {"a", "2", "10"}});
    CHECK(X.vertex_name(0) == "2");
    CHECK(X.vertex_name(1) == "10");
    CHECK(X.vertex_name(2) == "a");
}

TEST_CASE("weights") {
    Complex T = triangle();
    CHECK(T.weight(T.face_from_names({"a"})) == make_rat(1, 3));
    Complex K = complete(4, 2);
    CHECK(K.weight(K.face_from_names({"0"})) == make_rat(1, 4));
    CHECK(K.weight(Face{}) == 1);
    for (int k = -1; k <= 2; ++k) CHECK(K.norm(K.full_cochain(k)) == 1);
}

TEST_CASE("norms on complete(4,2)") {
    Complex K = complete(4, 2);
    CHECK(K.norm(K.empty_cochain(1)) == 0);
    Cochain star = faces_named(K, 1, {{"0", "1"}, {"0", "2"}, {"0", "3"}});
    CHECK(K.norm(star) == make_rat(1, 2));
}

TEST_CASE("container") {
    Complex K = complete(4, 2);
    Cochain v = faces_named(K, 0, {{"0"}});
    Cochain g = container(K, v, 1);
    CHECK(g.count() == 3);
    CHECK(K.norm(g) == make_rat(1, 2));
    CHECK(K.norm(g) == 2 * K.norm(v));
    CHECK(container(K, v, 0) == v);
    CHECK(container(K, K.empty_cochain(0), 2).empty());
}

TEST_CASE("links") {
    Complex K = complete(4, 2);
    Link L = link(K, K.face_from_names({"0"}));
    CHECK(L.complex.dim() == 1);
    CHECK(L.complex.num_faces(0) == 3);
    CHECK(L.complex.num_faces(1) == 3);

    Link E = link(K, Face{});
    CHECK(E.complex.same_as(K));

    Complex T = triangle();
    Link Le = link(T, T.face_from_names({"a", "b"}));
    CHECK(Le.complex.dim() == 0);
    CHECK(Le.complex.num_faces(0) == 1);
}

TEST_CASE("localization and lifting") {
    Complex K = complete(4, 2);
    const Face v = K.face_from_names({"0"});
    Link L = link(K, v);

    Cochain all = K.full_cochain(1);
    Cochain loc = localize(K, L, all);
    CHECK(loc.count() == 3);

    Cochain B = L.complex.cochain_of_faces(0, {L.complex.face_from_names({"1"})});
    Cochain up = lift(K, L, B);
    CHECK(up.count() == 1);
    CHECK(up.contains(K.index_of(K.face_from_names({"0", "1"}))));
    CHECK(K.norm(up) == make_rat(1, 6));
    CHECK(K.norm(up) == binomial(2, 1) * K.weight(v) * L.complex.norm(B));
    CHECK(local_norm(K, v, up) == L.complex.norm(B));

    Link E = link(K, Face{});
    CHECK(localize(K, E, all) == localize(K, E, all));
    CHECK(lift(K, E, localize(K, E, all)) == all);
    CHECK(lift(K, L, L.complex.empty_cochain(0)).empty());
}

TEST_CASE("skeletons") {
    Complex K = complete(4, 2);
    CHECK(skeleton(K, 2).same_as(K));
    Complex G = skeleton(K, 1);
    CHECK(G.dim() == 1);
    CHECK(G.num_faces(1) == 6);
    Complex P = skeleton(triangle(), 0);
    CHECK(P.dim() == 0);
    CHECK(P.num_faces(0) == 3);
}

TEST_CASE("edges between vertex sets") {
    Generated K22 = complete_partite(1, 2);
    const Complex& X = K22.complex;
    Cochain A = X.empty_cochain(0), B = X.empty_cochain(0);
    for (std::size_t v = 0; v < X.num_vertices(); ++v) ((*K22.types)[v] == 0 ? A : B).insert(v);
    Cochain E = edges_between(X, A, B);
    CHECK(E.count() == 4);
    CHECK(X.norm(E) == 1);
    CHECK(edges_between(X, X.full_cochain(0), X.full_cochain(0)) == X.full_cochain(1));
    CHECK(edges_between(X, A, A).empty());
}

TEST_CASE("cochains of different complexes do not mix") {
    Complex A = triangle(), B = triangle();
    CHECK_THROWS_AS(A.norm(B.full_cochain(0)), Error);
}

TEST_CASE("weights and coboundaries match the definitions on random complexes") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 3);
        const int n = d + 2 + static_cast<int>(rng() % 4);
        Complex X = oracle::random_complex(rng, n, d, 0.5);
        for (int k = -1; k <= d; ++k) {
            Rat total = 0;
            for (std::size_t i = 0; i < X.num_faces(k); ++i) {
                CHECK(X.weight(k, i) == oracle::weight(X, X.face(k, i)));
                total += X.weight(k, i);
            }
            CHECK(total == 1);
        }
    }
}
