#include <doctest.h>

#include <random>

#include "hdx/cohomology.hpp"
#include "hdx/generators.hpp"
#include "oracles.hpp"

using namespace hdx;

namespace {

Complex two_triangles() { return Complex::build({{"a", "b", "c"}, {"x", "y", "z"}}); }
Complex single_edge() { return Complex::build({{"u", "v"}}); }

}  // namespace

TEST_CASE("coboundary examples") {
    Complex E = single_edge();
    Cochain u = E.cochain_of_faces(0, {E.face_from_names({"u"})});
    CHECK(coboundary(E, u) == E.full_cochain(1));

    Complex C4 = cycle(4);
    Cochain v = C4.cochain_of_faces(0, {C4.face_from_names({"0"})});
    Cochain dv = coboundary(C4, v);
    CHECK(dv.count() == 2);
    CHECK(dv.contains(C4.index_of(C4.face_from_names({"0", "1"}))));
    CHECK(dv.contains(C4.index_of(C4.face_from_names({"0", "3"}))));
}

TEST_CASE("cohomology dimensions") {
    auto c = cohomology_dims(cycle(5), 0);
    CHECK(c.cocycles == 1);
    CHECK(c.coboundaries == 1);
    CHECK(c.cohomology() == 0);

    auto t = cohomology_dims(two_triangles(), 0);
    CHECK(t.cocycles == 2);
    CHECK(t.coboundaries == 1);

    for (int n = 3; n <= 8; ++n) {
        auto h = cohomology_dims(cycle(n), 1);
        CHECK(h.cocycles == static_cast<std::size_t>(n));
        CHECK(h.coboundaries == static_cast<std::size_t>(n - 1));
        CHECK(h.cohomology() == 1);
    }
}

TEST_CASE("cosystoles") {
    CHECK(cosystole(cycle(6), 0).value.is_infinite());
    for (int n = 3; n <= 8; ++n) CHECK(cosystole(cycle(n), 1).value == ExtRat(make_rat(1, n)));
    auto r = cosystole(two_triangles(), 0);
    CHECK(r.value == ExtRat(make_rat(1, 2)));
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->count() == 3);
}

TEST_CASE("expansion examples") {
    Complex E = single_edge();
    auto r = expansion(E, 0, ExpansionMode::Coboundary);
    CHECK(r.value == ExtRat(make_rat(2)));
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->count() == 1);

    Complex G = Complex::build({{"a", "b"}, {"b", "c"}, {"x", "y"}});
    CHECK(expansion(G, 0, ExpansionMode::Coboundary).value == ExtRat(make_rat(0)));
    auto z = expansion(G, 0, ExpansionMode::Cocycle);
    CHECK(z.value == oracle::expansion(G, 0, true));
    CHECK(make_rat(0) < z.value.value());
}

TEST_CASE("coboundaries are cocycles") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Complex X = oracle::random_complex(rng, 6, 2 + static_cast<int>(rng() % 2), 0.5);
        for (int k = 0; k + 2 <= X.dim(); ++k) {
            Cochain A = oracle::random_cochain(rng, X, k, 0.5);
            CHECK(coboundary(X, coboundary(X, A)).empty());
            CHECK(coboundary(X, A) == oracle::coboundary(X, A));
        }
    }
}

TEST_CASE("coset search agrees with the flat scan") {
    std::mt19937_64 rng(5);
    int compared = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 2);
        Complex X = oracle::random_complex(rng, 4 + static_cast<int>(rng() % 3), d, 0.45);
        for (int k = 0; k < d; ++k) {
            if (X.num_faces(k) > 12 || X.num_faces(k - 1) > 12) continue;
            CHECK(expansion(X, k, ExpansionMode::Coboundary).value == oracle::expansion(X, k, false));
            CHECK(expansion(X, k, ExpansionMode::Cocycle).value == oracle::expansion(X, k, true));
            CHECK(cosystole(X, k).value == oracle::cosystole(X, k));
            ++compared;
        }
    }
    CHECK(compared > 20);
}

TEST_CASE("thread count does not change results") {
    Complex X = complete(6, 2);
    EnumerationOptions one{kDefaultCap, 1}, four{kDefaultCap, 4};
    auto a = expansion(X, 1, ExpansionMode::Cocycle, one);
    auto b = expansion(X, 1, ExpansionMode::Cocycle, four);
    CHECK(a.value == b.value);
    CHECK(*a.witness == *b.witness);
}

TEST_CASE("enumeration cap") {
    EnumerationOptions tiny{16, 1};
    CHECK_THROWS_AS(expansion(complete(6, 2), 1, ExpansionMode::Coboundary, tiny), Error);
}
