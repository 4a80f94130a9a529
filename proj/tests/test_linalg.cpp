#include <random>

#include "doctest.h"
#include "operadforge/linalg.hpp"

using namespace operadforge;

namespace {
RationalMatrix random_matrix(std::mt19937& rng, int r, int c) {
    std::uniform_int_distribution<int> d(-2, 2);
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (rng() % 3 == 0) m.set(i, j, d(rng));
    return m;
}
}  // namespace

TEST_CASE("rank and kernel of a rank one matrix") {
    auto m = RationalMatrix::from_dense({{1, 2}, {2, 4}});
    CHECK(rank(m) == 1);
    auto k = kernel(m);
    REQUIRE(k.dim() == 1);
    CHECK(m.apply(k.basis[0]).empty());
    CHECK(k.contains(SparseVector{{0, -2}, {1, 1}}));
}

TEST_CASE("rationals round-trip through strings") {
    CHECK(to_string(Rational(1, 2)) == "1/2");
    CHECK(to_string(Rational(-4)) == "-4");
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("annihilator of a line under the identity pairing") {
    auto s = span(2, {SparseVector{{0, 1}, {1, -1}}});
    auto a = annihilator(s, RationalMatrix::identity(2));
    REQUIRE(a.dim() == 1);
    CHECK(a.contains(SparseVector{{0, 1}, {1, 1}}));
    CHECK_FALSE(a.contains(SparseVector{{0, 1}}));
}

TEST_CASE("homology of small complexes") {
    // 0 -> k -> k^2 -> k -> 0 with d1 = (1 1), d2 = (1, -1)^T
    auto d1 = RationalMatrix::from_dense({{1, 1}});
    auto d2 = RationalMatrix::from_dense({{1}, {-1}});
    CHECK(homology(d1, d2).betti == 0);
    auto zero_in = RationalMatrix(2, 0);
    auto h = homology(d1, zero_in);
    CHECK(h.betti == 1);
    auto bad = RationalMatrix::from_dense({{1}, {1}});
    CHECK_THROWS(homology(d1, bad));
    CHECK_THROWS(homology(d1, RationalMatrix(3, 1)));
}

TEST_CASE("rank-nullity and transpose on random matrices") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        int r = 1 + rng() % 6, c = 1 + rng() % 6;
        auto m = random_matrix(rng, r, c);
        int rk = rank(m);
        CHECK(rk == rank(m.transpose()));
        auto k = kernel(m);
        CHECK(rk + k.dim() == c);
        for (const auto& v : k.basis) CHECK(m.apply(v).empty());
        CHECK(image(m).dim() == rk);
        for (int j = 0; j < c; ++j) {
            SparseVector e{{j, 1}};
            CHECK(image(m).contains(m.apply(e)));
        }
    }
}

TEST_CASE("echelon basis is canonical for the span") {
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        auto m = random_matrix(rng, 4, 5);
        EchelonBasis a(5), b(5);
        for (int i = 0; i < 4; ++i) a.insert(m.row(i));
        for (int i = 3; i >= 0; --i) b.insert(scaled(m.row(i), 3));
        CHECK(a.subspace() == b.subspace());
        CHECK(a.rank() == rank(m));
    }
}

TEST_CASE("matrix json round trip") {
    auto m = RationalMatrix::from_dense({{Rational(1, 2), 0}, {0, -3}});
    CHECK(matrix_from_json(to_json(m)) == m);
}
