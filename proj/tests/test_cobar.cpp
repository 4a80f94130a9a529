#include "doctest.h"
#include "operadforge/cobar.hpp"
#include "operadforge/shapes.hpp"

using namespace operadforge;

namespace {
OpCatObject two_loops() { return build_graph(Flavor::ggGrc, 1, {{0, 0}, {0, 0}}); }
OpCatObject path(int nv) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < nv; ++i) es.emplace_back(i, i + 1);
    return build_graph(Flavor::ggGrc, nv, es);
}
std::vector<OpCatObject> samples() {
    return {two_loops(),
            path(2),
            path(3),
            path(5),
            per_path(3),
            per_path(5),
            build_graph(Flavor::ggGrc, 2, {{0, 1}, {0, 1}, {0, 1}}),
            build_graph(Flavor::ggGrc, 3, {{0, 1}, {1, 2}, {2, 0}, {1, 1}}),
            build_graph(Flavor::ggGrc, 1, {{0, 0}, {0, 0}, {0, 0}, {0, 0}}),
            build_graph(Flavor::Whe, 2, {{0, 1}, {1, 0}, {0, 0}}),
            build_graph(Flavor::RTr, 4, {{1, 0}, {2, 0}, {3, 1}}, {0}, {}, {true})};
}
}  // namespace

TEST_CASE("one-edge complex") {
    auto c = build_complex(Flavor::ggGrc, path(2));
    CHECK(c.layers.size() == 1);
    CHECK(c.layers[0]->dim() == 1);
    CHECK(d_squared_check(c));
    CHECK(homology_profile(c) == std::map<int, int>{{0, 1}});
    CHECK(canonical_map_check(Flavor::ggGrc, path(2)));
}

TEST_CASE("two-loop complex") {
    auto c = build_complex(Flavor::ggGrc, two_loops());
    REQUIRE(c.layers.size() == 2);
    CHECK(c.layers[0]->dim() == 1);
    CHECK(c.layers[1]->dim() == 2);
    const auto& d = c.d(1);
    CHECK(d.get(0, 0) == -d.get(1, 0));
    CHECK(d.get(0, 0) != 0);
    CHECK(homology_profile(c) == std::map<int, int>{{0, 1}, {1, 0}});
    CHECK(canonical_map_check(Flavor::ggGrc, two_loops()));
    CHECK(chi_intertwiner_check(Flavor::ggGrc, two_loops()));
}

TEST_CASE("Per path with two edges") {
    auto c = build_complex(Flavor::Per, per_path(3));
    CHECK(c.layers[0]->dim() == 1);
    CHECK(c.layers[1]->dim() == 2);
    CHECK(homology_profile(c) == std::map<int, int>{{0, 1}, {1, 0}});
}

TEST_CASE("differential squares to zero and homology is concentrated") {
    for (const auto& x : samples()) {
        INFO(canonical_key(x));
        for (auto rule : {SignRule::K, SignRule::L}) {
            auto c = build_complex(flavor_of(x), x, {rule, false});
            CHECK(d_squared_check(c));
            auto h = homology_profile(c);
            int alt = 0;
            for (const auto& [deg, b] : h) {
                CHECK(b == (deg == 0 ? 1 : 0));
                alt += (deg % 2 ? -1 : 1) * b;
            }
            CHECK(euler_layers(c) == (c.edges % 2 ? -1 : 1) * alt);
            CHECK(aut_equivariance_check(c));
        }
        CHECK(canonical_map_check(flavor_of(x), x));
        if (grade(x) >= 2) CHECK(chi_intertwiner_check(flavor_of(x), x));
    }
}

TEST_CASE("sign mutation breaks the complex") {
    for (const auto& x : samples()) {
        if (grade(x) < 3) continue;
        auto c = build_complex(flavor_of(x), x, {SignRule::K, true});
        CHECK_FALSE(d_squared_check(c));
    }
}

TEST_CASE("wedge signs") {
    CHECK(omega_sign(0b10, 0b01) == -1);
    CHECK(omega_sign(0b01, 0b10) == 1);
    CHECK(chi_sign({0b111}) == -1);
    CHECK(chi_sign({0b11, 0b100}) == -1);
    CHECK(chi_sign({0b1111}) == 1);
}

TEST_CASE("certify memoizes on the soul") {
    auto a = certify(Flavor::ggGrc, build_graph(Flavor::ggGrc, 2, {{0, 1}, {0, 0}}, {0, 1}, {1, 2}));
    auto b = certify(Flavor::ggGrc, build_graph(Flavor::ggGrc, 2, {{0, 1}, {1, 1}}, {1}, {0, 0}));
    CHECK(a.koszul());
    CHECK(a.layer_dims == b.layer_dims);
    CHECK(a.key != b.key);
}
