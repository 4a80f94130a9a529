#include "doctest.h"
#include "operadforge/shapes.hpp"
#include "operadforge/towers.hpp"
#include "oracles.hpp"

using namespace operadforge;

namespace {
OpCatObject two_loops() { return build_graph(Flavor::ggGrc, 1, {{0, 0}, {0, 0}}); }
OpCatObject path(int nv) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < nv; ++i) es.emplace_back(i, i + 1);
    return build_graph(Flavor::ggGrc, nv, es);
}
}  // namespace

TEST_CASE("binary classes of small objects") {
    CHECK(binary_tower_classes(two_loops()).size() == 2);
    CHECK(binary_tower_classes(path(2)).size() == 1);
    CHECK(binary_tower_classes(per_path(3)).size() == 2);
    auto b = binary_tower_classes(two_loops());
    CHECK(b[0].order == std::vector<int>{0, 1});
    CHECK(b[1].order == std::vector<int>{1, 0});
}

TEST_CASE("Per path with three edges: current-graph interchange") {
    // {012}, {021,201}, {102}, {120}, {210}
    auto b = binary_tower_classes(per_path(4));
    CHECK(b.size() == 5);
    CHECK(oracle::tower_class_count(4, skeleton(per_path(4)).edges, 3) == 5);
}

TEST_CASE("Per path binary class counts are Catalan numbers") {
    const int catalan[] = {1, 1, 2, 5, 14, 42};
    for (int e = 1; e <= 5; ++e) CHECK(binary_tower_classes(per_path(e + 1)).size() == catalan[e]);
}

TEST_CASE("height two classes") {
    auto t = height2_classes(two_loops(), true);
    REQUIRE(t.size() == 2);
    for (const auto& c : t) {
        CHECK(c.fiber_sequence.size() == 2);
        CHECK(grade(c.fiber_sequence[0]) == 1);
        auto q = std::get<DecoratedGraph>(morphism_quotient(c.splits[0]));
        CHECK(total_genus(q) == 2);
        CHECK(q.genus[0] == 1);
    }
    CHECK(height2_classes(path(2), true).empty());
    CHECK(height2_classes(path(3), true).size() == 2);
    CHECK(height2_classes(path(3), false).size() == 3);
    CHECK(general_tower_classes(two_loops(), 2).size() == 2);
}

TEST_CASE("height one is the object itself") {
    auto t = general_tower_classes(path(4), 1);
    REQUIRE(t.size() == 1);
    CHECK(canonical_key(t[0].fiber_sequence[0]) == canonical_key(path(4)));
}

TEST_CASE("class counts agree with brute force") {
    std::vector<OpCatObject> xs = {
        two_loops(), path(3), path(4), path(5), per_path(5), per_path(6),
        build_graph(Flavor::ggGrc, 3, {{0, 1}, {1, 2}, {2, 0}}),
        build_graph(Flavor::ggGrc, 2, {{0, 1}, {0, 1}, {0, 0}}),
        build_graph(Flavor::ggGrc, 4, {{0, 1}, {0, 2}, {0, 3}}),
        build_graph(Flavor::ggGrc, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}),
        build_graph(Flavor::ggGrc, 3, {{0, 1}, {1, 2}, {1, 1}, {0, 2}, {2, 2}}),
    };
    for (const auto& x : xs) {
        auto sk = skeleton(x);
        for (int k = 1; k <= sk.num_edges(); ++k) {
            TowerSpace ts(sk, k);
            CHECK(ts.num_classes() == oracle::tower_class_count(sk.num_vertices, sk.edges, k));
            int total = 0;
            for (const auto& w : ts.representatives()) {
                int sum = 0;
                for (const auto& f : realize(x, w)) sum += grade(morphism_fiber(f));
                CHECK(sum == grade(x));
                ++total;
            }
            CHECK(total == ts.num_classes());
        }
    }
}

TEST_CASE("representatives are minimal and locate is consistent") {
    auto sk = skeleton(per_path(5));
    TowerSpace ts(sk, 3);
    for (const auto& w : ts.all_towers()) {
        auto l = ts.locate(w);
        const auto& rep = ts.representatives()[l.cls];
        CHECK_FALSE(word_less(w, rep));
        for (std::size_t i = 0; i < w.size(); ++i) CHECK(rep[l.perm[i]] == w[i]);
    }
    CHECK_THROWS(ts.locate({1, 2}));
}

TEST_CASE("grafting a fiber order before a quotient order gives a valid tower") {
    auto x = path(4);
    auto sk = skeleton(x);
    for (const auto& m : elementary_from(x)) {
        auto f = morphism_fiber(m), q = morphism_quotient(m);
        if (grade(q) == 0) continue;
        auto fmap = fiber_edge_map(m), qmap = quotient_edge_map(m);
        for (const auto& fo : binary_tower_classes(f))
            for (const auto& qo : binary_tower_classes(q)) {
                TowerWord w;
                for (int e : fo.order) w.push_back(EdgeMask(1) << fmap[e]);
                for (int e : qo.order) w.push_back(EdgeMask(1) << qmap[e]);
                CHECK(is_valid_tower(sk, w));
            }
    }
}

TEST_CASE("koszul sign counts odd transpositions only") {
    CHECK(koszul_sign({1, 0}, {1, 1}) == -1);
    CHECK(koszul_sign({1, 0}, {0, 1}) == 1);
    CHECK(koszul_sign({2, 1, 0}, {1, 1, 1}) == -1);
}
