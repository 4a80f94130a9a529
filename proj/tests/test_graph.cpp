#include <random>

#include "doctest.h"
#include "operadforge/graph.hpp"
#include "operadforge/shapes.hpp"
#include "oracles.hpp"

using namespace operadforge;

namespace {
DecoratedGraph two_loops() { return build_graph(Flavor::ggGrc, 1, {{0, 0}, {0, 0}}); }
DecoratedGraph one_loop() { return build_graph(Flavor::ggGrc, 1, {{0, 0}}); }
DecoratedGraph interval(int g0 = 1, int g1 = 1) { return build_graph(Flavor::ggGrc, 2, {{0, 1}}, {}, {g0, g1}); }

std::vector<DecoratedGraph> zoo() {
    std::vector<DecoratedGraph> z;
    z.push_back(two_loops());
    z.push_back(one_loop());
    z.push_back(interval());
    z.push_back(interval(0, 2));
    z.push_back(corolla(Flavor::ggGrc, 3));
    z.push_back(build_graph(Flavor::ggGrc, 2, {{0, 1}, {0, 1}}, {0, 1}));
    z.push_back(build_graph(Flavor::ggGrc, 2, {{0, 1}, {0, 1}}, {1, 0}));
    z.push_back(build_graph(Flavor::ggGrc, 2, {{0, 1}, {1, 1}}, {0}));
    z.push_back(build_graph(Flavor::ggGrc, 3, {{0, 1}, {1, 2}}, {0, 2}));
    z.push_back(build_graph(Flavor::ggGrc, 3, {{0, 1}, {1, 2}, {2, 0}}));
    z.push_back(build_graph(Flavor::Tr, 3, {{0, 1}, {1, 2}}, {1, 1}));
    z.push_back(build_graph(Flavor::RTr, 3, {{1, 0}, {2, 0}}, {0, 1, 2}, {}, {true, false, false}));
    z.push_back(build_graph(Flavor::Whe, 2, {{0, 1}, {1, 0}}));
    z.push_back(build_graph(Flavor::Whe, 2, {{0, 1}, {0, 1}}, {0}, {}, {true}));
    z.push_back(build_graph(Flavor::Whe, 3, {{0, 1}, {2, 1}}));
    return z;
}
}  // namespace

TEST_CASE("automorphism counts of basic graphs") {
    CHECK(automorphisms(two_loops()).size() == 8);
    CHECK(automorphisms(one_loop()).size() == 2);
    CHECK(automorphisms(interval()).size() == 2);
    CHECK(automorphisms(interval(0, 2)).size() == 1);
    CHECK(automorphisms(corolla(Flavor::ggGrc, 4)).size() == 1);
}

TEST_CASE("isomorphism search agrees with exhaustive search") {
    std::mt19937 rng(3);
    auto z = zoo();
    for (const auto& g : z) {
        for (int t = 0; t < 3; ++t) {
            auto r = oracle::relabel(g, rng);
            REQUIRE_NOTHROW(validate(r));
            auto found = isomorphisms(g, r);
            CHECK(static_cast<int>(found.size()) == oracle::count_isos(g, r));
            for (const auto& f : found) CHECK(oracle::preserves(g, r, f.half_edge_map));
        }
    }
}

TEST_CASE("canonical keys classify up to isomorphism") {
    std::mt19937 rng(5);
    auto z = zoo();
    for (std::size_t i = 0; i < z.size(); ++i) {
        auto k = canonical_key(z[i]);
        for (int t = 0; t < 4; ++t) CHECK(canonical_key(oracle::relabel(z[i], rng)) == k);
        auto [c, iso] = canonical_form(z[i]);
        CHECK(is_isomorphism(iso));
        CHECK(canonical_key(c) == k);
        for (std::size_t j = 0; j < z.size(); ++j) {
            bool same = oracle::count_isos(z[i], z[j]) > 0;
            CHECK((canonical_key(z[j]) == k) == same);
        }
    }
}

TEST_CASE("virtual keys forget the leg order") {
    auto a = build_graph(Flavor::ggGrc, 2, {{0, 1}}, {0, 1}, {0, 1});
    auto b = build_graph(Flavor::ggGrc, 2, {{0, 1}}, {1, 0}, {0, 1});
    CHECK(canonical_key(a) != canonical_key(b));
    CHECK(virtual_key(a) == virtual_key(b));
}

TEST_CASE("validation rejects malformed graphs") {
    auto g = one_loop();
    g.involution[0] = 0;
    CHECK_THROWS_AS(validate(g), ValidationError);
    auto d = build_graph(Flavor::Whe, 2, {{0, 1}});
    d.orientation[1] = Orient::Out;
    CHECK_THROWS_AS(validate(d), ValidationError);
    CHECK_THROWS_AS(build_graph(Flavor::Tr, 1, {{0, 0}}), ValidationError);
    CHECK_THROWS_AS(build_graph(Flavor::ggGrc, 2, {}), ValidationError);
    CHECK_THROWS_AS(build_graph(Flavor::RTr, 2, {{1, 0}}, {0}), ValidationError);
}

TEST_CASE("contraction conserves grading and genus") {
    for (const auto& g : zoo()) {
        for (const auto& sp : admissible_splits(g, false)) {
            CHECK(num_edges(sp.fiber) + num_edges(sp.quotient) == num_edges(g));
            if (has_genus(g.flavor)) CHECK(total_genus(sp.quotient) == total_genus(g));
            CHECK(sp.fiber.legs.size() == sp.quotient.vertices[sp.vertex_index].size());
            CHECK(sp.quotient.legs.size() == g.legs.size());
        }
    }
    auto sp = contract(two_loops(), {0});
    CHECK(sp.quotient.genus[0] == 1);
    CHECK(num_edges(sp.quotient) == 1);
    auto full = contract(two_loops(), {0, 1});
    CHECK(is_corolla(full.quotient));
    CHECK(full.quotient.genus[0] == 2);
}

TEST_CASE("admissible splits are the connected edge subsets") {
    CHECK(admissible_splits(two_loops(), false).size() == 3);
    CHECK(admissible_splits(two_loops(), true).size() == 2);
    auto path = build_graph(Flavor::ggGrc, 4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(admissible_splits(path, false).size() == 6);
    CHECK_THROWS_AS(contract(path, {0, 2}), ValidationError);
}

TEST_CASE("graph json round trip") {
    for (const auto& g : zoo()) {
        auto back = graph_from_json(to_json(g));
        CHECK(canonical_key(back) == canonical_key(g));
    }
    CHECK_THROWS_AS(graph_from_json(nlohmann::ordered_json::parse(R"({"flavor":"ggGrc"})")), ValidationError);
}
