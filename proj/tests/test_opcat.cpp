#include "doctest.h"
#include "operadforge/opcat.hpp"
#include "operadforge/shapes.hpp"

using namespace operadforge;

TEST_CASE("surjections and Per merges") {
    Surjection a{{1, 2, 2, 3, 4}};
    CHECK(a.k() == 4);
    CHECK(grade(OpCatObject(a)) == 3);
    CHECK_THROWS_AS(validate(Surjection{{1, 3}}), ValidationError);
    auto m = per_merge(a, 2, 3);
    CHECK(m.fiber.map == std::vector<int>{1, 1, 2});
    CHECK(m.quotient.map == std::vector<int>{1, 2, 2, 2, 3});
    CHECK(grade(OpCatObject(m.fiber)) + grade(OpCatObject(m.quotient)) == grade(OpCatObject(a)));
    CHECK_THROWS_AS(per_merge(a, 3, 3), ValidationError);
    CHECK_THROWS_AS(per_merge(a, 3, 5), ValidationError);
}

TEST_CASE("Per contraction uses consecutive edge blocks") {
    OpCatObject p = per_path(4);
    auto m = contract_edges(p, {1, 2});
    CHECK(std::get<PerMerge>(m).first == 2);
    CHECK(std::get<PerMerge>(m).last == 4);
    CHECK(quotient_edge_map(m) == std::vector<int>{0});
    CHECK_THROWS_AS(contract_edges(p, {0, 2}), ValidationError);
    auto m2 = contract_edges(p, {1});
    CHECK(quotient_edge_map(m2) == std::vector<int>{0, 2});
    CHECK(elementary_from(p).size() == 6);
}

TEST_CASE("grading is additive over elementary morphisms") {
    std::vector<OpCatObject> xs = {
        per_path(4),
        OpCatObject(build_graph(Flavor::ggGrc, 1, {{0, 0}, {0, 0}})),
        OpCatObject(build_graph(Flavor::ggGrc, 3, {{0, 1}, {1, 2}, {2, 0}}, {0})),
        OpCatObject(build_graph(Flavor::RTr, 3, {{1, 0}, {2, 1}}, {0, 2}, {}, {true, false})),
    };
    for (const auto& x : xs)
        for (const auto& m : elementary_from(x)) {
            CHECK(grade(morphism_fiber(m)) + grade(morphism_quotient(m)) == grade(x));
            CHECK(fiber_edge_map(m).size() == static_cast<std::size_t>(grade(morphism_fiber(m))));
            CHECK(quotient_edge_map(m).size() == static_cast<std::size_t>(grade(morphism_quotient(m))));
        }
}

TEST_CASE("terminal objects") {
    CHECK(is_chosen_terminal(OpCatObject(corolla(Flavor::ggGrc, 3, 1))));
    auto c = corolla(Flavor::ggGrc, 3);
    std::swap(c.vertices[0][0], c.vertices[0][1]);
    CHECK(is_local_terminal(OpCatObject(c)));
    CHECK_FALSE(is_chosen_terminal(OpCatObject(c)));
    CHECK(is_chosen_terminal(OpCatObject(Surjection{{1, 1}})));
    CHECK_FALSE(is_local_terminal(per_path(2)));
}

TEST_CASE("skeleton and soul") {
    auto sk = skeleton(per_path(4));
    CHECK(sk.num_vertices == 4);
    CHECK(sk.edges.size() == 3);
    auto g = build_graph(Flavor::ggGrc, 2, {{0, 1}}, {0, 1, 1}, {2, 0});
    auto s = soul_graph(OpCatObject(g));
    CHECK(s.legs.empty());
    CHECK(total_genus(s) == 0);
    CHECK(soul_graph(per_path(3)) == soul_graph(OpCatObject(build_graph(Flavor::ggGrc, 3, {{0, 1}, {1, 2}}))));
}

TEST_CASE("object json round trip") {
    OpCatObject a = Surjection{{2, 1, 2}};
    CHECK(canonical_key(object_from_json(to_json(a))) == canonical_key(a));
    CHECK_THROWS_AS(object_from_json(nlohmann::ordered_json::parse(R"({"flavor":"Per","map":[2]})")), ValidationError);
}
