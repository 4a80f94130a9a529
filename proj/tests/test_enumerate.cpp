#include <doctest.h>

#include <set>

#include "operadforge/enumerate.hpp"
#include "operadforge/shapes.hpp"

using namespace operadforge;

namespace {

// Every edge list (ordered), leg placement, leg direction and genus table,
// deduplicated by canonical key.
std::set<std::string> brute_force(Flavor f, const Bounds& b) {
    std::set<std::string> keys;
    const bool directed = is_directed(f);
    for (int e = 0; e <= b.max_edges; ++e)
        for (int v = 1; v <= e + 1; ++v) {
            int pairs = v * v;
            long long lists = 1;
            for (int i = 0; i < e; ++i) lists *= pairs;
            for (long long li = 0; li < lists; ++li) {
                std::vector<std::pair<int, int>> es;
                long long t = li;
                for (int i = 0; i < e; ++i, t /= pairs) es.emplace_back(t % pairs / v, t % pairs % v);
                for (int legs = 0; legs <= b.max_legs; ++legs) {
                    long long place = 1;
                    for (int i = 0; i < legs; ++i) place *= v;
                    int gmax = has_genus(f) ? b.max_genus : 0;
                    long long gens = 1;
                    for (int i = 0; i < v; ++i) gens *= gmax + 1;
                    for (long long pi = 0; pi < place; ++pi)
                        for (long long oi = 0; oi < (directed ? 1LL << legs : 1); ++oi)
                            for (long long gi = 0; gi < gens; ++gi) {
                                std::vector<int> lv, genus;
                                std::vector<bool> lo;
                                long long p = pi, g = gi;
                                for (int i = 0; i < legs; ++i, p /= v) lv.push_back(p % v);
                                for (int i = 0; i < legs; ++i) lo.push_back((oi >> i) & 1);
                                if (has_genus(f))
                                    for (int i = 0; i < v; ++i, g /= gmax + 1) genus.push_back(g % (gmax + 1));
                                try {
                                    keys.insert(canonical_key(build_graph(f, v, es, lv, genus, lo)));
                                } catch (const ValidationError&) {
                                }
                            }
                }
            }
        }
    return keys;
}

std::set<std::string> listed(Flavor f, const Bounds& b) {
    std::set<std::string> keys;
    for (const auto& x : enumerate_objects(f, b)) keys.insert(canonical_key(x));
    return keys;
}

long long stirling2(int n, int k) {
    if (n == 0 && k == 0) return 1;
    if (n == 0 || k == 0) return 0;
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

}  // namespace

TEST_CASE("enumeration matches brute force on small bounds") {
    struct Case {
        Flavor f;
        Bounds b;
    };
    for (const auto& c : {Case{Flavor::Tr, {2, 3, 0}}, Case{Flavor::ggGrc, {2, 2, 1}}, Case{Flavor::RTr, {2, 3, 0}},
                          Case{Flavor::Whe, {2, 2, 0}}, Case{Flavor::ggGrc, {3, 0, 0}}, Case{Flavor::Whe, {3, 0, 0}}}) {
        CAPTURE(flavor_name(c.f));
        CAPTURE(c.b.max_edges);
        auto mine = listed(c.f, c.b);
        CHECK(mine == brute_force(c.f, c.b));
        CHECK(mine.size() == enumerate_objects(c.f, c.b).size());
    }
}

TEST_CASE("surjection counts are k! S(n,k)") {
    long long expect = 0;
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= std::min(n, 3); ++k) {
            long long fact = 1;
            for (int i = 2; i <= k; ++i) fact *= i;
            expect += fact * stirling2(n, k);
        }
    CHECK(static_cast<long long>(enumerate_objects(Flavor::Per, {2, 4, 0}).size()) == expect);
    CHECK(expect == 68);  // 1 + (1+2) + (1+6+6) + (1+14+36)
}

TEST_CASE("zero edges gives corollas only") {
    for (Flavor f : {Flavor::ggGrc, Flavor::Tr, Flavor::RTr, Flavor::Whe})
        for (const auto& x : enumerate_objects(f, {0, 3, 1})) {
            CHECK(grade(x) == 0);
            CHECK(is_corolla(std::get<DecoratedGraph>(x)));
        }
    CHECK(enumerate_objects(Flavor::Tr, {0, 3, 0}).size() == 4);
}

TEST_CASE("souls of two-edge objects") {
    CHECK(enumerate_souls(Flavor::ggGrc, 2).size() == 1 + 2 + 4);
    CHECK(enumerate_souls(Flavor::Tr, 2).size() == 3);
    CHECK(enumerate_souls(Flavor::Whe, 1).size() == 1 + 1 + 1);
}

TEST_CASE("bad bounds are rejected") { CHECK_THROWS_AS(enumerate_objects(Flavor::Tr, {-1, 0, 0}), std::invalid_argument); }
