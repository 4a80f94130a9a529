#pragma once

#include <vector>

#include "operadforge/opcat.hpp"

namespace operadforge {

// max_genus bounds each vertex genus, max_legs the total leg count. For Per,
// objects are n ->> k with k - 1 <= max_edges and n <= max_legs.
struct Bounds {
    int max_edges = 0;
    int max_legs = 0;
    int max_genus = 0;
};

void validate(const Bounds& b);

// Canonical souls of a flavor with at most max_edges edges, sorted by key.
// Directed flavors give Whe-flavored souls, the others ggGrc with genus 0.
std::vector<DecoratedGraph> enumerate_souls(Flavor f, int max_edges);

struct Decoration {
    std::vector<int> leg_vertices;  // in global leg order
    std::vector<bool> leg_out;      // directed flavors only
    std::vector<int> genus;         // ggGrc only
};

// One decoration per isomorphism class of objects with the given soul.
std::vector<Decoration> decorations(Flavor f, const DecoratedGraph& soul, const Bounds& b);
DecoratedGraph decorate(Flavor f, const DecoratedGraph& soul, const Decoration& d);

// All surjections n ->> k within bounds, n-major.
std::vector<Surjection> enumerate_surjections(int max_k, int max_n);

// Canonical objects within bounds, sorted by canonical key.
std::vector<OpCatObject> enumerate_objects(Flavor f, const Bounds& b);

}  // namespace operadforge
