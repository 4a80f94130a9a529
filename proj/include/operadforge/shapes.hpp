#pragma once

#include <utility>
#include <vector>

#include "operadforge/opcat.hpp"

namespace operadforge {

// Edge i is the half-edge pair (2i, 2i+1), 2i at edges[i].first. Legs follow,
// in global order, attached to leg_vertices. In directed flavors the first
// endpoint carries the outgoing half-edge; leg_out marks outgoing legs.
DecoratedGraph build_graph(Flavor f, int num_vertices, const std::vector<std::pair<int, int>>& edges,
                           const std::vector<int>& leg_vertices = {}, std::vector<int> genus = {},
                           const std::vector<bool>& leg_out = {});

// Identity surjection on k points: the Per path with k-1 edges.
Surjection per_path(int k);

}  // namespace operadforge
