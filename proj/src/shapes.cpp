#include "operadforge/shapes.hpp"

#include <algorithm>

namespace operadforge {

DecoratedGraph build_graph(Flavor f, int num_vertices, const std::vector<std::pair<int, int>>& edges,
                           const std::vector<int>& leg_vertices, std::vector<int> genus,
                           const std::vector<bool>& leg_out) {
    DecoratedGraph g;
    g.flavor = f;
    g.vertices.resize(num_vertices);
    const bool directed = is_directed(f);
    for (auto [a, b] : edges) {
        int h = g.num_half_edges();
        g.involution.push_back(h + 1);
        g.involution.push_back(h);
        g.vertices.at(a).push_back(h);
        g.vertices.at(b).push_back(h + 1);
        if (directed) {
            g.orientation.push_back(Orient::Out);
            g.orientation.push_back(Orient::In);
        }
    }
    for (std::size_t i = 0; i < leg_vertices.size(); ++i) {
        int h = g.num_half_edges();
        g.involution.push_back(h);
        g.vertices.at(leg_vertices[i]).push_back(h);
        g.legs.push_back(h);
        if (directed) g.orientation.push_back(i < leg_out.size() && leg_out[i] ? Orient::Out : Orient::In);
    }
    if (directed)
        for (auto& v : g.vertices)
            std::stable_partition(v.begin(), v.end(), [&](int h) { return g.orientation[h] == Orient::Out; });
    if (has_genus(f)) {
        if (genus.empty()) genus.assign(num_vertices, 0);
        g.genus = std::move(genus);
    }
    validate(g);
    return g;
}

Surjection per_path(int k) {
    Surjection s;
    for (int i = 1; i <= k; ++i) s.map.push_back(i);
    return s;
}

}  // namespace operadforge
