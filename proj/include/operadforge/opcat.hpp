#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "operadforge/graph.hpp"

namespace operadforge {

// alpha: n ->> k, stored 1-based: map[x-1] = alpha(x).
struct Surjection {
    std::vector<int> map;

    int n() const { return static_cast<int>(map.size()); }
    int k() const;
    friend bool operator==(const Surjection&, const Surjection&) = default;
};

void validate(const Surjection& s);

// Merge of the consecutive codomain block [first, last] (1-based, last > first).
struct PerMerge {
    Surjection source;
    int first = 1;
    int last = 2;
    Surjection fiber;
    Surjection quotient;
};

PerMerge per_merge(const Surjection& s, int first, int last);

using OpCatObject = std::variant<DecoratedGraph, Surjection>;
using ElemMorphism = std::variant<ElementarySplit, PerMerge>;

Flavor flavor_of(const OpCatObject& x);
int grade(const OpCatObject& x);
int grade(const ElemMorphism& m);
void validate(const OpCatObject& x);

std::string canonical_key(const OpCatObject& x);
std::string virtual_key(const OpCatObject& x);
OpCatObject canonical(const OpCatObject& x);

// Undirected incidence data: what towers and ⋈ depend on. For Per the path
// 0 - 1 - ... - (k-1), edge t joining t and t+1.
struct Skeleton {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    int num_edges() const { return static_cast<int>(edges.size()); }
};

Skeleton skeleton(const OpCatObject& x);

// Contract a connected edge set. For Per the set must be consecutive.
ElemMorphism contract_edges(const OpCatObject& x, const std::vector<int>& edge_ids,
                            bool check_flavor = true);
OpCatObject morphism_source(const ElemMorphism& m);
OpCatObject morphism_fiber(const ElemMorphism& m);
OpCatObject morphism_quotient(const ElemMorphism& m);
std::vector<int> fiber_edges(const ElemMorphism& m);        // source edge ids
std::vector<int> fiber_edge_map(const ElemMorphism& m);     // fiber edge -> source edge
std::vector<int> quotient_edge_map(const ElemMorphism& m);  // quotient edge -> source edge

std::vector<ElemMorphism> elementary_from(const OpCatObject& x);

bool is_local_terminal(const OpCatObject& x);
bool is_chosen_terminal(const OpCatObject& x);

// Legs amputated, genus dropped, orientation kept. A Per object maps to its
// path graph.
DecoratedGraph soul_graph(const OpCatObject& x);

nlohmann::ordered_json to_json(const OpCatObject& x);
OpCatObject object_from_json(const nlohmann::ordered_json& j);

}  // namespace operadforge
