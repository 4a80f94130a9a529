#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace operadforge {

enum class Flavor { ggGrc, Tr, RTr, Whe, Per };

std::string flavor_name(Flavor f);
Flavor parse_flavor(const std::string& s);
bool is_directed(Flavor f);
bool has_genus(Flavor f);

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Orient : std::int8_t { In = 0, Out = 1 };

// Half-edges are 0..size-1. A leg is a fixed point of the involution.
struct DecoratedGraph {
    Flavor flavor = Flavor::ggGrc;
    std::vector<int> involution;
    std::vector<std::vector<int>> vertices;  // local orders
    std::vector<int> legs;                   // global order
    std::vector<int> genus;                  // per vertex, ggGrc only
    std::vector<Orient> orientation;         // per half-edge, RTr and Whe only

    int num_half_edges() const { return static_cast<int>(involution.size()); }
    int num_vertices() const { return static_cast<int>(vertices.size()); }
    bool is_leg(int h) const { return involution[h] == h; }

    friend bool operator==(const DecoratedGraph&, const DecoratedGraph&) = default;
};

// Internal edges as (h, involution[h]) with h < involution[h], sorted by h.
// The index into this list is the edge id used throughout.
std::vector<std::pair<int, int>> edges(const DecoratedGraph& g);
int num_edges(const DecoratedGraph& g);
std::vector<int> vertex_of(const DecoratedGraph& g);
int total_genus(const DecoratedGraph& g);
int first_betti(const DecoratedGraph& g);

// Throws ValidationError.
void validate(const DecoratedGraph& g);

// Structural check without flavor conditions (connectivity, tree shape, roots).
void validate_structure(const DecoratedGraph& g);

struct GraphIso {
    DecoratedGraph source;
    DecoratedGraph target;
    std::vector<int> half_edge_map;  // source half-edge -> target half-edge

    std::vector<int> vertex_map() const;
    std::vector<int> edge_map() const;  // source edge id -> target edge id
};

GraphIso compose(const GraphIso& second, const GraphIso& first);
GraphIso inverse(const GraphIso& f);
bool is_isomorphism(const GraphIso& f);

// All isomorphisms source -> target. Local orders are ignored; the leg order,
// genus and orientation are preserved. With forget_leg_order, legs may be
// permuted freely (virtual isomorphisms).
std::vector<GraphIso> isomorphisms(const DecoratedGraph& source, const DecoratedGraph& target,
                                   bool forget_leg_order = false);
std::vector<GraphIso> automorphisms(const DecoratedGraph& g);

std::pair<DecoratedGraph, GraphIso> canonical_form(const DecoratedGraph& g);
std::string canonical_key(const DecoratedGraph& g);
std::string virtual_key(const DecoratedGraph& g);

// Legs removed, genus dropped; orientation kept. Directed souls have flavor Whe,
// undirected ones ggGrc with genus 0.
DecoratedGraph soul(const DecoratedGraph& g);

struct ElementarySplit {
    DecoratedGraph source;
    std::vector<int> fiber_edges;  // edge ids of source, sorted
    DecoratedGraph fiber;
    DecoratedGraph quotient;
    int vertex_index = 0;                  // collapsed vertex in the quotient
    std::vector<int> fiber_half_edges;     // fiber half-edge -> source half-edge
    std::vector<int> quotient_half_edges;  // quotient half-edge -> source half-edge

    std::vector<int> fiber_edge_map() const;     // fiber edge id -> source edge id
    std::vector<int> quotient_edge_map() const;  // quotient edge id -> source edge id
};

// check_flavor=false skips the flavor conditions on fiber and quotient; used
// for souls, whose directed trees lack a root leg.
ElementarySplit contract(const DecoratedGraph& g, const std::vector<int>& edge_ids,
                         bool check_flavor = true);
bool edges_connected(const DecoratedGraph& g, const std::vector<int>& edge_ids);
std::vector<ElementarySplit> admissible_splits(const DecoratedGraph& g,
                                               bool require_quotient_grade_ge_1);

bool is_corolla(const DecoratedGraph& g);
DecoratedGraph corolla(Flavor f, int n, int genus = 0);

nlohmann::ordered_json to_json(const DecoratedGraph& g);
DecoratedGraph graph_from_json(const nlohmann::ordered_json& j);

}  // namespace operadforge
