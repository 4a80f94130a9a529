#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "operadforge/free_operad.hpp"

namespace operadforge {

// Relations on one iso class of 2-edge soul.
struct RelationFamily {
    std::string name;
    DecoratedGraph shape;  // canonical soul
    Subspace relations;    // inside F^2(E)(shape)
};

struct QuadraticData {
    std::string name;
    Flavor flavor = Flavor::ggGrc;
    Collection generators;
    // Every 2-edge shape of the flavor, keyed by canonical soul key; families
    // with no relations carry the zero subspace.
    std::map<std::string, RelationFamily> families;
};

std::vector<std::string> builtin_names();
QuadraticData builtin_presentation(const std::string& name);

// Canonical souls of the connected 2-edge objects of a flavor.
std::vector<DecoratedGraph> two_edge_shapes(Flavor f);
std::string shape_name(const DecoratedGraph& soul, Flavor f);

// R(x) for an object with two edges, in the basis of F^2(E)(x).
Subspace relation_space(const QuadraticData& q, const OpCatObject& x);

// Weight-k component of the ideal generated by R.
Subspace ideal_component(const QuadraticData& q, const OpCatObject& x, int k);

// weight -> dim F^k(E)(x) / (R)(x), over weights with nonzero free part.
std::map<int, int> quotient_dim(const QuadraticData& q, const OpCatObject& x);

// <-|->: F^2(dual generators)(x) x F^2(E)(x), identity on matching classes.
RationalMatrix pairing_matrix(const QuadraticData& q, const OpCatObject& x);

QuadraticData koszul_dual(const QuadraticData& q);

struct DualComponent {
    int dimension = 0;
    int degree = 0;
};

DualComponent dual_component_as_determinant(Flavor f, const OpCatObject& x);

// The built-in presentation whose quotient is the terminal operad of a flavor.
std::string presentation_for(Flavor f);

}  // namespace operadforge
