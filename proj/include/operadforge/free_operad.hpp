#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "operadforge/linalg.hpp"
#include "operadforge/towers.hpp"

namespace operadforge {

struct GeneratorSpec {
    int dim = 0;
    int degree = 0;
};

// Finite support table for a 1-connected collection. Generators on an object of
// grade g come from by_key (virtual key) if present, else by_grade. With
// `oriented`, the generator on an object is the wedge of its edges and an
// isomorphism acts by the sign of the induced edge permutation; otherwise
// isomorphisms act trivially.
struct Collection {
    std::string name;
    std::map<int, GeneratorSpec> by_grade;
    std::map<std::string, GeneratorSpec> by_key;
    bool oriented = false;

    GeneratorSpec at(const OpCatObject& fiber) const;
    GeneratorSpec at_grade(int g) const;
    bool grade_only() const { return by_key.empty(); }

    // k in degree `degree` on every one-edge object.
    static Collection binary(int degree = 0);
    // The desuspended determinant: one generator of degree g-1 on grade g.
    static Collection det_desuspended(int max_grade);
};

struct FreeBasisElement {
    TowerWord word;         // ⋈-class representative
    std::vector<int> gens;  // generator index per block
    std::vector<int> block_degrees;
    int degree = 0;
};

struct FreeComponent {
    OpCatObject object;
    int weight = 0;
    std::vector<FreeBasisElement> basis;
    std::shared_ptr<const TowerSpace> towers;

    int dim() const { return static_cast<int>(basis.size()); }
    // Index of (class, gens), or -1.
    int find(int cls, const std::vector<int>& gens) const;

    std::map<std::pair<int, std::vector<int>>, int> index;
};

using FreeComponentPtr = std::shared_ptr<const FreeComponent>;

struct FreeElement {
    FreeComponentPtr component;
    SparseVector coeffs;
};

// Tower space of an object's skeleton, memoized; safe for concurrent use.
std::shared_ptr<const TowerSpace> tower_space(const OpCatObject& x, int height);

FreeComponentPtr component(const Collection& e, const OpCatObject& x, int k);

// A tensor word of generators on the edges of some object: blocks are listed in
// contraction order, each block as a sequence of edge ids whose order gives the
// orientation of an oriented generator.
struct Monomial {
    std::vector<std::vector<int>> blocks;
    std::vector<int> gens;
};

struct Normalized {
    int index = -1;  // -1: the word vanishes in this component
    int sign = 1;
};

// Rewrite a monomial into the component basis: reorder to the class
// representative (Koszul sign on generator degrees) and sort oriented blocks.
Normalized normalize(const Collection& e, const FreeComponent& c, const Monomial& m);

// Generator of the fiber composed into a quotient element. Fiber blocks come
// first: o_phi(a (x) b) = (-1)^{|a||b|} [b a].
FreeElement compose(const Collection& e, const ElemMorphism& split, const FreeElement& left,
                    const FreeElement& right);

// Pullback along f: X' -> X of an element over X.
FreeElement iso_action(const Collection& e, const GraphIso& f, const FreeElement& x);

FreeElement basis_element(const FreeComponentPtr& c, int i);
FreeElement single_generator(const Collection& e, const OpCatObject& x, int gen = 0);

}  // namespace operadforge
