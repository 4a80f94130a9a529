#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "operadforge/opcat.hpp"

namespace operadforge {

using EdgeMask = std::uint32_t;

// Ordered partition of the edges; blocks[0] is contracted first.
using TowerWord = std::vector<EdgeMask>;

std::vector<int> mask_edges(EdgeMask m);
EdgeMask edges_mask(const std::vector<int>& ids);
bool block_less(EdgeMask a, EdgeMask b);
bool word_less(const TowerWord& a, const TowerWord& b);

// Vertex classes of the skeleton after contracting the given edges.
class Contraction {
public:
    explicit Contraction(const Skeleton& s);
    void contract(EdgeMask m);
    int root(int v) const;
    // Vertex classes touched by the block.
    std::vector<int> touched(EdgeMask m) const;
    bool connected(EdgeMask m) const;
    bool disjoint(EdgeMask a, EdgeMask b) const;

private:
    const Skeleton* s_;
    std::vector<int> parent_;
};

bool is_valid_tower(const Skeleton& s, const TowerWord& w);

// Adjacent blocks i, i+1 may be interchanged when they share no vertex in the
// graph obtained by contracting blocks 0..i-1.
bool swap_allowed(const Skeleton& s, const TowerWord& w, int i);

// All valid towers of one height together with their ⋈-classes.
class TowerSpace {
public:
    TowerSpace(const Skeleton& s, int height);

    int height() const { return height_; }
    int num_classes() const { return static_cast<int>(reps_.size()); }
    const std::vector<TowerWord>& representatives() const { return reps_; }
    const std::vector<TowerWord>& all_towers() const { return towers_; }

    struct Located {
        int cls = -1;
        // position in the word -> position of the same block in the representative
        std::vector<int> perm;
    };
    // Throws if the word is not a valid tower of this height.
    Located locate(const TowerWord& w) const;

private:
    Skeleton skel_;
    int height_;
    std::vector<TowerWord> towers_;
    std::map<TowerWord, int> index_;
    std::vector<int> class_of_;  // tower index -> class
    std::vector<TowerWord> reps_;
};

// Sign (+1/-1) of reordering the blocks of a word into its representative,
// counting only transpositions of two odd blocks.
int koszul_sign(const std::vector<int>& perm, const std::vector<int>& parities);

struct EdgeOrderClass {
    OpCatObject base;
    std::vector<int> order;
};

struct TowerClass {
    OpCatObject base;
    TowerWord blocks;
    std::vector<OpCatObject> fiber_sequence;
    int height = 0;
    std::vector<ElemMorphism> splits;
};

// The elementary morphisms realizing a tower, each expressed on the current
// (partially contracted) object.
std::vector<ElemMorphism> realize(const OpCatObject& x, const TowerWord& w, bool check_flavor = true);

std::vector<EdgeOrderClass> binary_tower_classes(const OpCatObject& x);
std::vector<TowerClass> height2_classes(const OpCatObject& x, bool proper);
std::vector<TowerClass> general_tower_classes(const OpCatObject& x, int k);

}  // namespace operadforge
