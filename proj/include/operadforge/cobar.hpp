#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "operadforge/free_operad.hpp"

namespace operadforge {

// Sign attached to splitting a generator into fiber F and quotient Q:
// K is (-1)^{e(Q)(e(F)+1)}, L is (-1)^{e(Q)}.
enum class SignRule { K, L };

struct CobarOptions {
    SignRule rule = SignRule::K;
    // Flip one term of the height-1 differential (control experiment).
    bool mutate = false;
};

// Det cocycle: x_S spans det(S) desuspended, degree |S|-1, with S read in
// increasing edge order. omega_{Q,F} rewrites the wedge of S as (wedge Q)(wedge F).
int omega_sign(EdgeMask q, EdgeMask f);
int chi_sign(const TowerWord& w);

struct CobarComplex {
    OpCatObject object;
    int edges = 0;
    std::vector<FreeComponentPtr> layers;        // layers[k-1] = height k
    std::vector<RationalMatrix> differentials;  // differentials[k-1]: height k -> k+1

    int degree_of_height(int k) const { return edges - k; }
    const RationalMatrix& d(int k) const { return differentials.at(k - 1); }
};

CobarComplex build_complex(Flavor f, const OpCatObject& x, const CobarOptions& opt = {});
bool d_squared_check(const CobarComplex& c);
// homological degree -> betti, every degree 0..e-1 listed
std::map<int, int> homology_profile(const CobarComplex& c);
int euler_layers(const CobarComplex& c);

// can: height-e layer -> F(E)/(R)(x). True iff can kills the boundaries and
// induces an isomorphism on degree-0 homology.
bool canonical_map_check(Flavor f, const OpCatObject& x, const CobarOptions& opt = {});
bool chi_intertwiner_check(Flavor f, const OpCatObject& x);
// Automorphisms of a graph act on each layer commuting with the differential.
bool aut_equivariance_check(const CobarComplex& c);

struct CobarReport {
    std::string key;
    int edges = 0;
    std::vector<int> layer_dims;  // by height
    std::map<int, int> betti;     // by degree
    bool d_squared = false;
    bool canonical_map = false;
    bool chi = false;

    bool koszul() const;
};

// Computed on the canonical soul of x and memoized.
CobarReport certify(Flavor f, const OpCatObject& x, const CobarOptions& opt = {});
nlohmann::ordered_json to_json(const CobarReport& r);

}  // namespace operadforge
