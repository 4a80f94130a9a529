#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "operadforge/linalg.hpp"

namespace operadforge {

class TableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Skeletal component on the labels 1..n, homogeneous of one degree.
// transpositions[i] is the action of the swap (i+1 i+2); for modular tables
// the action is on the left, for Markl tables on the right.
struct TableComponent {
    int dim = 0;
    int degree = 0;
    std::vector<RationalMatrix> transpositions;
};

// o_ab : O(m; g1) x O(n; g2) -> O(m+n-2; g1+g2). The result lists the legs of
// the left input except a, then those of the right input except b, each in
// increasing order. Column i * dim(right) + j holds the image of e_i x e_j.
struct CompositionKey {
    int m, g1, n, g2, a, b;
    auto operator<=>(const CompositionKey&) const = default;
};

// o_uv = o_vu : O(n; g) -> O(n-2; g+1), stored with u < v.
struct ContractionKey {
    int n, g, u, v;
    auto operator<=>(const ContractionKey&) const = default;
};

struct ModularTable {
    int max_legs = 0;
    int max_genus = 0;
    int op_degree = 0;  // even tables 0, odd tables +-1
    std::map<std::pair<int, int>, TableComponent> components;  // (legs, genus), every pair in bounds
    std::map<CompositionKey, RationalMatrix> compositions;     // missing keys are zero maps
    std::map<ContractionKey, RationalMatrix> contractions;

    bool odd() const { return op_degree % 2 != 0; }
    const TableComponent& component(int n, int g) const;
    bool in_bounds(int n, int g) const { return n >= 0 && g >= 0 && n <= max_legs && g <= max_genus; }
};

// o_i : S(m) x S(n) -> S(m+n-1), keyed by (m, n, i).
struct MarklTable {
    int max_arity = 0;
    int op_degree = 0;
    std::map<int, TableComponent> components;  // every arity 0..max_arity
    std::map<std::tuple<int, int, int>, RationalMatrix> compositions;

    bool odd() const { return op_degree % 2 != 0; }
    const TableComponent& component(int n) const;
};

struct AxiomResult {
    std::string axiom;
    long checked = 0;
    long skipped = 0;  // an intermediate or the result leaves the bounds
    long failed = 0;
    std::string witness;
    bool passed() const { return failed == 0; }
};

struct AxiomReport {
    std::string checker;
    std::vector<AxiomResult> axioms;
    bool passed() const;
    const AxiomResult& at(const std::string& axiom) const;
};

// Shapes, indices, matrix sizes and degree bookkeeping. Throws TableError.
void validate(const ModularTable& t);
void validate(const MarklTable& t);

// Axioms are named action, equivariance, contraction_equivariance, symmetry,
// associativity, contractions_commute, double_contraction, contract_then_compose.
AxiomReport check_modular(const ModularTable& t);
// Same instances with the odd signs: operations are odd, so moving one past
// an element x costs (-1)^|x|, and the last four axioms change sign.
AxiomReport check_odd_modular(const ModularTable& t);
// Axioms action, sequential, parallel, equivariance. Odd tables get the
// associativities with a minus sign and Koszul signs for odd operations.
AxiomReport check_markl(const MarklTable& t);

// Level-wise suspension. Markl: every arity shifts by +1 and o_i picks up
// (-1)^{|f|+1}. Modular: O(n; g) shifts by n+g-1 so that both operation kinds
// drop one degree; compositions carry the Koszul sign of the composite, the
// action is kept or twisted by sgn, and a sign correction is solved over GF(2)
// so that every instance with a nonzero side transports exactly. Throws
// TableError when no correction exists, which happens once live contractions
// meet genus >= 1.
MarklTable suspend(const MarklTable& t);
ModularTable suspend(const ModularTable& t);

ModularTable terminal_modular(int max_legs, int max_genus);
// O(n; g) = V^{x n} for V = k^dim with the standard symmetric pairing.
ModularTable endomorphism_modular(int dim, int max_legs, int max_genus);
// Odd table on stable (n; g), 2g+n >= 3, one-dimensional in degree n+3g-3.
// Compositions are +-1 with signs solved from the odd axioms, the action is
// the sign representation, contractions are zero. Throws TableError if the
// signs are inconsistent within the bounds.
ModularTable det_modular(int max_legs, int max_genus);

MarklTable associative_markl(int max_arity);
// S(n) = Hom(V^{x n}, V) for V = k^dim.
MarklTable endomorphism_markl(int dim, int max_arity);

using OperadTable = std::variant<ModularTable, MarklTable>;
nlohmann::ordered_json to_json(const ModularTable& t);
nlohmann::ordered_json to_json(const MarklTable& t);
nlohmann::ordered_json to_json(const AxiomReport& r);
// Throws TableError on malformed input.
OperadTable table_from_json(const nlohmann::ordered_json& j);

}  // namespace operadforge
