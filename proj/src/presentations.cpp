#include "operadforge/presentations.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "operadforge/shapes.hpp"

namespace operadforge {

std::vector<std::string> builtin_names() { return {"ggGrc", "Tr", "RTr", "prePermutad", "Whe", "Per"}; }

std::string presentation_for(Flavor f) { return flavor_name(f); }

namespace {

bool directed_soul(Flavor f) { return is_directed(f); }

// (tail, head) per edge of a soul; for undirected souls the stored order.
std::vector<std::pair<int, int>> arcs(const DecoratedGraph& g) {
    auto vo = vertex_of(g);
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : edges(g)) {
        if (!g.orientation.empty() && g.orientation[a] == Orient::In) std::swap(a, b);
        out.emplace_back(vo[a], vo[b]);
    }
    return out;
}

}  // namespace

std::vector<DecoratedGraph> two_edge_shapes(Flavor f) {
    std::map<std::string, DecoratedGraph> found;
    const Flavor sf = directed_soul(f) ? Flavor::Whe : Flavor::ggGrc;
    const bool tree = f == Flavor::Tr || f == Flavor::RTr || f == Flavor::Per;
    for (int v = 1; v <= 3; ++v) {
        if (tree && v != 3) continue;
        for (int a = 0; a < v; ++a)
            for (int b = 0; b < v; ++b)
                for (int c = 0; c < v; ++c)
                    for (int d = 0; d < v; ++d) {
                        DecoratedGraph g;
                        try {
                            g = build_graph(sf, v, {{a, b}, {c, d}});
                        } catch (const ValidationError&) {
                            continue;
                        }
                        if (f == Flavor::RTr) {
                            std::vector<int> outdeg(v, 0);
                            for (auto [t, h] : arcs(g)) ++outdeg[t];
                            if (*std::max_element(outdeg.begin(), outdeg.end()) > 1) continue;
                        }
                        auto [cg, iso] = canonical_form(g);
                        found.emplace(canonical_key(cg), cg);
                    }
    }
    std::vector<DecoratedGraph> out;
    for (auto& [k, g] : found) out.push_back(g);
    return out;
}

std::string shape_name(const DecoratedGraph& soul, Flavor f) {
    auto as = arcs(soul);
    int v = soul.num_vertices();
    if (v == 1) return "two_loops";
    const bool directed = !soul.orientation.empty();
    if (v == 2) {
        int loops = 0;
        for (auto [t, h] : as) loops += t == h;
        if (loops == 1) {
            if (!directed) return "loop_and_edge";
            auto loop = as[0].first == as[0].second ? as[0] : as[1];
            auto edge = as[0].first == as[0].second ? as[1] : as[0];
            return loop.first == edge.first ? "lollipop_source" : "lollipop_target";
        }
        if (!directed) return "parallel_edges";
        return as[0] == as[1] ? "parallel_edges" : "circle";
    }
    if (!directed) return "path";
    std::vector<int> in(v, 0), out(v, 0);
    for (auto [t, h] : as) ++out[t], ++in[h];
    bool fork_in = std::find(in.begin(), in.end(), 2) != in.end();
    bool fork_out = std::find(out.begin(), out.end(), 2) != out.end();
    if (f == Flavor::RTr) return fork_in ? "parallel" : "sequential";
    if (fork_in) return "fork_in";
    if (fork_out) return "fork_out";
    return "path";
}

namespace {

Subspace difference_relation(const Collection& e, const DecoratedGraph& shape) {
    auto c = component(e, OpCatObject(shape), 2);
    if (c->dim() != 2) throw std::logic_error("2-edge shape without two tower classes");
    return span(2, {SparseVector{{0, Rational(1)}, {1, Rational(-1)}}});
}

}  // namespace

QuadraticData builtin_presentation(const std::string& name) {
    QuadraticData q;
    q.name = name;
    q.generators = Collection::binary(0);
    Flavor shapes_of;
    if (name == "prePermutad") {
        q.flavor = Flavor::RTr;
        shapes_of = Flavor::RTr;
    } else {
        auto names = builtin_names();
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw std::invalid_argument("unknown presentation: " + name);
        q.flavor = parse_flavor(name);
        shapes_of = q.flavor;
    }
    for (const auto& s : two_edge_shapes(shapes_of)) {
        RelationFamily fam{shape_name(s, shapes_of), s, Subspace{2, {}}};
        if (name != "prePermutad" || fam.name == "sequential") fam.relations = difference_relation(q.generators, s);
        q.families.emplace(canonical_key(s), std::move(fam));
    }
    return q;
}

namespace {

struct PairTerm {
    Rational coeff;
    int first;
    int second;
};

// Relation vector on the 2-edge fiber {a, b} of the graph obtained from y by
// contracting `prefix`, as words in the edge ids of y.
std::vector<std::vector<PairTerm>> relations_on_pair(const QuadraticData& q, const DecoratedGraph& y,
                                                     EdgeMask prefix, int a, int b) {
    std::vector<int> cur(num_edges(y));
    std::iota(cur.begin(), cur.end(), 0);
    OpCatObject g = y;
    for (int e : mask_edges(prefix)) {
        auto m = contract_edges(g, {cur[e]}, false);
        auto qm = quotient_edge_map(m);
        std::vector<int> back(grade(g), -1);
        for (int i = 0; i < static_cast<int>(qm.size()); ++i) back[qm[i]] = i;
        for (int& c : cur)
            if (c >= 0) c = back[c];
        g = morphism_quotient(m);
    }
    auto m = contract_edges(g, {cur[a], cur[b]}, false);
    auto fm = fiber_edge_map(m);  // fiber edge -> current edge
    std::vector<int> orig(grade(g), -1);
    for (int e = 0; e < static_cast<int>(cur.size()); ++e)
        if (cur[e] >= 0) orig[cur[e]] = e;
    auto fsoul = soul_graph(morphism_fiber(m));
    auto it = q.families.find(canonical_key(fsoul));
    if (it == q.families.end()) throw std::logic_error("2-edge fiber with no relation family: " + canonical_key(fsoul));
    const auto& fam = it->second;
    std::vector<std::vector<PairTerm>> out;
    if (fam.relations.dim() == 0) return out;
    auto isos = isomorphisms(fsoul, fam.shape);
    if (isos.empty()) throw std::logic_error("relation family shape mismatch");
    auto em = isos.front().edge_map();  // fiber edge -> shape edge
    std::vector<int> shape_to_y(2);
    for (int fe = 0; fe < 2; ++fe) shape_to_y[em[fe]] = orig[fm[fe]];
    auto sc = component(q.generators, OpCatObject(fam.shape), 2);
    for (const auto& r : fam.relations.basis) {
        std::vector<PairTerm> terms;
        for (const auto& [j, c] : r) {
            const auto& w = sc->basis[j].word;
            terms.push_back({c, shape_to_y[mask_edges(w[0]).front()], shape_to_y[mask_edges(w[1]).front()]});
        }
        out.push_back(std::move(terms));
    }
    return out;
}

DecoratedGraph soul_of(const OpCatObject& x) { return soul_graph(x); }

}  // namespace

Subspace relation_space(const QuadraticData& q, const OpCatObject& x) {
    if (grade(x) != 2) throw std::invalid_argument("relation_space: object must have two edges");
    return ideal_component(q, x, 2);
}

Subspace ideal_component(const QuadraticData& q, const OpCatObject& x, int k) {
    const int e = grade(x);
    auto comp = component(q.generators, x, k);
    if (comp->dim() == 0 || k != e || k < 2) return Subspace{comp->dim(), {}};
    DecoratedGraph y = soul_of(x);
    Skeleton sk = skeleton(x);
    EchelonBasis ideal(comp->dim());
    std::map<std::tuple<EdgeMask, int, int>, std::vector<std::vector<PairTerm>>> memo;
    std::vector<int> order(e);
    std::iota(order.begin(), order.end(), 0);
    do {
        Contraction c(sk);
        EdgeMask prefix = 0;
        for (int i = 0; i + 1 < e; ++i) {
            int a = order[i], b = order[i + 1];
            if (!c.disjoint(EdgeMask(1) << a, EdgeMask(1) << b)) {
                auto key = std::make_tuple(prefix, std::min(a, b), std::max(a, b));
                auto it = memo.find(key);
                if (it == memo.end())
                    it = memo.emplace(key, relations_on_pair(q, y, prefix, std::min(a, b), std::max(a, b))).first;
                for (const auto& rel : it->second) {
                    SparseVector v;
                    for (const auto& t : rel) {
                        Monomial m;
                        for (int j = 0; j < i; ++j) m.blocks.push_back({order[j]});
                        m.blocks.push_back({t.first});
                        m.blocks.push_back({t.second});
                        for (int j = i + 2; j < e; ++j) m.blocks.push_back({order[j]});
                        m.gens.assign(e, 0);
                        auto n = normalize(q.generators, *comp, m);
                        if (n.index >= 0) axpy(v, t.coeff * n.sign, SparseVector{{n.index, Rational(1)}});
                    }
                    ideal.insert(v);
                }
            }
            c.contract(EdgeMask(1) << a);
            prefix |= EdgeMask(1) << a;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return ideal.subspace();
}

std::map<int, int> quotient_dim(const QuadraticData& q, const OpCatObject& x) {
    std::map<int, int> out;
    for (int k = 1; k <= grade(x); ++k) {
        auto comp = component(q.generators, x, k);
        if (comp->dim() == 0) continue;
        out[k] = comp->dim() - ideal_component(q, x, k).dim();
    }
    return out;
}

RationalMatrix pairing_matrix(const QuadraticData& q, const OpCatObject& x) {
    if (grade(x) != 2) throw std::invalid_argument("pairing_matrix: object must have two edges");
    Collection dual = q.generators;
    dual.name += "*";
    for (auto& [g, s] : dual.by_grade) s.degree += 1;
    auto left = component(dual, x, 2);
    auto right = component(q.generators, x, 2);
    RationalMatrix p(left->dim(), right->dim());
    for (int i = 0; i < left->dim(); ++i)
        for (int j = 0; j < right->dim(); ++j)
            if (left->basis[i].word == right->basis[j].word && left->basis[i].gens == right->basis[j].gens)
                p.set(i, j, 1);
    return p;
}

QuadraticData koszul_dual(const QuadraticData& q) {
    QuadraticData d;
    d.name = q.name + "!";
    d.flavor = q.flavor;
    d.generators = q.generators;
    d.generators.name += "*";
    for (auto& [g, s] : d.generators.by_grade) s.degree += 1;
    for (const auto& [key, fam] : q.families) {
        auto p = pairing_matrix(q, OpCatObject(fam.shape));
        // <v, r> = v^T P r for v in the dual component
        RelationFamily df{fam.name, fam.shape, annihilator(fam.relations, p)};
        d.families.emplace(key, std::move(df));
    }
    return d;
}

DualComponent dual_component_as_determinant(Flavor f, const OpCatObject& x) {
    static std::mutex mu;
    static std::map<Flavor, QuadraticData> duals;
    const QuadraticData* d;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = duals.find(f);
        if (it == duals.end()) it = duals.emplace(f, koszul_dual(builtin_presentation(presentation_for(f)))).first;
        d = &it->second;
    }
    const int e = grade(x);
    if (e == 0) return {0, 0};
    auto dims = quotient_dim(*d, x);
    return {dims.count(e) ? dims.at(e) : 0, e * d->generators.at_grade(1).degree};
}

}  // namespace operadforge
