#include "operadforge/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace operadforge {

std::string flavor_name(Flavor f) {
    switch (f) {
    case Flavor::ggGrc: return "ggGrc";
    case Flavor::Tr: return "Tr";
    case Flavor::RTr: return "RTr";
    case Flavor::Whe: return "Whe";
    case Flavor::Per: return "Per";
    }
    return "?";
}

Flavor parse_flavor(const std::string& s) {
    for (Flavor f : {Flavor::ggGrc, Flavor::Tr, Flavor::RTr, Flavor::Whe, Flavor::Per})
        if (flavor_name(f) == s) return f;
    throw ValidationError("unknown flavor: " + s);
}

bool is_directed(Flavor f) { return f == Flavor::RTr || f == Flavor::Whe; }
bool has_genus(Flavor f) { return f == Flavor::ggGrc; }

std::vector<std::pair<int, int>> edges(const DecoratedGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (g.involution[h] > h) out.emplace_back(h, g.involution[h]);
    return out;
}

int num_edges(const DecoratedGraph& g) {
    int n = 0;
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (g.involution[h] > h) ++n;
    return n;
}

std::vector<int> vertex_of(const DecoratedGraph& g) {
    std::vector<int> v(g.num_half_edges(), -1);
    for (int i = 0; i < g.num_vertices(); ++i)
        for (int h : g.vertices[i]) v.at(h) = i;
    return v;
}

int total_genus(const DecoratedGraph& g) {
    int s = std::accumulate(g.genus.begin(), g.genus.end(), 0);
    return s + first_betti(g);
}

int first_betti(const DecoratedGraph& g) { return num_edges(g) - g.num_vertices() + 1; }

namespace {

int find_root(std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

bool connected(const DecoratedGraph& g) {
    if (g.num_vertices() == 0) return false;
    std::vector<int> p(g.num_vertices());
    std::iota(p.begin(), p.end(), 0);
    auto vo = vertex_of(g);
    int comps = g.num_vertices();
    for (auto [a, b] : edges(g)) {
        int x = find_root(p, vo[a]), y = find_root(p, vo[b]);
        if (x != y) {
            p[x] = y;
            --comps;
        }
    }
    return comps == 1;
}

}  // namespace

void validate_structure(const DecoratedGraph& g) {
    const int H = g.num_half_edges();
    for (int h = 0; h < H; ++h) {
        int t = g.involution[h];
        if (t < 0 || t >= H || g.involution[t] != h)
            throw ValidationError("involution is not self-inverse at half-edge " + std::to_string(h));
    }
    if (g.vertices.empty()) throw ValidationError("graph has no vertices");
    std::vector<int> seen(H, 0);
    for (const auto& v : g.vertices) {
        if (v.empty() && !(g.num_vertices() == 1 && H == 0))
            throw ValidationError("empty vertex");
        for (int h : v) {
            if (h < 0 || h >= H) throw ValidationError("vertex lists unknown half-edge");
            if (seen[h]++) throw ValidationError("half-edge on two vertices");
        }
    }
    for (int h = 0; h < H; ++h)
        if (!seen[h]) throw ValidationError("half-edge on no vertex");
    std::vector<int> legseen(H, 0);
    for (int h : g.legs) {
        if (h < 0 || h >= H || !g.is_leg(h)) throw ValidationError("leg order lists a non-leg");
        if (legseen[h]++) throw ValidationError("leg listed twice");
    }
    for (int h = 0; h < H; ++h)
        if (g.is_leg(h) && !legseen[h]) throw ValidationError("leg missing from global order");
    if (has_genus(g.flavor)) {
        if (static_cast<int>(g.genus.size()) != g.num_vertices())
            throw ValidationError("genus table does not match vertices");
        for (int x : g.genus)
            if (x < 0) throw ValidationError("negative genus");
    } else if (!g.genus.empty()) {
        throw ValidationError("genus given for a flavor without genus");
    }
    if (is_directed(g.flavor)) {
        if (static_cast<int>(g.orientation.size()) != H)
            throw ValidationError("orientation table does not match half-edges");
        for (auto [a, b] : edges(g))
            if (g.orientation[a] == g.orientation[b])
                throw ValidationError("internal edge does not pair out with in");
    } else if (!g.orientation.empty()) {
        throw ValidationError("orientation given for an undirected flavor");
    }
    if (!connected(g)) throw ValidationError("graph is not connected");
}

void validate(const DecoratedGraph& g) {
    if (g.flavor == Flavor::Per) throw ValidationError("Per objects are surjections, not graphs");
    validate_structure(g);
    if (g.flavor == Flavor::Tr || g.flavor == Flavor::RTr) {
        if (num_edges(g) != g.num_vertices() - 1) throw ValidationError("not a tree");
    }
    if (g.flavor == Flavor::RTr) {
        for (const auto& v : g.vertices) {
            int outs = 0;
            for (int h : v) outs += g.orientation[h] == Orient::Out;
            if (outs != 1 || g.orientation[v.front()] != Orient::Out)
                throw ValidationError("RTr vertex needs exactly one output, first in its local order");
        }
        int out_legs = 0;
        for (int h : g.legs) out_legs += g.orientation[h] == Orient::Out;
        if (out_legs != 1) throw ValidationError("RTr graph needs exactly one root leg");
    }
}

std::vector<int> GraphIso::vertex_map() const {
    auto vs = vertex_of(source);
    auto vt = vertex_of(target);
    std::vector<int> m(source.num_vertices(), -1);
    for (int h = 0; h < source.num_half_edges(); ++h) m[vs[h]] = vt[half_edge_map[h]];
    if (source.num_vertices() == 1 && source.num_half_edges() == 0) m[0] = 0;
    return m;
}

std::vector<int> GraphIso::edge_map() const {
    auto es = edges(source);
    auto et = edges(target);
    std::map<int, int> by_half;
    for (int i = 0; i < static_cast<int>(et.size()); ++i) by_half[et[i].first] = i;
    std::vector<int> m;
    for (auto [a, b] : es) {
        int x = half_edge_map[a], y = half_edge_map[b];
        m.push_back(by_half.at(std::min(x, y)));
    }
    return m;
}

GraphIso compose(const GraphIso& second, const GraphIso& first) {
    GraphIso r{first.source, second.target, {}};
    for (int h : first.half_edge_map) r.half_edge_map.push_back(second.half_edge_map.at(h));
    return r;
}

GraphIso inverse(const GraphIso& f) {
    GraphIso r{f.target, f.source, std::vector<int>(f.half_edge_map.size())};
    for (int h = 0; h < static_cast<int>(f.half_edge_map.size()); ++h) r.half_edge_map[f.half_edge_map[h]] = h;
    return r;
}

bool is_isomorphism(const GraphIso& f) {
    const auto& s = f.source;
    const auto& t = f.target;
    const int H = s.num_half_edges();
    if (t.num_half_edges() != H || static_cast<int>(f.half_edge_map.size()) != H) return false;
    std::vector<int> hit(H, 0);
    for (int h : f.half_edge_map) {
        if (h < 0 || h >= H || hit[h]++) return false;
    }
    for (int h = 0; h < H; ++h)
        if (f.half_edge_map[s.involution[h]] != t.involution[f.half_edge_map[h]]) return false;
    if (s.legs.size() != t.legs.size()) return false;
    for (std::size_t i = 0; i < s.legs.size(); ++i)
        if (f.half_edge_map[s.legs[i]] != t.legs[i]) return false;
    auto vs = vertex_of(s);
    auto vt = vertex_of(t);
    if (s.num_vertices() != t.num_vertices()) return false;
    std::vector<int> vm(s.num_vertices(), -1);
    for (int h = 0; h < H; ++h) {
        int& x = vm[vs[h]];
        if (x == -1) x = vt[f.half_edge_map[h]];
        if (x != vt[f.half_edge_map[h]]) return false;
    }
    std::set<int> images(vm.begin(), vm.end());
    if (static_cast<int>(images.size()) != s.num_vertices() && H > 0) return false;
    if (!s.genus.empty() || !t.genus.empty()) {
        if (s.genus.size() != t.genus.size()) return false;
        for (int v = 0; v < s.num_vertices(); ++v)
            if (vm[v] >= 0 && s.genus[v] != t.genus[vm[v]]) return false;
    }
    if (!s.orientation.empty() || !t.orientation.empty()) {
        if (s.orientation.size() != t.orientation.size()) return false;
        for (int h = 0; h < H; ++h)
            if (s.orientation[h] != t.orientation[f.half_edge_map[h]]) return false;
    }
    return true;
}

namespace {

// Descriptor of a half-edge relative to a vertex ordering: (orientation code,
// kind, argument). Legs have kind 0 and argument = global position (or 0 when
// the leg order is forgotten); internal half-edges have kind 1 and argument =
// position of the partner's vertex.
using Desc = std::array<int, 3>;

struct Prepared {
    const DecoratedGraph* g;
    std::vector<int> vtx;       // half-edge -> vertex
    std::vector<int> legpos;    // half-edge -> global position, -1 for internal
    std::vector<std::vector<int>> invariant;  // per vertex
    bool forget;
};

int ocode(const DecoratedGraph& g, int h) {
    if (g.orientation.empty()) return 0;
    return g.orientation[h] == Orient::Out ? 0 : 1;
}

Prepared prepare(const DecoratedGraph& g, bool forget) {
    Prepared p{&g, vertex_of(g), std::vector<int>(g.num_half_edges(), -1), {}, forget};
    for (int i = 0; i < static_cast<int>(g.legs.size()); ++i) p.legpos[g.legs[i]] = i;
    const int V = g.num_vertices();
    std::vector<std::vector<int>> inv0(V);
    for (int v = 0; v < V; ++v) {
        auto& x = inv0[v];
        x.push_back(g.genus.empty() ? 0 : g.genus[v]);
        x.push_back(static_cast<int>(g.vertices[v].size()));
        std::vector<int> local;
        for (int h : g.vertices[v]) {
            int o = ocode(g, h);
            if (g.is_leg(h))
                local.push_back(o * 1000 + (forget ? 0 : 1 + p.legpos[h]));
            else if (p.vtx[g.involution[h]] == v)
                local.push_back(o * 1000 + 999);
            else
                local.push_back(o * 1000 + 998);
        }
        std::sort(local.begin(), local.end());
        x.insert(x.end(), local.begin(), local.end());
    }
    // One refinement round: append the sorted invariants of the neighbours.
    std::vector<std::vector<int>> classes = inv0;
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    auto cls = [&](int v) {
        return static_cast<int>(std::lower_bound(classes.begin(), classes.end(), inv0[v]) - classes.begin());
    };
    p.invariant = inv0;
    for (int v = 0; v < V; ++v) {
        std::vector<int> nb;
        for (int h : g.vertices[v])
            if (!g.is_leg(h)) nb.push_back(ocode(g, h) * 100000 + cls(p.vtx[g.involution[h]]));
        std::sort(nb.begin(), nb.end());
        p.invariant[v].push_back(-1);
        p.invariant[v].insert(p.invariant[v].end(), nb.begin(), nb.end());
    }
    return p;
}

// Vertex groups sorted by invariant; returns groups of vertex indices.
std::vector<std::vector<int>> groups_of(const Prepared& p) {
    std::map<std::vector<int>, std::vector<int>> m;
    for (int v = 0; v < static_cast<int>(p.invariant.size()); ++v) m[p.invariant[v]].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [k, vs] : m) out.push_back(vs);
    return out;
}

Desc descriptor(const Prepared& p, const std::vector<int>& pos, int h) {
    const auto& g = *p.g;
    if (g.is_leg(h)) return {ocode(g, h), 0, p.forget ? 0 : p.legpos[h]};
    return {ocode(g, h), 1, pos[p.vtx[g.involution[h]]]};
}

std::vector<int> encode(const Prepared& p, const std::vector<int>& order) {
    const auto& g = *p.g;
    std::vector<int> pos(g.num_vertices());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    std::vector<int> code;
    for (int v : order) {
        code.push_back(g.genus.empty() ? 0 : g.genus[v]);
        code.push_back(static_cast<int>(g.vertices[v].size()));
        std::vector<Desc> ds;
        for (int h : g.vertices[v]) ds.push_back(descriptor(p, pos, h));
        std::sort(ds.begin(), ds.end());
        for (const auto& d : ds) code.insert(code.end(), d.begin(), d.end());
    }
    return code;
}

// Calls f(order) for every vertex ordering that lists the groups in sequence.
void for_each_ordering(const std::vector<std::vector<int>>& groups,
                       const std::function<void(const std::vector<int>&)>& f) {
    std::vector<std::vector<int>> perm = groups;
    for (auto& gr : perm) std::sort(gr.begin(), gr.end());
    std::vector<int> order;
    while (true) {
        order.clear();
        for (const auto& gr : perm) order.insert(order.end(), gr.begin(), gr.end());
        f(order);
        std::size_t i = 0;
        for (; i < perm.size(); ++i) {
            if (std::next_permutation(perm[i].begin(), perm[i].end())) break;
        }
        if (i == perm.size()) break;
    }
}

struct Best {
    std::vector<int> code;
    std::vector<int> order;
};

Best minimal_encoding(const Prepared& p) {
    Best best;
    bool first = true;
    for_each_ordering(groups_of(p), [&](const std::vector<int>& order) {
        auto c = encode(p, order);
        if (first || c < best.code) {
            best.code = std::move(c);
            best.order = order;
            first = false;
        }
    });
    return best;
}

// Graph determined by a minimal encoding (see pairing rules in the header).
DecoratedGraph build_canonical(const DecoratedGraph& g, const Prepared& p, const std::vector<int>& order) {
    const int V = g.num_vertices();
    std::vector<int> pos(V);
    for (int i = 0; i < V; ++i) pos[order[i]] = i;
    DecoratedGraph c;
    c.flavor = g.flavor;
    c.involution.assign(g.num_half_edges(), -1);
    c.vertices.resize(V);
    c.legs.assign(g.legs.size(), -1);
    if (!g.genus.empty()) c.genus.resize(V);
    if (!g.orientation.empty()) c.orientation.resize(g.num_half_edges());
    std::vector<std::vector<Desc>> descs(V);
    int next = 0;
    for (int i = 0; i < V; ++i) {
        int v = order[i];
        if (!g.genus.empty()) c.genus[i] = g.genus[v];
        for (int h : g.vertices[v]) descs[i].push_back(descriptor(p, pos, h));
        std::sort(descs[i].begin(), descs[i].end());
        for (const auto& d : descs[i]) {
            int id = next++;
            c.vertices[i].push_back(id);
            if (!g.orientation.empty()) c.orientation[id] = d[0] == 0 ? Orient::Out : Orient::In;
            if (d[1] == 0) {
                c.involution[id] = id;
                c.legs[d[2]] = id;
            }
        }
    }
    // Pair internal half-edges: j-th of a run with the j-th of the matching run.
    std::map<std::array<int, 4>, std::vector<int>> runs;  // (vertex pos, o, kind, arg) -> ids
    for (int i = 0; i < V; ++i)
        for (std::size_t k = 0; k < descs[i].size(); ++k) {
            const auto& d = descs[i][k];
            if (d[1] == 1) runs[{i, d[0], d[1], d[2]}].push_back(c.vertices[i][k]);
        }
    const bool directed = !g.orientation.empty();
    for (auto& [key, ids] : runs) {
        int i = key[0], o = key[1], q = key[3];
        if (q < i) continue;
        if (q == i) {
            if (!directed) {
                for (std::size_t j = 0; j + 1 < ids.size(); j += 2) {
                    c.involution[ids[j]] = ids[j + 1];
                    c.involution[ids[j + 1]] = ids[j];
                }
            } else if (o == 0) {
                const auto& ins = runs.at({i, 1, 1, i});
                for (std::size_t j = 0; j < ids.size(); ++j) {
                    c.involution[ids[j]] = ins[j];
                    c.involution[ins[j]] = ids[j];
                }
            }
            continue;
        }
        int o2 = directed ? 1 - o : 0;
        const auto& other = runs.at({q, o2, 1, i});
        for (std::size_t j = 0; j < ids.size(); ++j) {
            c.involution[ids[j]] = other[j];
            c.involution[other[j]] = ids[j];
        }
    }
    return c;
}

// Backtracking over half-edge maps with a fixed vertex bijection.
void extend_isos(const Prepared& ps, const Prepared& pt, const std::vector<int>& vmap,
                 const std::vector<int>& pos_s, const std::vector<int>& pos_t, std::vector<int>& hmap,
                 std::vector<char>& used, int h, const std::function<bool(const std::vector<int>&)>& emit,
                 bool& stop) {
    const auto& s = *ps.g;
    const auto& t = *pt.g;
    const int H = s.num_half_edges();
    while (h < H && hmap[h] != -1) ++h;
    if (h == H) {
        if (!emit(hmap)) stop = true;
        return;
    }
    int v = ps.vtx[h];
    int w = vmap[v];
    Desc ds = descriptor(ps, pos_s, h);
    for (int x : t.vertices[w]) {
        if (used[x]) continue;
        if (descriptor(pt, pos_t, x) != ds) continue;
        if (s.is_leg(h)) {
            hmap[h] = x;
            used[x] = 1;
            extend_isos(ps, pt, vmap, pos_s, pos_t, hmap, used, h + 1, emit, stop);
            hmap[h] = -1;
            used[x] = 0;
        } else {
            int hp = s.involution[h];
            int xp = t.involution[x];
            if (hp == h || xp == x) continue;
            if (hmap[hp] != -1 || (used[xp] && xp != x)) continue;
            if (pt.vtx[xp] != vmap[ps.vtx[hp]]) continue;
            if (descriptor(pt, pos_t, xp) != descriptor(ps, pos_s, hp)) continue;
            hmap[h] = x;
            hmap[hp] = xp;
            used[x] = used[xp] = 1;
            extend_isos(ps, pt, vmap, pos_s, pos_t, hmap, used, h + 1, emit, stop);
            hmap[h] = hmap[hp] = -1;
            used[x] = used[xp] = 0;
        }
        if (stop) return;
    }
}

// Enumerates isomorphisms; emit returns false to stop early.
void search_isos(const DecoratedGraph& s, const DecoratedGraph& t, bool forget,
                 const std::function<bool(const std::vector<int>&)>& emit) {
    if (s.flavor != t.flavor || s.num_half_edges() != t.num_half_edges() ||
        s.num_vertices() != t.num_vertices() || s.legs.size() != t.legs.size())
        return;
    Prepared ps = prepare(s, forget);
    Prepared pt = prepare(t, forget);
    auto gs = groups_of(ps);
    auto gt = groups_of(pt);
    if (gs.size() != gt.size()) return;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (gs[i].size() != gt[i].size() || ps.invariant[gs[i][0]] != pt.invariant[gt[i][0]]) return;
    }
    std::vector<int> order_s;
    for (const auto& gr : gs) order_s.insert(order_s.end(), gr.begin(), gr.end());
    std::vector<int> pos_s(s.num_vertices());
    for (int i = 0; i < static_cast<int>(order_s.size()); ++i) pos_s[order_s[i]] = i;
    auto code_s = encode(ps, order_s);
    bool stop = false;
    for_each_ordering(gt, [&](const std::vector<int>& order_t) {
        if (stop) return;
        if (encode(pt, order_t) != code_s) return;
        std::vector<int> vmap(s.num_vertices());
        std::vector<int> pos_t(t.num_vertices());
        for (int i = 0; i < static_cast<int>(order_t.size()); ++i) {
            vmap[order_s[i]] = order_t[i];
            pos_t[order_t[i]] = i;
        }
        std::vector<int> hmap(s.num_half_edges(), -1);
        std::vector<char> used(t.num_half_edges(), 0);
        extend_isos(ps, pt, vmap, pos_s, pos_t, hmap, used, 0, emit, stop);
    });
}

std::string code_string(Flavor f, const std::vector<int>& code) {
    std::ostringstream os;
    os << flavor_name(f) << ':';
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (i) os << ',';
        os << code[i];
    }
    return os.str();
}

}  // namespace

std::vector<GraphIso> isomorphisms(const DecoratedGraph& source, const DecoratedGraph& target,
                                   bool forget_leg_order) {
    std::vector<GraphIso> out;
    if (source.num_half_edges() == 0 && target.num_half_edges() == 0) {
        if (source.flavor == target.flavor && source.genus == target.genus &&
            source.num_vertices() == target.num_vertices())
            out.push_back({source, target, {}});
        return out;
    }
    search_isos(source, target, forget_leg_order, [&](const std::vector<int>& m) {
        out.push_back({source, target, m});
        return true;
    });
    return out;
}

std::vector<GraphIso> automorphisms(const DecoratedGraph& g) {
    validate(g);
    return isomorphisms(g, g);
}

std::pair<DecoratedGraph, GraphIso> canonical_form(const DecoratedGraph& g) {
    validate_structure(g);
    if (g.num_half_edges() == 0) return {g, GraphIso{g, g, {}}};
    Prepared p = prepare(g, false);
    Best best = minimal_encoding(p);
    DecoratedGraph c = build_canonical(g, p, best.order);
    std::vector<int> first;
    search_isos(g, c, false, [&](const std::vector<int>& m) {
        first = m;
        return false;
    });
    if (first.empty()) throw std::logic_error("canonical_form: no isomorphism to canonical graph");
    return {c, GraphIso{g, c, first}};
}

std::string canonical_key(const DecoratedGraph& g) {
    validate_structure(g);
    if (g.num_half_edges() == 0)
        return code_string(g.flavor, {g.genus.empty() ? 0 : g.genus[0], 0});
    Prepared p = prepare(g, false);
    return code_string(g.flavor, minimal_encoding(p).code);
}

std::string virtual_key(const DecoratedGraph& g) {
    validate_structure(g);
    if (g.num_half_edges() == 0)
        return "V" + code_string(g.flavor, {g.genus.empty() ? 0 : g.genus[0], 0});
    Prepared p = prepare(g, true);
    return "V" + code_string(g.flavor, minimal_encoding(p).code);
}

DecoratedGraph soul(const DecoratedGraph& g) {
    std::vector<int> keep, newid(g.num_half_edges(), -1);
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (!g.is_leg(h)) {
            newid[h] = static_cast<int>(keep.size());
            keep.push_back(h);
        }
    DecoratedGraph s;
    s.flavor = is_directed(g.flavor) ? Flavor::Whe : Flavor::ggGrc;
    for (int h : keep) s.involution.push_back(newid[g.involution[h]]);
    for (const auto& v : g.vertices) {
        std::vector<int> nv;
        for (int h : v)
            if (newid[h] >= 0) nv.push_back(newid[h]);
        s.vertices.push_back(nv);
    }
    if (s.flavor == Flavor::ggGrc) s.genus.assign(s.vertices.size(), 0);
    if (is_directed(g.flavor))
        for (int h : keep) s.orientation.push_back(g.orientation[h]);
    return s;
}

std::vector<int> ElementarySplit::fiber_edge_map() const {
    auto fe = edges(fiber);
    auto se = edges(source);
    std::map<int, int> by_half;
    for (int i = 0; i < static_cast<int>(se.size()); ++i) by_half[se[i].first] = i;
    std::vector<int> m;
    for (auto [a, b] : fe) {
        int x = fiber_half_edges[a], y = fiber_half_edges[b];
        m.push_back(by_half.at(std::min(x, y)));
    }
    return m;
}

std::vector<int> ElementarySplit::quotient_edge_map() const {
    auto qe = edges(quotient);
    auto se = edges(source);
    std::map<int, int> by_half;
    for (int i = 0; i < static_cast<int>(se.size()); ++i) by_half[se[i].first] = i;
    std::vector<int> m;
    for (auto [a, b] : qe) {
        int x = quotient_half_edges[a], y = quotient_half_edges[b];
        m.push_back(by_half.at(std::min(x, y)));
    }
    return m;
}

bool edges_connected(const DecoratedGraph& g, const std::vector<int>& edge_ids) {
    if (edge_ids.empty()) return false;
    auto es = edges(g);
    auto vo = vertex_of(g);
    std::vector<int> p(g.num_vertices());
    std::iota(p.begin(), p.end(), 0);
    std::set<int> verts;
    for (int e : edge_ids) {
        int a = vo[es.at(e).first], b = vo[es.at(e).second];
        verts.insert(a);
        verts.insert(b);
        p[find_root(p, a)] = find_root(p, b);
    }
    int r = find_root(p, *verts.begin());
    for (int v : verts)
        if (find_root(p, v) != r) return false;
    return true;
}

ElementarySplit contract(const DecoratedGraph& g, const std::vector<int>& edge_ids, bool check_flavor) {
    if (edge_ids.empty()) throw ValidationError("contract: empty edge set");
    auto es = edges(g);
    std::vector<int> ids = edge_ids;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int e : ids)
        if (e < 0 || e >= static_cast<int>(es.size())) throw ValidationError("contract: unknown edge");
    if (!edges_connected(g, ids)) throw ValidationError("contract: edge set is not connected");

    auto vo = vertex_of(g);
    std::vector<char> in_fiber_edge(g.num_half_edges(), 0);
    std::set<int> fverts;
    for (int e : ids) {
        in_fiber_edge[es[e].first] = in_fiber_edge[es[e].second] = 1;
        fverts.insert(vo[es[e].first]);
        fverts.insert(vo[es[e].second]);
    }

    ElementarySplit sp;
    sp.source = g;
    sp.fiber_edges = ids;

    // Fiber: incident vertices with all their half-edges; dangling ones become legs.
    DecoratedGraph& f = sp.fiber;
    f.flavor = g.flavor;
    std::vector<int> fid(g.num_half_edges(), -1);
    for (int v : fverts)
        for (int h : g.vertices[v]) {
            fid[h] = static_cast<int>(sp.fiber_half_edges.size());
            sp.fiber_half_edges.push_back(h);
        }
    for (int h : sp.fiber_half_edges) {
        f.involution.push_back(in_fiber_edge[h] ? fid[g.involution[h]] : fid[h]);
        if (!g.orientation.empty()) f.orientation.push_back(g.orientation[h]);
    }
    for (int v : fverts) {
        std::vector<int> nv;
        for (int h : g.vertices[v]) nv.push_back(fid[h]);
        f.vertices.push_back(nv);
        if (!g.genus.empty()) f.genus.push_back(g.genus[v]);
    }
    for (int i = 0; i < static_cast<int>(sp.fiber_half_edges.size()); ++i)
        if (!in_fiber_edge[sp.fiber_half_edges[i]]) f.legs.push_back(i);

    // Quotient: fiber collapsed to one vertex at the position of its first vertex.
    DecoratedGraph& q = sp.quotient;
    q.flavor = g.flavor;
    std::vector<int> qid(g.num_half_edges(), -1);
    for (int h = 0; h < g.num_half_edges(); ++h)
        if (!in_fiber_edge[h]) {
            qid[h] = static_cast<int>(sp.quotient_half_edges.size());
            sp.quotient_half_edges.push_back(h);
        }
    for (int h : sp.quotient_half_edges) {
        q.involution.push_back(qid[g.involution[h]]);
        if (!g.orientation.empty()) q.orientation.push_back(g.orientation[h]);
    }
    int first = *fverts.begin();
    int betti = static_cast<int>(ids.size()) - static_cast<int>(fverts.size()) + 1;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (fverts.count(v) && v != first) continue;
        std::vector<int> nv;
        int gen = 0;
        if (v == first) {
            sp.vertex_index = q.num_vertices();
            for (int u : fverts) {
                for (int h : g.vertices[u])
                    if (!in_fiber_edge[h]) nv.push_back(qid[h]);
                if (!g.genus.empty()) gen += g.genus[u];
            }
            gen += betti;
            if (g.flavor == Flavor::RTr) {
                // The surviving output goes first, as rooted trees require.
                std::stable_partition(nv.begin(), nv.end(),
                                      [&](int h) { return q.orientation[h] == Orient::Out; });
            }
        } else {
            for (int h : g.vertices[v]) nv.push_back(qid[h]);
            if (!g.genus.empty()) gen = g.genus[v];
        }
        q.vertices.push_back(nv);
        if (!g.genus.empty()) q.genus.push_back(gen);
    }
    for (int h : g.legs) q.legs.push_back(qid[h]);

    if (check_flavor) {
        validate(f);
        validate(q);
    } else {
        validate_structure(f);
        validate_structure(q);
    }
    return sp;
}

std::vector<ElementarySplit> admissible_splits(const DecoratedGraph& g, bool require_quotient_grade_ge_1) {
    const int E = num_edges(g);
    if (E > 20) throw ValidationError("admissible_splits: too many edges for subset enumeration");
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m < (1u << E); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return __builtin_popcount(a) < __builtin_popcount(b);
    });
    std::vector<ElementarySplit> out;
    for (auto m : masks) {
        if (require_quotient_grade_ge_1 && m == (1u << E) - 1) continue;
        std::vector<int> ids;
        for (int e = 0; e < E; ++e)
            if (m >> e & 1) ids.push_back(e);
        if (!edges_connected(g, ids)) continue;
        out.push_back(contract(g, ids));
    }
    return out;
}

bool is_corolla(const DecoratedGraph& g) { return g.num_vertices() == 1 && num_edges(g) == 0; }

DecoratedGraph corolla(Flavor f, int n, int genus) {
    DecoratedGraph c;
    c.flavor = f;
    c.vertices.resize(1);
    for (int i = 0; i < n; ++i) {
        c.involution.push_back(i);
        c.vertices[0].push_back(i);
        c.legs.push_back(i);
    }
    if (has_genus(f)) c.genus = {genus};
    if (is_directed(f)) {
        c.orientation.assign(n, Orient::In);
        if (n > 0) c.orientation[0] = Orient::Out;
    }
    return c;
}

nlohmann::ordered_json to_json(const DecoratedGraph& g) {
    nlohmann::ordered_json j;
    j["flavor"] = flavor_name(g.flavor);
    auto hs = nlohmann::ordered_json::array();
    for (int h = 0; h < g.num_half_edges(); ++h) hs.push_back(h);
    j["half_edges"] = hs;
    auto inv = nlohmann::ordered_json::array();
    for (auto [a, b] : edges(g)) inv.push_back({a, b});
    j["involution"] = inv;
    j["vertices"] = g.vertices;
    j["legs"] = g.legs;
    if (!g.genus.empty()) {
        nlohmann::ordered_json gj = nlohmann::ordered_json::object();
        for (int v = 0; v < g.num_vertices(); ++v) gj[std::to_string(v)] = g.genus[v];
        j["genus"] = gj;
    }
    if (!g.orientation.empty()) {
        nlohmann::ordered_json oj = nlohmann::ordered_json::object();
        for (int h = 0; h < g.num_half_edges(); ++h)
            oj[std::to_string(h)] = g.orientation[h] == Orient::Out ? "out" : "in";
        j["orientation"] = oj;
    }
    return j;
}

DecoratedGraph graph_from_json(const nlohmann::ordered_json& j) {
    try {
        DecoratedGraph g;
        g.flavor = parse_flavor(j.at("flavor").get<std::string>());
        if (g.flavor == Flavor::Per) throw ValidationError("Per objects use the surjection format");
        std::vector<int> ids = j.at("half_edges").get<std::vector<int>>();
        std::map<int, int> index;
        for (int h : ids) {
            if (index.count(h)) throw ValidationError("duplicate half-edge id");
            int k = static_cast<int>(index.size());
            index[h] = k;
        }
        // Ids are relabelled 0..n-1 in increasing order.
        int k = 0;
        for (auto& [id, ix] : index) ix = k++;
        auto at = [&](int h) {
            auto it = index.find(h);
            if (it == index.end()) throw ValidationError("unknown half-edge id " + std::to_string(h));
            return it->second;
        };
        const int H = static_cast<int>(index.size());
        g.involution.resize(H);
        std::iota(g.involution.begin(), g.involution.end(), 0);
        for (const auto& pr : j.at("involution")) {
            int a = at(pr.at(0).get<int>()), b = at(pr.at(1).get<int>());
            if (a == b || g.involution[a] != a || g.involution[b] != b)
                throw ValidationError("involution pairs overlap");
            g.involution[a] = b;
            g.involution[b] = a;
        }
        for (const auto& v : j.at("vertices")) {
            std::vector<int> nv;
            for (const auto& h : v) nv.push_back(at(h.get<int>()));
            g.vertices.push_back(nv);
        }
        for (const auto& h : j.at("legs")) g.legs.push_back(at(h.get<int>()));
        if (j.contains("genus")) {
            g.genus.assign(g.vertices.size(), 0);
            for (auto it = j.at("genus").begin(); it != j.at("genus").end(); ++it) {
                int v = std::stoi(it.key());
                if (v < 0 || v >= static_cast<int>(g.vertices.size())) throw ValidationError("genus of unknown vertex");
                g.genus[v] = it.value().get<int>();
            }
        }
        if (j.contains("orientation")) {
            g.orientation.assign(H, Orient::In);
            std::vector<char> seen(H, 0);
            for (auto it = j.at("orientation").begin(); it != j.at("orientation").end(); ++it) {
                int h = at(std::stoi(it.key()));
                std::string o = it.value().get<std::string>();
                if (o != "in" && o != "out") throw ValidationError("orientation must be in or out");
                g.orientation[h] = o == "out" ? Orient::Out : Orient::In;
                seen[h] = 1;
            }
            for (char s : seen)
                if (!s) throw ValidationError("orientation missing for a half-edge");
        }
        validate(g);
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed graph JSON: ") + e.what());
    }
}

}  // namespace operadforge
