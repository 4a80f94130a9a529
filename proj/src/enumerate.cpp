#include "operadforge/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "operadforge/shapes.hpp"

namespace operadforge {

void validate(const Bounds& b) {
    if (b.max_edges < 0 || b.max_legs < 0 || b.max_genus < 0) throw std::invalid_argument("bounds must be >= 0");
    if (b.max_edges > 6) throw std::invalid_argument("max_edges above 6 is not supported");
}

namespace {

// (tail, head) vertex pairs of the internal edges, in edge id order.
std::vector<std::pair<int, int>> arcs_of(const DecoratedGraph& g) {
    auto vo = vertex_of(g);
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : edges(g)) {
        if (!g.orientation.empty() && g.orientation[a] == Orient::In) std::swap(a, b);
        out.emplace_back(vo[a], vo[b]);
    }
    return out;
}

bool soul_fits(Flavor f, const DecoratedGraph& s) {
    const int e = num_edges(s), v = s.num_vertices();
    if (f == Flavor::Tr || f == Flavor::RTr)
        if (e != v - 1) return false;
    if (f == Flavor::RTr) {
        std::vector<int> out(v, 0);
        for (auto [t, h] : arcs_of(s)) ++out[t];
        if (*std::max_element(out.begin(), out.end()) > 1) return false;
    }
    return true;
}

void grow(Flavor sf, Flavor f, int v, int e, const std::vector<std::pair<int, int>>& pairs, std::size_t from,
          std::vector<std::pair<int, int>>& cur, std::map<std::string, DecoratedGraph>& out) {
    if (static_cast<int>(cur.size()) == e) {
        DecoratedGraph g;
        try {
            g = build_graph(sf, v, cur);
        } catch (const ValidationError&) {
            return;
        }
        if (!soul_fits(f, g)) return;
        auto cg = canonical_form(g).first;
        out.emplace(canonical_key(cg), std::move(cg));
        return;
    }
    for (std::size_t i = from; i < pairs.size(); ++i) {
        cur.push_back(pairs[i]);
        grow(sf, f, v, e, pairs, i, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<DecoratedGraph> enumerate_souls(Flavor f, int max_edges) {
    if (f == Flavor::Per) throw std::invalid_argument("Per objects are surjections");
    const Flavor sf = is_directed(f) ? Flavor::Whe : Flavor::ggGrc;
    std::map<std::string, DecoratedGraph> found;
    for (int e = 0; e <= max_edges; ++e)
        for (int v = 1; v <= e + 1; ++v) {
            std::vector<std::pair<int, int>> pairs;
            for (int a = 0; a < v; ++a)
                for (int b = is_directed(f) ? 0 : a; b < v; ++b) pairs.emplace_back(a, b);
            std::vector<std::pair<int, int>> cur;
            grow(sf, f, v, e, pairs, 0, cur, found);
        }
    std::vector<DecoratedGraph> out;
    for (auto& [k, g] : found) out.push_back(std::move(g));
    return out;
}

DecoratedGraph decorate(Flavor f, const DecoratedGraph& soul, const Decoration& d) {
    return build_graph(f, soul.num_vertices(), arcs_of(soul), d.leg_vertices, d.genus, d.leg_out);
}

std::vector<Decoration> decorations(Flavor f, const DecoratedGraph& soul, const Bounds& b) {
    const int v = soul.num_vertices();
    std::set<std::vector<int>> perms;
    for (const auto& a : automorphisms(soul)) perms.insert(a.vertex_map());
    const bool directed = is_directed(f);
    const int gmax = has_genus(f) ? b.max_genus : 0;
    std::vector<Decoration> out;
    // A decoration is kept iff it is lexicographically least in its orbit
    // under the vertex permutations induced by Aut(soul).
    auto key = [&](const Decoration& d, const std::vector<int>& p) {
        std::vector<int> k(v, 0);
        for (int x = 0; x < v; ++x)
            if (!d.genus.empty()) k[p[x]] = d.genus[x];
        for (int x : d.leg_vertices) k.push_back(p[x]);
        return k;
    };
    for (int legs = 0; legs <= b.max_legs; ++legs) {
        long long placements = 1;
        for (int i = 0; i < legs; ++i) placements *= v;
        const long long outs = directed ? (1LL << legs) : 1;
        long long genera = 1;
        for (int i = 0; i < v && gmax > 0; ++i) genera *= gmax + 1;
        for (long long gi = 0; gi < genera; ++gi)
            for (long long pi = 0; pi < placements; ++pi)
                for (long long oi = 0; oi < outs; ++oi) {
                    Decoration d;
                    long long t = pi;
                    for (int i = 0; i < legs; ++i, t /= v) d.leg_vertices.push_back(static_cast<int>(t % v));
                    if (directed)
                        for (int i = 0; i < legs; ++i) d.leg_out.push_back((oi >> i) & 1);
                    if (has_genus(f)) {
                        t = gi;
                        for (int i = 0; i < v; ++i, t /= gmax + 1) d.genus.push_back(static_cast<int>(t % (gmax + 1)));
                    }
                    auto mine = key(d, *perms.begin());
                    bool least = true;
                    for (const auto& p : perms) {
                        auto other = key(d, p);
                        // leg_out is fixed by the action, so it never breaks ties
                        if (other < mine) {
                            least = false;
                            break;
                        }
                    }
                    if (!least) continue;
                    try {
                        decorate(f, soul, d);
                    } catch (const ValidationError&) {
                        continue;
                    }
                    out.push_back(std::move(d));
                }
    }
    return out;
}

std::vector<Surjection> enumerate_surjections(int max_k, int max_n) {
    std::vector<Surjection> out;
    for (int n = 1; n <= max_n; ++n) {
        Surjection s;
        s.map.assign(n, 1);
        while (true) {
            if (s.k() <= max_k) {
                std::vector<int> hit(s.k() + 1, 0);
                for (int x : s.map) hit[x] = 1;
                if (std::count(hit.begin() + 1, hit.end(), 1) == s.k()) out.push_back(s);
            }
            int i = n - 1;
            while (i >= 0 && s.map[i] == std::min(n, max_k)) s.map[i--] = 1;
            if (i < 0) break;
            ++s.map[i];
        }
    }
    return out;
}

std::vector<OpCatObject> enumerate_objects(Flavor f, const Bounds& b) {
    validate(b);
    std::vector<std::pair<std::string, OpCatObject>> keyed;
    if (f == Flavor::Per) {
        for (auto& s : enumerate_surjections(b.max_edges + 1, b.max_legs)) keyed.emplace_back(canonical_key(s), s);
    } else {
        for (const auto& soul : enumerate_souls(f, b.max_edges))
            for (const auto& d : decorations(f, soul, b)) {
                OpCatObject x = canonical_form(decorate(f, soul, d)).first;
                keyed.emplace_back(canonical_key(x), std::move(x));
            }
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
    std::vector<OpCatObject> out;
    for (auto& [k, x] : keyed) out.push_back(std::move(x));
    return out;
}

}  // namespace operadforge
