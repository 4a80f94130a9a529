#pragma once

// Brute-force reference implementations used to cross-check the library.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "operadforge/graph.hpp"

namespace oracle {

using operadforge::DecoratedGraph;

inline std::vector<int> owner(const DecoratedGraph& g) {
    std::vector<int> v(g.num_half_edges());
    for (int i = 0; i < g.num_vertices(); ++i)
        for (int h : g.vertices[i]) v[h] = i;
    return v;
}

// Checks a half-edge bijection directly against the definition.
inline bool preserves(const DecoratedGraph& s, const DecoratedGraph& t, const std::vector<int>& f) {
    const int H = s.num_half_edges();
    for (int h = 0; h < H; ++h)
        if (f[s.involution[h]] != t.involution[f[h]]) return false;
    for (std::size_t i = 0; i < s.legs.size(); ++i)
        if (f[s.legs[i]] != t.legs[i]) return false;
    if (!s.orientation.empty())
        for (int h = 0; h < H; ++h)
            if (s.orientation[h] != t.orientation[f[h]]) return false;
    auto vt = owner(t);
    for (int v = 0; v < s.num_vertices(); ++v) {
        std::set<int> img;
        for (int h : s.vertices[v]) img.insert(vt[f[h]]);
        if (img.size() != 1) return false;
        int w = *img.begin();
        if (t.vertices[w].size() != s.vertices[v].size()) return false;
        if (!s.genus.empty() && s.genus[v] != t.genus[w]) return false;
    }
    return true;
}

// Number of isomorphisms s -> t by trying every half-edge permutation.
inline int count_isos(const DecoratedGraph& s, const DecoratedGraph& t) {
    if (s.flavor != t.flavor || s.num_half_edges() != t.num_half_edges() ||
        s.num_vertices() != t.num_vertices() || s.legs.size() != t.legs.size())
        return 0;
    if (s.num_half_edges() == 0) return s.genus == t.genus ? 1 : 0;
    std::vector<int> f(s.num_half_edges());
    std::iota(f.begin(), f.end(), 0);
    int n = 0;
    do n += preserves(s, t, f);
    while (std::next_permutation(f.begin(), f.end()));
    return n;
}

// Random relabelling of half-edges and vertices, with shuffled local orders.
inline DecoratedGraph relabel(const DecoratedGraph& g, std::mt19937& rng) {
    const int H = g.num_half_edges(), V = g.num_vertices();
    std::vector<int> ph(H), pv(V);
    std::iota(ph.begin(), ph.end(), 0);
    std::iota(pv.begin(), pv.end(), 0);
    std::shuffle(ph.begin(), ph.end(), rng);
    std::shuffle(pv.begin(), pv.end(), rng);
    DecoratedGraph r;
    r.flavor = g.flavor;
    r.involution.resize(H);
    for (int h = 0; h < H; ++h) r.involution[ph[h]] = ph[g.involution[h]];
    r.vertices.resize(V);
    for (int v = 0; v < V; ++v) {
        for (int h : g.vertices[v]) r.vertices[pv[v]].push_back(ph[h]);
        auto& lo = r.vertices[pv[v]];
        std::shuffle(lo.begin(), lo.end(), rng);
    }
    for (int h : g.legs) r.legs.push_back(ph[h]);
    if (!g.genus.empty()) {
        r.genus.resize(V);
        for (int v = 0; v < V; ++v) r.genus[pv[v]] = g.genus[v];
    }
    if (!g.orientation.empty()) {
        r.orientation.resize(H);
        for (int h = 0; h < H; ++h) r.orientation[ph[h]] = g.orientation[h];
        // RTr keeps the output first in each local order.
        for (auto& lo : r.vertices)
            std::stable_partition(lo.begin(), lo.end(),
                                  [&](int h) { return r.orientation[h] == operadforge::Orient::Out; });
    }
    return r;
}

}  // namespace oracle

#include <map>
#include <queue>

namespace oracle {

// Ordered partitions of the edges of an undirected multigraph, each block
// connected after contracting the previous ones, modulo swapping adjacent
// blocks that touch disjoint vertex sets at that stage. Returns class count.
inline int tower_class_count(int nv, const std::vector<std::pair<int, int>>& es, int k) {
    const int E = static_cast<int>(es.size());
    using Word = std::vector<std::vector<int>>;
    auto stage_root = [&](const Word& w, int upto) {
        std::vector<int> lab(nv);
        std::iota(lab.begin(), lab.end(), 0);
        for (int i = 0; i < upto; ++i)
            for (int e : w[i]) {
                int a = lab[es[e].first], b = lab[es[e].second];
                for (int& x : lab)
                    if (x == b) x = a;
            }
        return lab;
    };
    auto block_ok = [&](const std::vector<int>& lab, const std::vector<int>& blk) {
        std::vector<int> l2 = lab;
        for (int e : blk) {
            int a = l2[es[e].first], b = l2[es[e].second];
            for (int& x : l2)
                if (x == b) x = a;
        }
        std::set<int> ends;
        for (int e : blk) ends.insert(l2[es[e].first]);
        return ends.size() == 1;
    };
    auto valid = [&](const Word& w) {
        for (int i = 0; i < k; ++i)
            if (w[i].empty() || !block_ok(stage_root(w, i), w[i])) return false;
        return true;
    };
    std::vector<Word> words;
    std::vector<int> a(E, 0);
    while (true) {
        Word w(k);
        for (int e = 0; e < E; ++e) w[a[e]].push_back(e);
        if (valid(w)) words.push_back(w);
        int i = 0;
        while (i < E && ++a[i] == k) a[i++] = 0;
        if (i == E) break;
    }
    std::map<Word, int> comp;
    int classes = 0;
    for (const auto& w0 : words) {
        if (comp.count(w0)) continue;
        ++classes;
        std::queue<Word> q;
        q.push(w0);
        comp[w0] = classes;
        while (!q.empty()) {
            Word w = q.front();
            q.pop();
            for (int i = 0; i + 1 < k; ++i) {
                auto lab = stage_root(w, i);
                std::set<int> x, y;
                for (int e : w[i]) x.insert({lab[es[e].first], lab[es[e].second]});
                for (int e : w[i + 1]) y.insert({lab[es[e].first], lab[es[e].second]});
                bool disjoint = true;
                for (int v : x) disjoint = disjoint && !y.count(v);
                if (!disjoint) continue;
                Word v = w;
                std::swap(v[i], v[i + 1]);
                if (!comp.count(v)) {
                    comp[v] = classes;
                    q.push(v);
                }
            }
        }
    }
    return classes;
}

}  // namespace oracle
