#include "operadforge/towers.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace operadforge {

std::vector<int> mask_edges(EdgeMask m) {
    std::vector<int> out;
    for (int e = 0; m; ++e, m >>= 1)
        if (m & 1) out.push_back(e);
    return out;
}

EdgeMask edges_mask(const std::vector<int>& ids) {
    EdgeMask m = 0;
    for (int e : ids) m |= EdgeMask(1) << e;
    return m;
}

bool block_less(EdgeMask a, EdgeMask b) { return mask_edges(a) < mask_edges(b); }

bool word_less(const TowerWord& a, const TowerWord& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), block_less);
}

Contraction::Contraction(const Skeleton& s) : s_(&s), parent_(s.num_vertices) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

int Contraction::root(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
}

void Contraction::contract(EdgeMask m) {
    for (int e : mask_edges(m)) {
        auto [a, b] = s_->edges[e];
        int x = root(a), y = root(b);
        if (x != y) parent_[std::max(x, y)] = std::min(x, y);
    }
}

std::vector<int> Contraction::touched(EdgeMask m) const {
    std::set<int> vs;
    for (int e : mask_edges(m)) {
        vs.insert(root(s_->edges[e].first));
        vs.insert(root(s_->edges[e].second));
    }
    return {vs.begin(), vs.end()};
}

bool Contraction::connected(EdgeMask m) const {
    if (!m) return false;
    Contraction c = *this;
    c.contract(m);
    auto vs = touched(m);
    int r = c.root(vs.front());
    for (int v : vs)
        if (c.root(v) != r) return false;
    return true;
}

bool Contraction::disjoint(EdgeMask a, EdgeMask b) const {
    auto x = touched(a), y = touched(b);
    std::vector<int> both;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
    return both.empty();
}

bool is_valid_tower(const Skeleton& s, const TowerWord& w) {
    EdgeMask all = s.num_edges() ? (EdgeMask(1) << s.num_edges()) - 1 : 0;
    EdgeMask seen = 0;
    Contraction c(s);
    for (EdgeMask b : w) {
        if (!b || (b & seen) || (b & ~all)) return false;
        if (!c.connected(b)) return false;
        c.contract(b);
        seen |= b;
    }
    return seen == all;
}

bool swap_allowed(const Skeleton& s, const TowerWord& w, int i) {
    Contraction c(s);
    for (int j = 0; j < i; ++j) c.contract(w[j]);
    return c.disjoint(w[i], w[i + 1]);
}

namespace {

void grow(const Skeleton& s, int height, EdgeMask remaining, const Contraction& c, TowerWord& cur,
          std::vector<TowerWord>& out) {
    int left = height - static_cast<int>(cur.size());
    if (left == 1) {
        if (remaining && c.connected(remaining)) {
            cur.push_back(remaining);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (EdgeMask sub = remaining; sub; sub = (sub - 1) & remaining) {
        if (sub == remaining) continue;
        if (__builtin_popcount(remaining & ~sub) < left - 1) continue;
        if (!c.connected(sub)) continue;
        Contraction next = c;
        next.contract(sub);
        cur.push_back(sub);
        grow(s, height, remaining & ~sub, next, cur, out);
        cur.pop_back();
    }
}

int find_root(std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

}  // namespace

TowerSpace::TowerSpace(const Skeleton& s, int height) : skel_(s), height_(height) {
    const int E = s.num_edges();
    if (E > 24) throw std::invalid_argument("TowerSpace: too many edges");
    if (height < 1 || height > E) return;
    TowerWord cur;
    grow(skel_, height, (EdgeMask(1) << E) - 1, Contraction(skel_), cur, towers_);
    std::sort(towers_.begin(), towers_.end(), word_less);
    for (int i = 0; i < static_cast<int>(towers_.size()); ++i) index_[towers_[i]] = i;

    std::vector<int> parent(towers_.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (int t = 0; t < static_cast<int>(towers_.size()); ++t) {
        const auto& w = towers_[t];
        for (int i = 0; i + 1 < height; ++i) {
            if (!swap_allowed(skel_, w, i)) continue;
            TowerWord v = w;
            std::swap(v[i], v[i + 1]);
            int u = index_.at(v);
            int a = find_root(parent, t), b = find_root(parent, u);
            // Towers are sorted, so the smaller index is the smaller word.
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    class_of_.resize(towers_.size());
    std::map<int, int> cls;
    for (int t = 0; t < static_cast<int>(towers_.size()); ++t) {
        int r = find_root(parent, t);
        auto it = cls.find(r);
        if (it == cls.end()) {
            it = cls.emplace(r, static_cast<int>(reps_.size())).first;
            reps_.push_back(towers_[r]);
        }
        class_of_[t] = it->second;
    }
}

TowerSpace::Located TowerSpace::locate(const TowerWord& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw std::invalid_argument("locate: not a valid tower of this height");
    Located l;
    l.cls = class_of_[it->second];
    const auto& rep = reps_[l.cls];
    for (EdgeMask b : w) l.perm.push_back(static_cast<int>(std::find(rep.begin(), rep.end(), b) - rep.begin()));
    return l;
}

int koszul_sign(const std::vector<int>& perm, const std::vector<int>& parities) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (!(parities[i] & 1)) continue;
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if ((parities[j] & 1) && perm[i] > perm[j]) ++inv;
    }
    return inv % 2 ? -1 : 1;
}

std::vector<ElemMorphism> realize(const OpCatObject& x, const TowerWord& w, bool check_flavor) {
    const int E = grade(x);
    std::vector<int> cur(E);  // original edge -> current edge id, -1 once contracted
    std::iota(cur.begin(), cur.end(), 0);
    OpCatObject obj = x;
    std::vector<ElemMorphism> out;
    for (EdgeMask b : w) {
        std::vector<int> ids;
        for (int e : mask_edges(b)) {
            if (cur.at(e) < 0) throw std::invalid_argument("realize: edge contracted twice");
            ids.push_back(cur[e]);
        }
        ElemMorphism m = contract_edges(obj, ids, check_flavor);
        auto qmap = quotient_edge_map(m);  // quotient edge -> current edge
        std::vector<int> back(grade(obj), -1);
        for (int q = 0; q < static_cast<int>(qmap.size()); ++q) back[qmap[q]] = q;
        for (int& c : cur)
            if (c >= 0) c = back[c];
        obj = morphism_quotient(m);
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<EdgeOrderClass> binary_tower_classes(const OpCatObject& x) {
    int E = grade(x);
    if (E < 1) throw std::invalid_argument("binary_tower_classes: object has no edges");
    TowerSpace ts(skeleton(x), E);
    std::vector<EdgeOrderClass> out;
    for (const auto& w : ts.representatives()) {
        EdgeOrderClass c{x, {}};
        for (EdgeMask b : w) c.order.push_back(mask_edges(b).front());
        out.push_back(std::move(c));
    }
    return out;
}

namespace {
TowerClass make_class(const OpCatObject& x, const TowerWord& w) {
    TowerClass c{x, w, {}, static_cast<int>(w.size()), realize(x, w)};
    for (const auto& m : c.splits) c.fiber_sequence.push_back(morphism_fiber(m));
    return c;
}
}  // namespace

std::vector<TowerClass> height2_classes(const OpCatObject& x, bool proper) {
    std::vector<TowerClass> out;
    int E = grade(x);
    if (E >= 2) {
        TowerSpace ts(skeleton(x), 2);
        for (const auto& w : ts.representatives()) out.push_back(make_class(x, w));
    }
    if (!proper && E >= 1) {
        // The total contraction, whose second fiber is the corolla.
        TowerClass c = make_class(x, {(EdgeMask(1) << E) - 1});
        c.fiber_sequence.push_back(morphism_quotient(c.splits.back()));
        c.height = 2;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<TowerClass> general_tower_classes(const OpCatObject& x, int k) {
    int E = grade(x);
    if (k < 1 || k > E) throw std::invalid_argument("general_tower_classes: height out of range");
    TowerSpace ts(skeleton(x), k);
    std::vector<TowerClass> out;
    for (const auto& w : ts.representatives()) out.push_back(make_class(x, w));
    return out;
}

}  // namespace operadforge
