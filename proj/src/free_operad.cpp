#include "operadforge/free_operad.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace operadforge {

GeneratorSpec Collection::at_grade(int g) const {
    auto it = by_grade.find(g);
    return it == by_grade.end() ? GeneratorSpec{} : it->second;
}

GeneratorSpec Collection::at(const OpCatObject& fiber) const {
    if (!by_key.empty()) {
        auto it = by_key.find(virtual_key(fiber));
        if (it != by_key.end()) return it->second;
    }
    return at_grade(grade(fiber));
}

Collection Collection::binary(int degree) {
    Collection c;
    c.name = "binary" + std::to_string(degree);
    c.by_grade[1] = {1, degree};
    return c;
}

Collection Collection::det_desuspended(int max_grade) {
    Collection c;
    c.name = "det" + std::to_string(max_grade);
    c.oriented = true;
    for (int g = 1; g <= max_grade; ++g) c.by_grade[g] = {1, g - 1};
    return c;
}

int FreeComponent::find(int cls, const std::vector<int>& gens) const {
    auto it = index.find({cls, gens});
    return it == index.end() ? -1 : it->second;
}

namespace {

std::string skeleton_key(const Skeleton& s, int height) {
    std::ostringstream os;
    os << s.num_vertices << '|' << height << '|';
    for (auto [a, b] : s.edges) os << a << '-' << b << ',';
    return os.str();
}

std::mutex cache_mutex;
std::map<std::string, std::shared_ptr<const TowerSpace>> tower_cache;
std::map<std::string, FreeComponentPtr> component_cache;

int sort_parity(std::vector<int> v) {
    int inv = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) ++inv;
    return inv & 1;
}

}  // namespace

std::shared_ptr<const TowerSpace> tower_space(const OpCatObject& x, int height) {
    Skeleton s = skeleton(x);
    std::string key = skeleton_key(s, height);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = tower_cache.find(key);
        if (it != tower_cache.end()) return it->second;
    }
    auto ts = std::make_shared<const TowerSpace>(s, height);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return tower_cache.emplace(key, ts).first->second;
}

FreeComponentPtr component(const Collection& e, const OpCatObject& x, int k) {
    std::string key = e.name + (e.oriented ? "+" : "-") + std::to_string(k) + to_json(x).dump();
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = component_cache.find(key);
        if (it != component_cache.end()) return it->second;
    }
    auto c = std::make_shared<FreeComponent>();
    c->object = x;
    c->weight = k;
    c->towers = tower_space(x, k);
    const auto& reps = c->towers->representatives();
    for (int cls = 0; cls < static_cast<int>(reps.size()); ++cls) {
        const auto& w = reps[cls];
        std::vector<GeneratorSpec> specs;
        if (e.grade_only()) {
            for (EdgeMask b : w) specs.push_back(e.at_grade(__builtin_popcount(b)));
        } else {
            for (const auto& m : realize(x, w, false)) specs.push_back(e.at(morphism_fiber(m)));
        }
        bool empty = false;
        for (const auto& s : specs) empty = empty || s.dim == 0;
        if (empty) continue;
        std::vector<int> gens(w.size(), 0);
        while (true) {
            FreeBasisElement b{w, gens, {}, 0};
            for (const auto& s : specs) {
                b.block_degrees.push_back(s.degree);
                b.degree += s.degree;
            }
            c->index[{cls, gens}] = c->dim();
            c->basis.push_back(std::move(b));
            std::size_t i = 0;
            while (i < gens.size() && ++gens[i] == specs[i].dim) gens[i++] = 0;
            if (i == gens.size()) break;
        }
    }
    FreeComponentPtr out = c;
    std::lock_guard<std::mutex> lock(cache_mutex);
    return component_cache.emplace(key, out).first->second;
}

Normalized normalize(const Collection& e, const FreeComponent& c, const Monomial& m) {
    TowerWord w;
    int parity = 0;
    for (const auto& b : m.blocks) {
        w.push_back(edges_mask(b));
        if (e.oriented) parity ^= sort_parity(b);
    }
    auto loc = c.towers->locate(w);
    std::vector<int> gens(m.gens.size());
    for (std::size_t i = 0; i < m.gens.size(); ++i) gens[loc.perm[i]] = m.gens[i];
    Normalized n;
    n.index = c.find(loc.cls, gens);
    if (n.index < 0) return n;
    const auto& bd = c.basis[n.index].block_degrees;
    std::vector<int> par(m.blocks.size());
    for (std::size_t i = 0; i < par.size(); ++i) par[i] = bd[loc.perm[i]];
    n.sign = koszul_sign(loc.perm, par) * (parity ? -1 : 1);
    return n;
}

namespace {

std::vector<int> mapped(EdgeMask b, const std::vector<int>& edge_map) {
    std::vector<int> out;
    for (int x : mask_edges(b)) out.push_back(edge_map.at(x));
    return out;
}

}  // namespace

FreeElement compose(const Collection& e, const ElemMorphism& split, const FreeElement& left,
                    const FreeElement& right) {
    if (!(left.component->object == morphism_quotient(split)))
        throw std::invalid_argument("compose: left element does not live on the quotient");
    if (!(right.component->object == morphism_fiber(split)))
        throw std::invalid_argument("compose: right element does not live on the fiber");
    if (right.component->weight < 1) throw std::invalid_argument("compose: fiber weight must be at least 1");
    auto target = component(e, morphism_source(split), left.component->weight + right.component->weight);
    auto fmap = fiber_edge_map(split);
    auto qmap = quotient_edge_map(split);
    FreeElement out{target, {}};
    for (const auto& [i, cl] : left.coeffs) {
        const auto& bl = left.component->basis[i];
        for (const auto& [j, cr] : right.coeffs) {
            const auto& br = right.component->basis[j];
            Monomial m;
            for (EdgeMask b : br.word) m.blocks.push_back(mapped(b, fmap));
            for (EdgeMask b : bl.word) m.blocks.push_back(mapped(b, qmap));
            m.gens = br.gens;
            m.gens.insert(m.gens.end(), bl.gens.begin(), bl.gens.end());
            auto n = normalize(e, *target, m);
            if (n.index < 0) continue;
            int sign = n.sign * ((bl.degree * br.degree) % 2 ? -1 : 1);
            axpy(out.coeffs, cl * cr * sign, SparseVector{{n.index, Rational(1)}});
        }
    }
    return out;
}

FreeElement iso_action(const Collection& e, const GraphIso& f, const FreeElement& x) {
    if (!(x.component->object == OpCatObject(f.target)))
        throw std::invalid_argument("iso_action: element does not live on the target");
    auto em = f.edge_map();  // source edge -> target edge
    std::vector<int> back(em.size());
    for (std::size_t i = 0; i < em.size(); ++i) back[em[i]] = static_cast<int>(i);
    auto target = component(e, f.source, x.component->weight);
    FreeElement out{target, {}};
    for (const auto& [i, c] : x.coeffs) {
        const auto& b = x.component->basis[i];
        Monomial m;
        for (EdgeMask blk : b.word) m.blocks.push_back(mapped(blk, back));
        m.gens = b.gens;
        auto n = normalize(e, *target, m);
        if (n.index < 0) continue;
        axpy(out.coeffs, c * n.sign, SparseVector{{n.index, Rational(1)}});
    }
    return out;
}

FreeElement basis_element(const FreeComponentPtr& c, int i) {
    if (i < 0 || i >= c->dim()) throw std::out_of_range("basis_element");
    return {c, SparseVector{{i, Rational(1)}}};
}

FreeElement single_generator(const Collection& e, const OpCatObject& x, int gen) {
    auto c = component(e, x, 1);
    EdgeMask all = (EdgeMask(1) << grade(x)) - 1;
    int i = c->find(c->towers->locate({all}).cls, {gen});
    if (i < 0) throw std::invalid_argument("single_generator: no such generator");
    return basis_element(c, i);
}

}  // namespace operadforge
