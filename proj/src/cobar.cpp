#include "operadforge/cobar.hpp"

#include <mutex>
#include <stdexcept>

#include "operadforge/presentations.hpp"

namespace operadforge {

int omega_sign(EdgeMask q, EdgeMask f) {
    auto qs = mask_edges(q), fs = mask_edges(f);
    int inv = 0;
    for (int a : qs)
        for (int b : fs)
            if (a > b) ++inv;
    return inv % 2 ? -1 : 1;
}

int chi_sign(const TowerWord& w) {
    int s = 0;
    for (EdgeMask b : w) {
        int n = __builtin_popcount(b);
        s += n * (n - 1) / 2;
    }
    return s % 2 ? -1 : 1;
}

namespace {

int parity_sign(int n) { return n % 2 ? -1 : 1; }

int split_sign(SignRule rule, int ef, int eq) { return rule == SignRule::K ? parity_sign(eq * (ef + 1)) : parity_sign(eq); }

Collection det_for(const OpCatObject& x) { return Collection::det_desuspended(std::max(1, grade(x))); }

}  // namespace

CobarComplex build_complex(Flavor, const OpCatObject& x, const CobarOptions& opt) {
    const int e = grade(x);
    if (e < 1) throw std::invalid_argument("build_complex: object has no edges");
    Collection det = det_for(x);
    Skeleton sk = skeleton(x);
    CobarComplex c;
    c.object = x;
    c.edges = e;
    for (int k = 1; k <= e; ++k) c.layers.push_back(component(det, x, k));
    bool mutated = false;
    for (int k = 1; k <= e; ++k) {
        const auto& src = *c.layers[k - 1];
        if (k == e) {
            c.differentials.emplace_back(0, src.dim());
            continue;
        }
        const auto& dst = *c.layers[k];
        RationalMatrix d(dst.dim(), src.dim());
        for (int col = 0; col < src.dim(); ++col) {
            const auto& w = src.basis[col].word;
            Contraction cur(sk);
            int left_degree = 0;
            for (int i = 0; i < k; ++i) {
                EdgeMask s = w[i];
                for (EdgeMask fm = (s - 1) & s; fm; fm = (fm - 1) & s) {
                    if (!cur.connected(fm)) continue;
                    EdgeMask qm = s & ~fm;
                    int ef = __builtin_popcount(fm), eq = __builtin_popcount(qm);
                    int sign = split_sign(opt.rule, ef, eq) * omega_sign(qm, fm) *
                               parity_sign((ef - 1) * (eq - 1)) * parity_sign(left_degree);
                    if (opt.mutate && !mutated && k == 1 && e >= 3 && (ef >= 2 || eq >= 2)) {
                        sign = -sign;
                        mutated = true;
                    }
                    Monomial m;
                    for (int j = 0; j < k; ++j) {
                        if (j == i) {
                            m.blocks.push_back(mask_edges(fm));
                            m.blocks.push_back(mask_edges(qm));
                        } else {
                            m.blocks.push_back(mask_edges(w[j]));
                        }
                    }
                    m.gens.assign(k + 1, 0);
                    auto n = normalize(det, dst, m);
                    if (n.index < 0) throw std::logic_error("cobar: split word outside the next layer");
                    d.add(n.index, col, sign * n.sign);
                }
                left_degree += __builtin_popcount(s) - 1;
                cur.contract(s);
            }
        }
        c.differentials.push_back(std::move(d));
    }
    return c;
}

bool d_squared_check(const CobarComplex& c) {
    for (int k = 1; k + 1 < c.edges; ++k)
        if (!(c.d(k + 1) * c.d(k)).is_zero()) return false;
    return true;
}

std::map<int, int> homology_profile(const CobarComplex& c) {
    std::map<int, int> out;
    for (int k = 1; k <= c.edges; ++k) {
        RationalMatrix in = k == 1 ? RationalMatrix(c.layers[0]->dim(), 0) : c.d(k - 1);
        out[c.degree_of_height(k)] = homology(c.d(k), in).betti;
    }
    return out;
}

int euler_layers(const CobarComplex& c) {
    int s = 0;
    for (int k = 1; k <= c.edges; ++k) s += parity_sign(k) * c.layers[k - 1]->dim();
    return s;
}

bool canonical_map_check(Flavor f, const OpCatObject& x, const CobarOptions& opt) {
    static std::mutex mu;
    static std::map<std::string, QuadraticData> presentations;
    const QuadraticData* q;
    {
        std::lock_guard<std::mutex> lock(mu);
        std::string name = presentation_for(f);
        auto it = presentations.find(name);
        if (it == presentations.end()) it = presentations.emplace(name, builtin_presentation(name)).first;
        q = &it->second;
    }
    const int e = grade(x);
    auto c = build_complex(f, x, opt);
    auto target = component(q->generators, x, e);
    const auto& top = *c.layers[e - 1];
    // can on the top layer: same class, generator degrees all zero
    std::vector<int> can(top.dim(), -1);
    for (int i = 0; i < top.dim(); ++i) {
        int cls = top.towers->locate(top.basis[i].word).cls;
        can[i] = target->find(cls, top.basis[i].gens);
        if (can[i] < 0) return false;
    }
    auto ideal = ideal_component(*q, x, e);
    if (e == 1) return target->dim() - ideal.dim() == 1 && top.dim() == 1;
    const auto& d = c.d(e - 1);
    EchelonBasis boundaries(target->dim());
    auto dt = d.transpose();
    for (int col = 0; col < d.cols(); ++col) {
        SparseVector v;
        for (const auto& [r, a] : dt.row(col)) v[can[r]] += a;
        for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
        if (!ideal.contains(v)) return false;
        boundaries.insert(v);
    }
    return boundaries.subspace() == ideal;
}

bool chi_intertwiner_check(Flavor f, const OpCatObject& x) {
    auto ck = build_complex(f, x, {SignRule::K, false});
    auto cl = build_complex(f, x, {SignRule::L, false});
    auto chi = [&](int k) {
        const auto& layer = *ck.layers[k - 1];
        RationalMatrix m(layer.dim(), layer.dim());
        for (int i = 0; i < layer.dim(); ++i) m.set(i, i, chi_sign(layer.basis[i].word));
        return m;
    };
    if (!d_squared_check(cl)) return false;
    for (int k = 1; k < ck.edges; ++k)
        if (!(chi(k + 1) * ck.d(k) == cl.d(k) * chi(k))) return false;
    return true;
}

bool aut_equivariance_check(const CobarComplex& c) {
    auto g = std::get_if<DecoratedGraph>(&c.object);
    if (!g) return true;
    Collection det = det_for(c.object);
    for (const auto& f : automorphisms(*g)) {
        std::vector<RationalMatrix> act;
        for (const auto& layer : c.layers) {
            RationalMatrix a(layer->dim(), layer->dim());
            for (int i = 0; i < layer->dim(); ++i)
                for (const auto& [r, v] : iso_action(det, f, basis_element(layer, i)).coeffs) a.set(r, i, v);
            act.push_back(std::move(a));
        }
        for (int k = 1; k < c.edges; ++k)
            if (!(c.d(k) * act[k - 1] == act[k] * c.d(k))) return false;
    }
    return true;
}

bool CobarReport::koszul() const {
    if (!d_squared || !canonical_map || !chi) return false;
    for (const auto& [deg, b] : betti)
        if (b != (deg == 0 ? 1 : 0)) return false;
    return true;
}

CobarReport certify(Flavor f, const OpCatObject& x, const CobarOptions& opt) {
    static std::mutex mu;
    static std::map<std::string, CobarReport> memo;
    DecoratedGraph s = canonical_form(soul_graph(x)).first;
    std::string key = flavor_name(f) + (opt.mutate ? "!" : "") + (opt.rule == SignRule::L ? "L" : "K") + canonical_key(s);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) {
            CobarReport r = it->second;
            r.key = canonical_key(x);
            return r;
        }
    }
    CobarReport r;
    r.edges = grade(x);
    if (r.edges >= 1) {
        OpCatObject so = s;
        auto c = build_complex(f, so, opt);
        for (const auto& l : c.layers) r.layer_dims.push_back(l->dim());
        r.d_squared = d_squared_check(c);
        r.betti = r.d_squared ? homology_profile(c) : std::map<int, int>{};
        r.canonical_map = canonical_map_check(f, so, opt);
        r.chi = r.edges < 2 || chi_intertwiner_check(f, so);
    }
    {
        std::lock_guard<std::mutex> lock(mu);
        memo.emplace(key, r);
    }
    r.key = canonical_key(x);
    return r;
}

nlohmann::ordered_json to_json(const CobarReport& r) {
    nlohmann::ordered_json j;
    j["key"] = r.key;
    j["edges"] = r.edges;
    j["layer_dims"] = r.layer_dims;
    auto b = nlohmann::ordered_json::object();
    for (const auto& [deg, n] : r.betti) b[std::to_string(deg)] = n;
    j["betti"] = b;
    j["d_squared_zero"] = r.d_squared;
    j["canonical_map"] = r.canonical_map;
    j["chi_intertwines"] = r.chi;
    j["koszul"] = r.koszul();
    return j;
}

}  // namespace operadforge
