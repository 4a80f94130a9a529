#include "operadforge/axioms.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>

namespace operadforge {

namespace {

using Perm = std::vector<int>;  // 0-based, p[i] is the image of i

const char* const kAction = "action";
const char* const kEquivariance = "equivariance";
const char* const kContractionEquivariance = "contraction_equivariance";
const char* const kSymmetry = "symmetry";
const char* const kAssociativity = "associativity";
const char* const kContractionsCommute = "contractions_commute";
const char* const kDoubleContraction = "double_contraction";
const char* const kContractThenCompose = "contract_then_compose";
const char* const kSequential = "sequential";
const char* const kParallel = "parallel";

int parity(int n) { return ((n % 2) + 2) % 2; }
int sign_of(int bit) { return bit % 2 ? -1 : 1; }

// Adjacent swaps j1, j2, ... with p = s_jk o ... o s_j1.
std::vector<int> swap_word(Perm w) {
    std::vector<int> out;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t j = 0; j + 1 < w.size(); ++j)
            if (w[j] > w[j + 1]) {
                std::swap(w[j], w[j + 1]);
                out.push_back(static_cast<int>(j));
                moved = true;
            }
    }
    return out;
}

int perm_parity(const Perm& p) { return static_cast<int>(swap_word(p).size() % 2); }

Perm transposition(int n, int j) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[j], p[j + 1]);
    return p;
}

bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

SparseVector left_act(const TableComponent& c, const Perm& p, SparseVector v) {
    for (int j : swap_word(p)) v = c.transpositions.at(j).apply(v);
    return v;
}

SparseVector right_act(const TableComponent& c, const Perm& p, SparseVector v) {
    auto w = swap_word(p);
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = c.transpositions.at(*it).apply(v);
    return v;
}

SparseVector bilinear(const RationalMatrix* m, int right_dim, const SparseVector& x, const SparseVector& y) {
    SparseVector out;
    if (!m) return out;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y) {
            int col = i * right_dim + j;
            for (int r = 0; r < m->rows(); ++r) {
                Rational v = m->get(r, col);
                if (v != 0) axpy(out, ci * cj * v, SparseVector{{r, Rational(1)}});
            }
        }
    return out;
}

SparseVector unit(int i) { return SparseVector{{i, Rational(1)}}; }

// Labels 1..n without the dropped ones, increasing.
std::vector<int> rest(int n, std::initializer_list<int> drop) {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (std::find(drop.begin(), drop.end(), i) == drop.end()) out.push_back(i);
    return out;
}

int pos(const std::vector<int>& v, int label) {
    return static_cast<int>(std::find(v.begin(), v.end(), label) - v.begin()) + 1;
}

std::string tuple_string(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string comp_name(int n, int g) { return "O(" + std::to_string(n) + ";" + std::to_string(g) + ")"; }

AxiomResult& result_for(AxiomReport& r, const std::string& name) {
    for (auto& a : r.axioms)
        if (a.axiom == name) return a;
    AxiomResult a;
    a.axiom = name;
    r.axioms.push_back(a);
    return r.axioms.back();
}

// Coxeter relations of the transposition matrices.
void check_group_law(AxiomReport& report, const std::string& where, const TableComponent& c, int n) {
    auto& res = result_for(report, kAction);
    auto id = RationalMatrix::identity(c.dim);
    auto check = [&](const RationalMatrix& m, const std::string& rel) {
        ++res.checked;
        if (!(m == id)) {
            if (res.failed++ == 0) res.witness = where + " violates " + rel;
        }
    };
    const auto& s = c.transpositions;
    for (int i = 0; i + 1 < n; ++i) {
        check(s[i] * s[i], "s" + std::to_string(i + 1) + "^2 = 1");
        if (i + 2 < n) {
            auto b = s[i] * s[i + 1];
            check(b * b * b, "(s" + std::to_string(i + 1) + " s" + std::to_string(i + 2) + ")^3 = 1");
        }
        for (int j = i + 2; j + 1 < n; ++j) {
            auto b = s[i] * s[j];
            check(b * b, "(s" + std::to_string(i + 1) + " s" + std::to_string(j + 1) + ")^2 = 1");
        }
    }
}

// ---------------------------------------------------------------- modular

struct Node {
    enum class Kind { Leaf, Act, Comp, Contr } kind = Kind::Leaf;
    int n = 0, g = 0;  // component of the value
    int leaf = -1;
    int x = -1, y = -1;
    Perm perm;
    CompositionKey ck{};
    ContractionKey tk{};
};

struct Side {
    std::vector<Node> nodes;
    int root = -1;
    int sign = 0;

    int add(Node nd) {
        nodes.push_back(std::move(nd));
        return root = static_cast<int>(nodes.size()) - 1;
    }
};

struct Instance {
    std::string axiom;
    std::vector<std::pair<int, int>> inputs;
    Side lhs, rhs;
    std::string label;
};

struct Builder {
    std::vector<std::pair<int, int>> inputs;

    int leaf(Side& s, int i) const {
        Node nd;
        nd.leaf = i;
        nd.n = inputs[i].first;
        nd.g = inputs[i].second;
        return s.add(nd);
    }
    static int act(Side& s, const Perm& p, int child) {
        if (is_identity(p)) return child;
        Node nd;
        nd.kind = Node::Kind::Act;
        nd.n = s.nodes[child].n;
        nd.g = s.nodes[child].g;
        nd.x = child;
        nd.perm = p;
        return s.add(nd);
    }
    static int comp(Side& s, int a, int l, int b, int r) {
        const auto &L = s.nodes[l], &R = s.nodes[r];
        Node nd;
        nd.kind = Node::Kind::Comp;
        nd.ck = {L.n, L.g, R.n, R.g, a, b};
        nd.n = L.n + R.n - 2;
        nd.g = L.g + R.g;
        nd.x = l;
        nd.y = r;
        return s.add(nd);
    }
    static int contr(Side& s, int u, int v, int child) {
        const auto& C = s.nodes[child];
        Node nd;
        nd.kind = Node::Kind::Contr;
        nd.tk = {C.n, C.g, std::min(u, v), std::max(u, v)};
        nd.n = C.n - 2;
        nd.g = C.g + 1;
        nd.x = child;
        return s.add(nd);
    }
};

bool live(const ModularTable& t, int n, int g) { return t.in_bounds(n, g) && t.component(n, g).dim > 0; }

struct Stable {
    const ModularTable& t;
    bool operator()(int n, int g) const { return t.in_bounds(n, g); }
};

// Every axiom instance with live inputs, signs for the requested parity.
// Instances that leave the bounds are only counted.
std::vector<Instance> modular_instances(const ModularTable& t, bool odd, std::map<std::string, long>& skipped) {
    std::vector<Instance> out;
    auto deg = [&](int n, int g) { return t.component(n, g).degree; };
    std::vector<std::pair<int, int>> comps;
    for (const auto& [k, c] : t.components)
        if (live(t, k.first, k.second)) comps.push_back(k);
    const int oddbit = odd ? 1 : 0;

    for (auto [m, g1] : comps)
        for (auto [n, g2] : comps) {
            const bool fits = t.in_bounds(m + n - 2, g1 + g2);
            if (m < 1 || n < 1) continue;
            // equivariance and symmetry
            for (int a = 1; a <= m; ++a)
                for (int b = 1; b <= n; ++b) {
                    std::vector<std::pair<Perm, Perm>> gens;
                    Perm idm(m), idn(n);
                    std::iota(idm.begin(), idm.end(), 0);
                    std::iota(idn.begin(), idn.end(), 0);
                    for (int j = 0; j + 1 < m; ++j) gens.emplace_back(transposition(m, j), idn);
                    for (int j = 0; j + 1 < n; ++j) gens.emplace_back(idm, transposition(n, j));
                    if (!fits) {
                        skipped[kEquivariance] += static_cast<long>(gens.size());
                        skipped[kSymmetry] += 1;
                        continue;
                    }
                    for (const auto& [rho, sigma] : gens) {
                        Instance in{kEquivariance, {{m, g1}, {n, g2}}, {}, {}, {}};
                        Builder bd{in.inputs};
                        int ra = rho[a - 1] + 1, sb = sigma[b - 1] + 1;
                        auto xs = rest(m, {a}), ys = rest(n, {b});
                        auto xs2 = rest(m, {ra}), ys2 = rest(n, {sb});
                        Perm pi(m + n - 2);
                        for (int p = 0; p < m - 1; ++p) pi[p] = pos(xs2, rho[xs[p] - 1] + 1) - 1;
                        for (int q = 0; q < n - 1; ++q) pi[m - 1 + q] = m - 1 + pos(ys2, sigma[ys[q] - 1] + 1) - 1;
                        int c = Builder::comp(in.lhs, a, bd.leaf(in.lhs, 0), b, bd.leaf(in.lhs, 1));
                        Builder::act(in.lhs, pi, c);
                        int l = Builder::act(in.rhs, rho, bd.leaf(in.rhs, 0));
                        int r = Builder::act(in.rhs, sigma, bd.leaf(in.rhs, 1));
                        Builder::comp(in.rhs, ra, l, sb, r);
                        in.label = "x in " + comp_name(m, g1) + ", y in " + comp_name(n, g2) + ", a=" +
                                   std::to_string(a) + " b=" + std::to_string(b) + ", rho=" + tuple_string(rho) +
                                   " sigma=" + tuple_string(sigma);
                        out.push_back(std::move(in));
                    }
                    Instance in{kSymmetry, {{m, g1}, {n, g2}}, {}, {}, {}};
                    Builder bd{in.inputs};
                    Builder::comp(in.lhs, a, bd.leaf(in.lhs, 0), b, bd.leaf(in.lhs, 1));
                    Perm B(m + n - 2);
                    for (int p = 0; p < n - 1; ++p) B[p] = m - 1 + p;
                    for (int q = 0; q < m - 1; ++q) B[n - 1 + q] = q;
                    int c = Builder::comp(in.rhs, b, bd.leaf(in.rhs, 1), a, bd.leaf(in.rhs, 0));
                    Builder::act(in.rhs, B, c);
                    in.rhs.sign = parity(deg(m, g1) * deg(n, g2));
                    in.label = "x in " + comp_name(m, g1) + ", y in " + comp_name(n, g2) + ", a=" +
                               std::to_string(a) + " b=" + std::to_string(b);
                    out.push_back(std::move(in));
                }
            // associativity
            for (auto [p, g3] : comps) {
                if (n < 2 || p < 1) continue;
                bool ok = t.in_bounds(n + p - 2, g2 + g3) && t.in_bounds(m + n - 2, g1 + g2) &&
                          t.in_bounds(m + n + p - 4, g1 + g2 + g3);
                if (!ok) {
                    skipped[kAssociativity] += static_cast<long>(m) * n * (n - 1) * p;
                    continue;
                }
                for (int a = 1; a <= m; ++a)
                    for (int b = 1; b <= n; ++b)
                        for (int c = 1; c <= n; ++c)
                            for (int d = 1; d <= p; ++d) {
                                if (b == c) continue;
                                Instance in{kAssociativity, {{m, g1}, {n, g2}, {p, g3}}, {}, {}, {}};
                                Builder bd{in.inputs};
                                int yz = Builder::comp(in.lhs, c, bd.leaf(in.lhs, 1), d, bd.leaf(in.lhs, 2));
                                Builder::comp(in.lhs, a, bd.leaf(in.lhs, 0), pos(rest(n, {c}), b), yz);
                                in.lhs.sign = odd ? parity(deg(m, g1)) : 0;
                                int xy = Builder::comp(in.rhs, a, bd.leaf(in.rhs, 0), b, bd.leaf(in.rhs, 1));
                                Builder::comp(in.rhs, m - 1 + pos(rest(n, {b}), c), xy, d, bd.leaf(in.rhs, 2));
                                in.rhs.sign = oddbit;
                                in.label = "x in " + comp_name(m, g1) + ", y in " + comp_name(n, g2) + ", z in " +
                                           comp_name(p, g3) + ", a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                           " c=" + std::to_string(c) + " d=" + std::to_string(d);
                                out.push_back(std::move(in));
                            }
            }
            // double contraction
            if (m >= 2 && n >= 2) {
                bool ok = fits && t.in_bounds(m + n - 4, g1 + g2 + 1);
                for (int a = 1; a <= m; ++a)
                    for (int c = 1; c <= m; ++c)
                        for (int b = 1; b <= n; ++b)
                            for (int d = 1; d <= n; ++d) {
                                if (a == c || b == d || std::make_pair(a, b) >= std::make_pair(c, d)) continue;
                                if (!ok) {
                                    ++skipped[kDoubleContraction];
                                    continue;
                                }
                                Instance in{kDoubleContraction, {{m, g1}, {n, g2}}, {}, {}, {}};
                                Builder bd{in.inputs};
                                int l = Builder::comp(in.lhs, c, bd.leaf(in.lhs, 0), d, bd.leaf(in.lhs, 1));
                                Builder::contr(in.lhs, pos(rest(m, {c}), a), m - 1 + pos(rest(n, {d}), b), l);
                                int r = Builder::comp(in.rhs, a, bd.leaf(in.rhs, 0), b, bd.leaf(in.rhs, 1));
                                Builder::contr(in.rhs, pos(rest(m, {a}), c), m - 1 + pos(rest(n, {b}), d), r);
                                in.rhs.sign = oddbit;
                                in.label = "x in " + comp_name(m, g1) + ", y in " + comp_name(n, g2) + ", a=" +
                                           std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c) +
                                           " d=" + std::to_string(d);
                                out.push_back(std::move(in));
                            }
            }
            // contract then compose
            if (m >= 3) {
                bool ok = t.in_bounds(m - 2, g1 + 1) && fits && t.in_bounds(m + n - 4, g1 + g2 + 1);
                for (int u = 1; u <= m; ++u)
                    for (int v = u + 1; v <= m; ++v)
                        for (int a = 1; a <= m; ++a)
                            for (int b = 1; b <= n; ++b) {
                                if (a == u || a == v) continue;
                                if (!ok) {
                                    ++skipped[kContractThenCompose];
                                    continue;
                                }
                                Instance in{kContractThenCompose, {{m, g1}, {n, g2}}, {}, {}, {}};
                                Builder bd{in.inputs};
                                int k = Builder::contr(in.lhs, u, v, bd.leaf(in.lhs, 0));
                                Builder::comp(in.lhs, pos(rest(m, {u, v}), a), k, b, bd.leaf(in.lhs, 1));
                                int r = Builder::comp(in.rhs, a, bd.leaf(in.rhs, 0), b, bd.leaf(in.rhs, 1));
                                Builder::contr(in.rhs, pos(rest(m, {a}), u), pos(rest(m, {a}), v), r);
                                in.rhs.sign = oddbit;
                                in.label = "x in " + comp_name(m, g1) + ", y in " + comp_name(n, g2) + ", a=" +
                                           std::to_string(a) + " b=" + std::to_string(b) + " u=" + std::to_string(u) +
                                           " v=" + std::to_string(v);
                                out.push_back(std::move(in));
                            }
            }
        }

    for (auto [n, g] : comps) {
        if (n < 2) continue;
        const bool fits = t.in_bounds(n - 2, g + 1);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                for (int j = 0; j + 1 < n; ++j) {
                    if (!fits) {
                        ++skipped[kContractionEquivariance];
                        continue;
                    }
                    Instance in{kContractionEquivariance, {{n, g}}, {}, {}, {}};
                    Builder bd{in.inputs};
                    Perm rho = transposition(n, j);
                    int ru = rho[u - 1] + 1, rv = rho[v - 1] + 1;
                    auto s1 = rest(n, {u, v}), s2 = rest(n, {ru, rv});
                    Perm pi(n - 2);
                    for (int p = 0; p < n - 2; ++p) pi[p] = pos(s2, rho[s1[p] - 1] + 1) - 1;
                    int k = Builder::contr(in.lhs, u, v, bd.leaf(in.lhs, 0));
                    Builder::act(in.lhs, pi, k);
                    int r = Builder::act(in.rhs, rho, bd.leaf(in.rhs, 0));
                    Builder::contr(in.rhs, ru, rv, r);
                    in.label = "x in " + comp_name(n, g) + ", u=" + std::to_string(u) + " v=" + std::to_string(v) +
                               ", rho=" + tuple_string(rho);
                    out.push_back(std::move(in));
                }
        if (n < 4) continue;
        const bool fits2 = fits && t.in_bounds(n - 4, g + 2);
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = 1; c <= n; ++c)
                    for (int d = c + 1; d <= n; ++d) {
                        if (c == a || c == b || d == a || d == b || std::make_pair(a, b) >= std::make_pair(c, d))
                            continue;
                        if (!fits2) {
                            ++skipped[kContractionsCommute];
                            continue;
                        }
                        Instance in{kContractionsCommute, {{n, g}}, {}, {}, {}};
                        Builder bd{in.inputs};
                        int l = Builder::contr(in.lhs, c, d, bd.leaf(in.lhs, 0));
                        Builder::contr(in.lhs, pos(rest(n, {c, d}), a), pos(rest(n, {c, d}), b), l);
                        int r = Builder::contr(in.rhs, a, b, bd.leaf(in.rhs, 0));
                        Builder::contr(in.rhs, pos(rest(n, {a, b}), c), pos(rest(n, {a, b}), d), r);
                        in.rhs.sign = oddbit;
                        in.label = "x in " + comp_name(n, g) + ", a=" + std::to_string(a) + " b=" +
                                   std::to_string(b) + " c=" + std::to_string(c) + " d=" + std::to_string(d);
                        out.push_back(std::move(in));
                    }
    }
    return out;
}

SparseVector eval(const ModularTable& t, const Side& s, int node, const std::vector<int>& basis) {
    const Node& nd = s.nodes[node];
    switch (nd.kind) {
        case Node::Kind::Leaf:
            return unit(basis[nd.leaf]);
        case Node::Kind::Act:
            return left_act(t.component(nd.n, nd.g), nd.perm, eval(t, s, nd.x, basis));
        case Node::Kind::Comp: {
            auto it = t.compositions.find(nd.ck);
            const RationalMatrix* m = it == t.compositions.end() ? nullptr : &it->second;
            return bilinear(m, t.component(nd.ck.n, nd.ck.g2).dim, eval(t, s, nd.x, basis), eval(t, s, nd.y, basis));
        }
        case Node::Kind::Contr: {
            auto it = t.contractions.find(nd.tk);
            if (it == t.contractions.end()) return {};
            return it->second.apply(eval(t, s, nd.x, basis));
        }
    }
    return {};
}

bool basis_step(std::vector<int>& idx, const std::vector<int>& dims) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (++idx[i] < dims[i]) return true;
        idx[i] = 0;
    }
    return false;
}

bool vanishes(const ModularTable& t, const Instance& in) {
    std::vector<int> dims;
    for (auto [n, g] : in.inputs) dims.push_back(t.component(n, g).dim);
    std::vector<int> idx(dims.size(), 0);
    do {
        if (!eval(t, in.lhs, in.lhs.root, idx).empty() || !eval(t, in.rhs, in.rhs.root, idx).empty()) return false;
    } while (basis_step(idx, dims));
    return true;
}

AxiomReport run_modular(const ModularTable& t, bool odd) {
    validate(t);
    AxiomReport report;
    report.checker = odd ? "odd_modular" : "modular";
    for (const char* name : {kAction, kEquivariance, kContractionEquivariance, kSymmetry, kAssociativity,
                             kContractionsCommute, kDoubleContraction, kContractThenCompose})
        result_for(report, name);
    for (const auto& [k, c] : t.components) check_group_law(report, comp_name(k.first, k.second), c, k.first);
    std::map<std::string, long> skipped;
    for (const auto& in : modular_instances(t, odd, skipped)) {
        auto& res = result_for(report, in.axiom);
        ++res.checked;
        std::vector<int> dims;
        for (auto [n, g] : in.inputs) dims.push_back(t.component(n, g).dim);
        std::vector<int> idx(dims.size(), 0);
        do {
            auto l = scaled(eval(t, in.lhs, in.lhs.root, idx), sign_of(in.lhs.sign));
            auto r = scaled(eval(t, in.rhs, in.rhs.root, idx), sign_of(in.rhs.sign));
            if (l != r) {
                if (res.failed++ == 0) res.witness = in.label + ", basis " + tuple_string(idx);
                break;
            }
        } while (basis_step(idx, dims));
    }
    for (const auto& [name, n] : skipped) result_for(report, name).skipped += n;
    return report;
}

// --------------------------------------------------------------- GF(2) solver

class Gf2System {
public:
    explicit Gf2System(int unknowns) : n_(unknowns), words_((unknowns + 64) / 64) {}

    // Adds sum of the listed unknowns = rhs; false if inconsistent.
    bool add(const std::vector<int>& vars, int rhs) {
        std::vector<std::uint64_t> row(words_, 0);
        for (int v : vars) row[v / 64] ^= std::uint64_t(1) << (v % 64);
        if (rhs % 2) row[n_ / 64] ^= std::uint64_t(1) << (n_ % 64);
        for (const auto& [p, pr] : rows_)
            if (bit(row, p))
                for (int w = 0; w < words_; ++w) row[w] ^= pr[w];
        int piv = -1;
        for (int v = 0; v < n_ && piv < 0; ++v)
            if (bit(row, v)) piv = v;
        if (piv < 0) return !bit(row, n_);
        for (auto& [p, pr] : rows_)
            if (bit(pr, piv))
                for (int w = 0; w < words_; ++w) pr[w] ^= row[w];
        rows_.emplace(piv, std::move(row));
        return true;
    }

    // Free unknowns set to zero.
    std::vector<int> solution() const {
        std::vector<int> x(n_, 0);
        for (const auto& [p, r] : rows_) x[p] = bit(r, n_);
        return x;
    }

private:
    static bool bit(const std::vector<std::uint64_t>& r, int i) { return (r[i / 64] >> (i % 64)) & 1; }
    int n_;
    int words_;
    std::map<int, std::vector<std::uint64_t>> rows_;
};

struct KeyIndex {
    std::map<CompositionKey, int> comp;
    std::map<ContractionKey, int> contr;
    int size = 0;

    void collect(const Side& s) {
        for (const auto& nd : s.nodes) {
            if (nd.kind == Node::Kind::Comp && !comp.count(nd.ck)) comp[nd.ck] = size++;
            if (nd.kind == Node::Kind::Contr && !contr.count(nd.tk)) contr[nd.tk] = size++;
        }
    }
    // Unknowns of both sides, with multiplicity mod 2.
    std::vector<int> vars(const Instance& in) const {
        std::map<int, int> count;
        for (const Side* s : {&in.lhs, &in.rhs})
            for (const auto& nd : s->nodes) {
                if (nd.kind == Node::Kind::Comp) ++count[comp.at(nd.ck)];
                if (nd.kind == Node::Kind::Contr) ++count[contr.at(nd.tk)];
            }
        std::vector<int> out;
        for (auto [v, c] : count)
            if (c % 2) out.push_back(v);
        return out;
    }
};

int action_bits(const Side& s) {
    int b = 0;
    for (const auto& nd : s.nodes)
        if (nd.kind == Node::Kind::Act) b += perm_parity(nd.perm);
    return b;
}

// ------------------------------------------------------------------ Markl

AxiomReport run_markl(const MarklTable& t) {
    validate(t);
    AxiomReport report;
    report.checker = t.odd() ? "odd_markl" : "markl";
    for (const char* name : {kAction, kSequential, kParallel, kEquivariance}) result_for(report, name);
    for (const auto& [n, c] : t.components) check_group_law(report, "S(" + std::to_string(n) + ")", c, n);
    const int N = t.max_arity;
    const bool odd = t.odd();
    auto deg = [&](int n) { return t.component(n).degree; };
    auto dim = [&](int n) { return t.component(n).dim; };
    auto comp = [&](int m, int n, int i, const SparseVector& f, const SparseVector& g) {
        auto it = t.compositions.find({m, n, i});
        return bilinear(it == t.compositions.end() ? nullptr : &it->second, dim(n), f, g);
    };
    auto fail = [](AxiomResult& res, const std::string& w) {
        if (res.failed++ == 0) res.witness = w;
    };

    for (int a = 1; a <= N; ++a)
        for (int b = 0; b <= N; ++b)
            for (int c = 0; c <= N; ++c) {
                if (!dim(a) || !dim(b) || !dim(c)) continue;
                for (int j = 1; j <= a; ++j)
                    for (int i = 1; i <= a + b - 1; ++i) {
                        const bool seq = j <= i && i < b + j;
                        auto& res = result_for(report, seq ? kSequential : kParallel);
                        bool ok = a + b - 1 <= N && a + b + c - 2 <= N && (seq ? b + c - 1 <= N : a + c - 1 <= N);
                        if (!ok) {
                            ++res.skipped;
                            continue;
                        }
                        ++res.checked;
                        std::ostringstream w;
                        w << "f in S(" << a << "), g in S(" << b << "), h in S(" << c << "), j=" << j << " i=" << i;
                        for (int x = 0; x < dim(a); ++x)
                            for (int y = 0; y < dim(b); ++y)
                                for (int z = 0; z < dim(c); ++z) {
                                    auto lhs = comp(a + b - 1, c, i, comp(a, b, j, unit(x), unit(y)), unit(z));
                                    SparseVector rhs;
                                    int s = odd ? 1 : 0;
                                    if (seq) {
                                        rhs = comp(a, b + c - 1, j, unit(x), comp(b, c, i - j + 1, unit(y), unit(z)));
                                        s += odd ? parity(deg(a)) : 0;
                                    } else {
                                        int fi = i < j ? i : i - b + 1;
                                        int gj = i < j ? j + c - 1 : j;
                                        rhs = comp(a + c - 1, b, gj, comp(a, c, fi, unit(x), unit(z)), unit(y));
                                        s += parity(deg(b) * deg(c));
                                    }
                                    if (lhs != scaled(rhs, sign_of(s))) {
                                        fail(res, w.str() + ", basis (" + std::to_string(x) + "," + std::to_string(y) +
                                                      "," + std::to_string(z) + ")");
                                        goto next_instance;
                                    }
                                }
                    next_instance:;
                    }
            }

    auto& eq = result_for(report, kEquivariance);
    for (int m = 1; m <= N; ++m)
        for (int n = 0; n <= N; ++n) {
            if (!dim(m) || !dim(n)) continue;
            for (int i = 1; i <= m; ++i) {
                Perm idm(m), idn(n);
                std::iota(idm.begin(), idm.end(), 0);
                std::iota(idn.begin(), idn.end(), 0);
                std::vector<std::pair<Perm, Perm>> gens;
                for (int j = 0; j + 1 < m; ++j) gens.emplace_back(transposition(m, j), idn);
                for (int j = 0; j + 1 < n; ++j) gens.emplace_back(idm, transposition(n, j));
                for (const auto& [tau, sigma] : gens) {
                    if (m + n - 1 > N) {
                        ++eq.skipped;
                        continue;
                    }
                    ++eq.checked;
                    // tau o_i sigma, through its inverse: position p of the
                    // composite receives input mu_inv[p].
                    Perm mu_inv;
                    Perm sigma_inv(n), tau_inv(m);
                    for (int l = 0; l < n; ++l) sigma_inv[sigma[l]] = l;
                    for (int k = 0; k < m; ++k) tau_inv[tau[k]] = k;
                    for (int k = 0; k < m; ++k) {
                        if (k == tau[i - 1]) {
                            for (int l = 0; l < n; ++l) mu_inv.push_back(i - 1 + sigma_inv[l]);
                        } else {
                            int jj = tau_inv[k];
                            mu_inv.push_back(jj < i - 1 ? jj : jj + n - 1);
                        }
                    }
                    Perm mu(mu_inv.size());
                    for (std::size_t p = 0; p < mu_inv.size(); ++p) mu[mu_inv[p]] = static_cast<int>(p);
                    for (int x = 0; x < dim(m); ++x)
                        for (int y = 0; y < dim(n); ++y) {
                            auto lhs = comp(m, n, i, right_act(t.component(m), tau, unit(x)),
                                            right_act(t.component(n), sigma, unit(y)));
                            auto rhs = right_act(t.component(m + n - 1), mu, comp(m, n, tau[i - 1] + 1, unit(x), unit(y)));
                            if (lhs != rhs) {
                                fail(eq, "f in S(" + std::to_string(m) + "), g in S(" + std::to_string(n) +
                                             "), i=" + std::to_string(i) + ", tau=" + tuple_string(tau) +
                                             " sigma=" + tuple_string(sigma) + ", basis (" + std::to_string(x) + "," +
                                             std::to_string(y) + ")");
                                goto next_gen;
                            }
                        }
                next_gen:;
                }
            }
        }
    return report;
}

void check_component(const TableComponent& c, int n, const std::string& where) {
    if (c.dim < 0) throw TableError(where + ": negative dimension");
    if (static_cast<int>(c.transpositions.size()) != std::max(0, n - 1))
        throw TableError(where + ": expected " + std::to_string(std::max(0, n - 1)) + " transposition matrices");
    for (const auto& m : c.transpositions)
        if (m.rows() != c.dim || m.cols() != c.dim) throw TableError(where + ": action matrix has the wrong size");
}

TableComponent component_with(int n, int dim, int degree, const std::function<RationalMatrix(int)>& swap) {
    TableComponent c;
    c.dim = dim;
    c.degree = degree;
    for (int j = 0; j + 1 < n; ++j) c.transpositions.push_back(swap(j));
    return c;
}

RationalMatrix scalar(int v) {
    RationalMatrix m(1, 1);
    m.set(0, 0, v);
    return m;
}

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Tuple in base k, entry 0 most significant.
std::vector<int> digits(int idx, int len, int k) {
    std::vector<int> d(len);
    for (int i = len - 1; i >= 0; --i, idx /= k) d[i] = idx % k;
    return d;
}

int undigits(const std::vector<int>& d, int k) {
    int idx = 0;
    for (int x : d) idx = idx * k + x;
    return idx;
}

}  // namespace

const TableComponent& ModularTable::component(int n, int g) const {
    auto it = components.find({n, g});
    if (it == components.end()) throw TableError("missing component " + comp_name(n, g));
    return it->second;
}

const TableComponent& MarklTable::component(int n) const {
    auto it = components.find(n);
    if (it == components.end()) throw TableError("missing component S(" + std::to_string(n) + ")");
    return it->second;
}

bool AxiomReport::passed() const {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.passed(); });
}

const AxiomResult& AxiomReport::at(const std::string& axiom) const {
    for (const auto& a : axioms)
        if (a.axiom == axiom) return a;
    throw std::out_of_range("no axiom " + axiom);
}

void validate(const ModularTable& t) {
    if (t.max_legs < 0 || t.max_genus < 0) throw TableError("bounds must be >= 0");
    for (int n = 0; n <= t.max_legs; ++n)
        for (int g = 0; g <= t.max_genus; ++g) check_component(t.component(n, g), n, comp_name(n, g));
    if (t.components.size() != static_cast<std::size_t>((t.max_legs + 1) * (t.max_genus + 1)))
        throw TableError("component outside the bounds");
    for (const auto& [k, mat] : t.compositions) {
        std::string where = "composition " + comp_name(k.m, k.g1) + " x " + comp_name(k.n, k.g2) + " at (" +
                            std::to_string(k.a) + "," + std::to_string(k.b) + ")";
        if (!t.in_bounds(k.m, k.g1) || !t.in_bounds(k.n, k.g2) || !t.in_bounds(k.m + k.n - 2, k.g1 + k.g2))
            throw TableError(where + ": outside the bounds");
        if (k.a < 1 || k.a > k.m || k.b < 1 || k.b > k.n) throw TableError(where + ": leg out of range");
        const auto &x = t.component(k.m, k.g1), &y = t.component(k.n, k.g2), &z = t.component(k.m + k.n - 2, k.g1 + k.g2);
        if (mat.rows() != z.dim || mat.cols() != x.dim * y.dim) throw TableError(where + ": wrong matrix size");
        if (!mat.is_zero() && z.degree != x.degree + y.degree + t.op_degree)
            throw TableError(where + ": degree bookkeeping");
    }
    for (const auto& [k, mat] : t.contractions) {
        std::string where = "contraction of " + comp_name(k.n, k.g) + " at (" + std::to_string(k.u) + "," +
                            std::to_string(k.v) + ")";
        if (!t.in_bounds(k.n, k.g) || !t.in_bounds(k.n - 2, k.g + 1)) throw TableError(where + ": outside the bounds");
        if (k.u < 1 || k.u >= k.v || k.v > k.n) throw TableError(where + ": legs must satisfy 1 <= u < v <= n");
        const auto &x = t.component(k.n, k.g), &z = t.component(k.n - 2, k.g + 1);
        if (mat.rows() != z.dim || mat.cols() != x.dim) throw TableError(where + ": wrong matrix size");
        if (!mat.is_zero() && z.degree != x.degree + t.op_degree) throw TableError(where + ": degree bookkeeping");
    }
}

void validate(const MarklTable& t) {
    if (t.max_arity < 0) throw TableError("bounds must be >= 0");
    for (int n = 0; n <= t.max_arity; ++n) check_component(t.component(n), n, "S(" + std::to_string(n) + ")");
    if (t.components.size() != static_cast<std::size_t>(t.max_arity + 1)) throw TableError("component outside the bounds");
    for (const auto& [k, mat] : t.compositions) {
        auto [m, n, i] = k;
        std::string where = "composition S(" + std::to_string(m) + ") o_" + std::to_string(i) + " S(" +
                            std::to_string(n) + ")";
        if (m < 1 || n < 0 || m + n - 1 > t.max_arity || m > t.max_arity || n > t.max_arity)
            throw TableError(where + ": outside the bounds");
        if (i < 1 || i > m) throw TableError(where + ": slot out of range");
        const auto &x = t.component(m), &y = t.component(n), &z = t.component(m + n - 1);
        if (mat.rows() != z.dim || mat.cols() != x.dim * y.dim) throw TableError(where + ": wrong matrix size");
        if (!mat.is_zero() && z.degree != x.degree + y.degree + t.op_degree)
            throw TableError(where + ": degree bookkeeping");
    }
}

AxiomReport check_modular(const ModularTable& t) { return run_modular(t, false); }
AxiomReport check_odd_modular(const ModularTable& t) { return run_modular(t, true); }
AxiomReport check_markl(const MarklTable& t) { return run_markl(t); }

MarklTable suspend(const MarklTable& t) {
    validate(t);
    MarklTable s = t;
    s.op_degree -= 1;
    for (auto& [n, c] : s.components) c.degree += 1;
    for (auto& [k, mat] : s.compositions) {
        int sg = sign_of(t.component(std::get<0>(k)).degree + 1);
        RationalMatrix out(mat.rows(), mat.cols());
        for (const auto& [r, c, v] : mat.triplets()) out.set(r, c, v * sg);
        mat = std::move(out);
    }
    return s;
}

ModularTable suspend(const ModularTable& t) {
    validate(t);
    auto shift = [](int n, int g) { return n + g - 1; };
    ModularTable shape = t;
    shape.op_degree -= 1;
    for (auto& [k, c] : shape.components) c.degree += shift(k.first, k.second);

    std::map<std::string, long> skipped;
    auto src = modular_instances(t, t.odd(), skipped);
    auto tgt = modular_instances(shape, shape.odd(), skipped);
    // Instances whose two sides vanish on every basis tuple hold for any signs.
    std::vector<std::size_t> live_instances;
    for (std::size_t i = 0; i < src.size(); ++i)
        if (!vanishes(t, src[i])) live_instances.push_back(i);
    KeyIndex keys;
    for (std::size_t i : live_instances) {
        keys.collect(src[i].lhs);
        keys.collect(src[i].rhs);
    }
    // Koszul sign of up o op o (down x down) on e_x x e_y.
    auto composite = [&](const CompositionKey& k) {
        int s1 = shift(k.m, k.g1), s2 = shift(k.n, k.g2);
        return parity(s2 * (t.component(k.m, k.g1).degree + s1));
    };
    std::vector<int> base(keys.size, 0);
    for (const auto& [k, i] : keys.comp) base[i] = composite(k);
    std::string obstruction;
    // The action is kept, or twisted by the sign representation.
    for (int twist : {0, 1}) {
        Gf2System sys(keys.size);
        bool ok = true;
        for (std::size_t i : live_instances) {
            auto vars = keys.vars(src[i]);
            int rhs = src[i].lhs.sign + src[i].rhs.sign + tgt[i].lhs.sign + tgt[i].rhs.sign +
                      twist * (action_bits(src[i].lhs) + action_bits(src[i].rhs));
            for (int v : vars) rhs += base[v];
            if (!sys.add(vars, rhs)) {
                obstruction += std::string(twist ? "; with the sgn twist at " : "at ") + src[i].axiom + ": " + src[i].label;
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        auto delta = sys.solution();
        ModularTable s = shape;
        auto negate = [](RationalMatrix& m) {
            RationalMatrix out(m.rows(), m.cols());
            for (const auto& [r, c, v] : m.triplets()) out.set(r, c, -v);
            m = std::move(out);
        };
        if (twist)
            for (auto& [k, c] : s.components)
                for (auto& m : c.transpositions) negate(m);
        for (auto& [k, mat] : s.compositions) {
            int bit = composite(k);
            auto it = keys.comp.find(k);
            if (it != keys.comp.end()) bit += delta[it->second];
            if (bit % 2) negate(mat);
        }
        for (auto& [k, mat] : s.contractions) {
            auto it = keys.contr.find(k);
            if (it != keys.contr.end() && delta[it->second]) negate(mat);
        }
        return s;
    }
    throw TableError("suspension is obstructed " + obstruction);
}

ModularTable terminal_modular(int max_legs, int max_genus) { return endomorphism_modular(1, max_legs, max_genus); }

ModularTable endomorphism_modular(int k, int max_legs, int max_genus) {
    if (k < 1) throw TableError("endomorphism table needs dim >= 1");
    ModularTable t;
    t.max_legs = max_legs;
    t.max_genus = max_genus;
    for (int n = 0; n <= max_legs; ++n)
        for (int g = 0; g <= max_genus; ++g) {
            int d = ipow(k, n);
            t.components[{n, g}] = component_with(n, d, 0, [&](int j) {
                RationalMatrix m(d, d);
                for (int i = 0; i < d; ++i) {
                    auto tup = digits(i, n, k);
                    std::swap(tup[j], tup[j + 1]);
                    m.set(undigits(tup, k), i, 1);
                }
                return m;
            });
        }
    for (int m = 1; m <= max_legs + 1; ++m)
        for (int n = 1; m + n - 2 <= max_legs; ++n) {
            if (m > max_legs || n > max_legs) continue;
            for (int g1 = 0; g1 <= max_genus; ++g1)
                for (int g2 = 0; g1 + g2 <= max_genus; ++g2)
                    for (int a = 1; a <= m; ++a)
                        for (int b = 1; b <= n; ++b) {
                            int dm = ipow(k, m), dn = ipow(k, n);
                            RationalMatrix mat(ipow(k, m + n - 2), dm * dn);
                            for (int i = 0; i < dm; ++i)
                                for (int j = 0; j < dn; ++j) {
                                    auto x = digits(i, m, k), y = digits(j, n, k);
                                    if (x[a - 1] != y[b - 1]) continue;
                                    std::vector<int> z;
                                    for (int p = 0; p < m; ++p)
                                        if (p != a - 1) z.push_back(x[p]);
                                    for (int q = 0; q < n; ++q)
                                        if (q != b - 1) z.push_back(y[q]);
                                    mat.set(undigits(z, k), i * dn + j, 1);
                                }
                            t.compositions[{m, g1, n, g2, a, b}] = std::move(mat);
                        }
        }
    for (int n = 2; n <= max_legs; ++n)
        for (int g = 0; g + 1 <= max_genus; ++g)
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v) {
                    int d = ipow(k, n);
                    RationalMatrix mat(ipow(k, n - 2), d);
                    for (int i = 0; i < d; ++i) {
                        auto x = digits(i, n, k);
                        if (x[u - 1] != x[v - 1]) continue;
                        std::vector<int> z;
                        for (int p = 0; p < n; ++p)
                            if (p != u - 1 && p != v - 1) z.push_back(x[p]);
                        mat.set(undigits(z, k), i, 1);
                    }
                    t.contractions[{n, g, u, v}] = std::move(mat);
                }
    return t;
}

ModularTable det_modular(int max_legs, int max_genus) {
    ModularTable shape;
    shape.max_legs = max_legs;
    shape.max_genus = max_genus;
    shape.op_degree = 1;
    auto stable = [](int n, int g) { return 2 * g + n >= 3; };
    for (int n = 0; n <= max_legs; ++n)
        for (int g = 0; g <= max_genus; ++g) {
            TableComponent c;
            c.dim = stable(n, g) ? 1 : 0;
            c.degree = n + 3 * g - 3;
            c.transpositions.assign(std::max(0, n - 1), c.dim ? scalar(1) : RationalMatrix(0, 0));
            shape.components[{n, g}] = c;
        }
    for (const auto& [x, cx] : shape.components)
        for (const auto& [y, cy] : shape.components) {
            auto [m, g1] = x;
            auto [n, g2] = y;
            if (!cx.dim || !cy.dim || !shape.in_bounds(m + n - 2, g1 + g2)) continue;
            for (int a = 1; a <= m; ++a)
                for (int b = 1; b <= n; ++b) shape.compositions[{m, g1, n, g2, a, b}] = scalar(1);
        }
    std::map<std::string, long> skipped;
    std::vector<Instance> instances;
    for (auto& in : modular_instances(shape, true, skipped))
        if (!vanishes(shape, in)) instances.push_back(std::move(in));
    KeyIndex keys;
    for (const auto& in : instances) {
        keys.collect(in.lhs);
        keys.collect(in.rhs);
    }
    for (int twist : {0, 1}) {
        Gf2System sys(keys.size);
        bool ok = true;
        for (const auto& in : instances) {
            int rhs = in.lhs.sign + in.rhs.sign + twist * (action_bits(in.lhs) + action_bits(in.rhs));
            if (!sys.add(keys.vars(in), rhs)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        auto bits = sys.solution();
        ModularTable t = shape;
        for (auto& [k, c] : t.components)
            for (auto& m : c.transpositions)
                if (c.dim) m = scalar(twist ? -1 : 1);
        for (const auto& [k, i] : keys.comp) t.compositions[k] = scalar(sign_of(bits[i]));
        return t;
    }
    throw TableError("no consistent det signs within the bounds");
}

MarklTable associative_markl(int max_arity) {
    MarklTable t;
    t.max_arity = max_arity;
    for (int n = 0; n <= max_arity; ++n) t.components[n] = component_with(n, 1, 0, [](int) { return scalar(1); });
    for (int m = 1; m <= max_arity; ++m)
        for (int n = 0; m + n - 1 <= max_arity; ++n)
            for (int i = 1; i <= m; ++i) t.compositions[{m, n, i}] = scalar(1);
    return t;
}

MarklTable endomorphism_markl(int k, int max_arity) {
    if (k < 1) throw TableError("endomorphism table needs dim >= 1");
    MarklTable t;
    t.max_arity = max_arity;
    // basis of Hom(V^{x n}, V): digits (out, in_1, ..., in_n)
    for (int n = 0; n <= max_arity; ++n) {
        int d = ipow(k, n + 1);
        t.components[n] = component_with(n, d, 0, [&](int j) {
            RationalMatrix m(d, d);
            for (int i = 0; i < d; ++i) {
                auto tup = digits(i, n + 1, k);
                std::swap(tup[j + 1], tup[j + 2]);
                m.set(undigits(tup, k), i, 1);
            }
            return m;
        });
    }
    for (int m = 1; m <= max_arity; ++m)
        for (int n = 0; m + n - 1 <= max_arity; ++n)
            for (int i = 1; i <= m; ++i) {
                int dm = ipow(k, m + 1), dn = ipow(k, n + 1);
                RationalMatrix mat(ipow(k, m + n), dm * dn);
                for (int x = 0; x < dm; ++x)
                    for (int y = 0; y < dn; ++y) {
                        auto f = digits(x, m + 1, k), g = digits(y, n + 1, k);
                        if (f[i] != g[0]) continue;
                        std::vector<int> z{f[0]};
                        for (int p = 1; p < i; ++p) z.push_back(f[p]);
                        for (int q = 1; q <= n; ++q) z.push_back(g[q]);
                        for (int p = i + 1; p <= m; ++p) z.push_back(f[p]);
                        mat.set(undigits(z, k), x * dn + y, 1);
                    }
                t.compositions[{m, n, i}] = std::move(mat);
            }
    return t;
}

namespace {

nlohmann::ordered_json component_json(const TableComponent& c) {
    nlohmann::ordered_json j;
    j["dim"] = c.dim;
    j["degree"] = c.degree;
    auto a = nlohmann::ordered_json::array();
    for (const auto& m : c.transpositions) a.push_back(to_json(m));
    j["transpositions"] = a;
    return j;
}

TableComponent component_from(const nlohmann::ordered_json& j) {
    TableComponent c;
    c.dim = j.at("dim").get<int>();
    c.degree = j.value("degree", 0);
    for (const auto& m : j.at("transpositions")) c.transpositions.push_back(matrix_from_json(m));
    return c;
}

}  // namespace

nlohmann::ordered_json to_json(const ModularTable& t) {
    nlohmann::ordered_json j;
    j["kind"] = "modular";
    j["op_degree"] = t.op_degree;
    j["max_legs"] = t.max_legs;
    j["max_genus"] = t.max_genus;
    auto comps = nlohmann::ordered_json::array();
    for (const auto& [k, c] : t.components) {
        nlohmann::ordered_json e;
        e["legs"] = k.first;
        e["genus"] = k.second;
        auto cj = component_json(c);
        for (auto& [key, v] : cj.items()) e[key] = v;
        comps.push_back(e);
    }
    j["components"] = comps;
    auto cs = nlohmann::ordered_json::array();
    for (const auto& [k, m] : t.compositions)
        cs.push_back({{"left", {k.m, k.g1}}, {"right", {k.n, k.g2}}, {"a", k.a}, {"b", k.b}, {"matrix", to_json(m)}});
    j["compositions"] = cs;
    auto xs = nlohmann::ordered_json::array();
    for (const auto& [k, m] : t.contractions)
        xs.push_back({{"source", {k.n, k.g}}, {"u", k.u}, {"v", k.v}, {"matrix", to_json(m)}});
    j["contractions"] = xs;
    return j;
}

nlohmann::ordered_json to_json(const MarklTable& t) {
    nlohmann::ordered_json j;
    j["kind"] = "markl";
    j["op_degree"] = t.op_degree;
    j["max_arity"] = t.max_arity;
    auto comps = nlohmann::ordered_json::array();
    for (const auto& [n, c] : t.components) {
        nlohmann::ordered_json e;
        e["arity"] = n;
        auto cj = component_json(c);
        for (auto& [key, v] : cj.items()) e[key] = v;
        comps.push_back(e);
    }
    j["components"] = comps;
    auto cs = nlohmann::ordered_json::array();
    for (const auto& [k, m] : t.compositions) {
        auto [mm, n, i] = k;
        cs.push_back({{"m", mm}, {"n", n}, {"i", i}, {"matrix", to_json(m)}});
    }
    j["compositions"] = cs;
    return j;
}

nlohmann::ordered_json to_json(const AxiomReport& r) {
    nlohmann::ordered_json j;
    j["checker"] = r.checker;
    j["passed"] = r.passed();
    auto a = nlohmann::ordered_json::array();
    for (const auto& x : r.axioms) {
        nlohmann::ordered_json e;
        e["axiom"] = x.axiom;
        e["passed"] = x.passed();
        e["checked"] = x.checked;
        e["skipped"] = x.skipped;
        e["failed"] = x.failed;
        if (!x.witness.empty()) e["witness"] = x.witness;
        a.push_back(e);
    }
    j["axioms"] = a;
    return j;
}

OperadTable table_from_json(const nlohmann::ordered_json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "modular") {
            ModularTable t;
            t.op_degree = j.value("op_degree", 0);
            t.max_legs = j.at("max_legs").get<int>();
            t.max_genus = j.at("max_genus").get<int>();
            for (const auto& e : j.at("components")) {
                auto key = std::make_pair(e.at("legs").get<int>(), e.at("genus").get<int>());
                if (t.components.count(key)) throw TableError("duplicate component " + comp_name(key.first, key.second));
                t.components[key] = component_from(e);
            }
            for (const auto& e : j.value("compositions", nlohmann::ordered_json::array())) {
                CompositionKey k{e.at("left").at(0).get<int>(), e.at("left").at(1).get<int>(),
                                 e.at("right").at(0).get<int>(), e.at("right").at(1).get<int>(),
                                 e.at("a").get<int>(), e.at("b").get<int>()};
                t.compositions[k] = matrix_from_json(e.at("matrix"));
            }
            for (const auto& e : j.value("contractions", nlohmann::ordered_json::array())) {
                ContractionKey k{e.at("source").at(0).get<int>(), e.at("source").at(1).get<int>(),
                                 e.at("u").get<int>(), e.at("v").get<int>()};
                t.contractions[k] = matrix_from_json(e.at("matrix"));
            }
            validate(t);
            return t;
        }
        if (kind == "markl") {
            MarklTable t;
            t.op_degree = j.value("op_degree", 0);
            t.max_arity = j.at("max_arity").get<int>();
            for (const auto& e : j.at("components")) {
                int n = e.at("arity").get<int>();
                if (t.components.count(n)) throw TableError("duplicate component S(" + std::to_string(n) + ")");
                t.components[n] = component_from(e);
            }
            for (const auto& e : j.value("compositions", nlohmann::ordered_json::array()))
                t.compositions[{e.at("m").get<int>(), e.at("n").get<int>(), e.at("i").get<int>()}] =
                    matrix_from_json(e.at("matrix"));
            validate(t);
            return t;
        }
        throw TableError("unknown table kind: " + kind);
    } catch (const nlohmann::json::exception& e) {
        throw TableError(std::string("malformed table: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw TableError(std::string("malformed table: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw TableError(std::string("malformed table: ") + e.what());
    }
}

}  // namespace operadforge
