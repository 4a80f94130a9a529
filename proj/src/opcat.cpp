#include "operadforge/opcat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace operadforge {

int Surjection::k() const { return map.empty() ? 0 : *std::max_element(map.begin(), map.end()); }

void validate(const Surjection& s) {
    if (s.map.empty()) throw ValidationError("surjection needs n >= 1");
    std::set<int> image(s.map.begin(), s.map.end());
    int k = s.k();
    if (*image.begin() < 1 || static_cast<int>(image.size()) != k)
        throw ValidationError("map is not a surjection onto 1..k");
}

PerMerge per_merge(const Surjection& s, int first, int last) {
    validate(s);
    if (first < 1 || last > s.k() || last <= first) throw ValidationError("bad Per merge block");
    PerMerge m{s, first, last, {}, {}};
    for (int y : s.map) {
        if (y >= first && y <= last) m.fiber.map.push_back(y - first + 1);
        if (y < first)
            m.quotient.map.push_back(y);
        else if (y <= last)
            m.quotient.map.push_back(first);
        else
            m.quotient.map.push_back(y - (last - first));
    }
    return m;
}

Flavor flavor_of(const OpCatObject& x) {
    if (auto g = std::get_if<DecoratedGraph>(&x)) return g->flavor;
    return Flavor::Per;
}

int grade(const OpCatObject& x) {
    if (auto g = std::get_if<DecoratedGraph>(&x)) return num_edges(*g);
    return std::get<Surjection>(x).k() - 1;
}

int grade(const ElemMorphism& m) { return grade(morphism_fiber(m)); }

void validate(const OpCatObject& x) {
    if (auto g = std::get_if<DecoratedGraph>(&x))
        validate(*g);
    else
        validate(std::get<Surjection>(x));
}

namespace {
std::string per_string(const Surjection& s) {
    std::ostringstream os;
    os << "Per:";
    for (std::size_t i = 0; i < s.map.size(); ++i) os << (i ? "," : "") << s.map[i];
    return os.str();
}
}  // namespace

std::string canonical_key(const OpCatObject& x) {
    if (auto g = std::get_if<DecoratedGraph>(&x)) return canonical_key(*g);
    return per_string(std::get<Surjection>(x));
}

std::string virtual_key(const OpCatObject& x) {
    if (auto g = std::get_if<DecoratedGraph>(&x)) return virtual_key(*g);
    return "V" + per_string(std::get<Surjection>(x));
}

OpCatObject canonical(const OpCatObject& x) {
    if (auto g = std::get_if<DecoratedGraph>(&x)) return canonical_form(*g).first;
    return x;
}

Skeleton skeleton(const OpCatObject& x) {
    Skeleton s;
    if (auto g = std::get_if<DecoratedGraph>(&x)) {
        s.num_vertices = g->num_vertices();
        auto vo = vertex_of(*g);
        for (auto [a, b] : edges(*g)) s.edges.emplace_back(vo[a], vo[b]);
    } else {
        int k = std::get<Surjection>(x).k();
        s.num_vertices = k;
        for (int t = 0; t + 1 < k; ++t) s.edges.emplace_back(t, t + 1);
    }
    return s;
}

ElemMorphism contract_edges(const OpCatObject& x, const std::vector<int>& edge_ids, bool check_flavor) {
    if (auto g = std::get_if<DecoratedGraph>(&x)) return contract(*g, edge_ids, check_flavor);
    const auto& s = std::get<Surjection>(x);
    std::vector<int> ids = edge_ids;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) throw ValidationError("contract: empty edge set");
    for (std::size_t i = 1; i < ids.size(); ++i)
        if (ids[i] != ids[i - 1] + 1) throw ValidationError("contract: Per block is not consecutive");
    if (ids.front() < 0 || ids.back() > s.k() - 2) throw ValidationError("contract: unknown edge");
    return per_merge(s, ids.front() + 1, ids.back() + 2);
}

OpCatObject morphism_source(const ElemMorphism& m) {
    if (auto e = std::get_if<ElementarySplit>(&m)) return e->source;
    return std::get<PerMerge>(m).source;
}

OpCatObject morphism_fiber(const ElemMorphism& m) {
    if (auto e = std::get_if<ElementarySplit>(&m)) return e->fiber;
    return std::get<PerMerge>(m).fiber;
}

OpCatObject morphism_quotient(const ElemMorphism& m) {
    if (auto e = std::get_if<ElementarySplit>(&m)) return e->quotient;
    return std::get<PerMerge>(m).quotient;
}

std::vector<int> fiber_edges(const ElemMorphism& m) {
    if (auto e = std::get_if<ElementarySplit>(&m)) return e->fiber_edges;
    const auto& p = std::get<PerMerge>(m);
    std::vector<int> out;
    for (int t = p.first - 1; t <= p.last - 2; ++t) out.push_back(t);
    return out;
}

std::vector<int> fiber_edge_map(const ElemMorphism& m) {
    if (auto e = std::get_if<ElementarySplit>(&m)) return e->fiber_edge_map();
    return fiber_edges(m);
}

std::vector<int> quotient_edge_map(const ElemMorphism& m) {
    if (auto e = std::get_if<ElementarySplit>(&m)) return e->quotient_edge_map();
    const auto& p = std::get<PerMerge>(m);
    int removed = p.last - p.first;
    std::vector<int> out;
    for (int t = 0; t + 1 < p.quotient.k(); ++t) out.push_back(t < p.first - 1 ? t : t + removed);
    return out;
}

std::vector<ElemMorphism> elementary_from(const OpCatObject& x) {
    std::vector<ElemMorphism> out;
    if (auto g = std::get_if<DecoratedGraph>(&x)) {
        for (auto& sp : admissible_splits(*g, false)) out.emplace_back(std::move(sp));
        return out;
    }
    const auto& s = std::get<Surjection>(x);
    validate(s);
    for (int len = 2; len <= s.k(); ++len)
        for (int first = 1; first + len - 1 <= s.k(); ++first) out.emplace_back(per_merge(s, first, first + len - 1));
    return out;
}

bool is_local_terminal(const OpCatObject& x) { return grade(x) == 0; }

bool is_chosen_terminal(const OpCatObject& x) {
    if (!is_local_terminal(x)) return false;
    if (auto g = std::get_if<DecoratedGraph>(&x)) {
        if (g->num_half_edges() == 0) return true;
        return g->vertices[0] == g->legs;
    }
    return true;
}

DecoratedGraph soul_graph(const OpCatObject& x) {
    if (auto g = std::get_if<DecoratedGraph>(&x)) return soul(*g);
    Skeleton sk = skeleton(x);
    DecoratedGraph p;
    p.flavor = Flavor::ggGrc;
    p.vertices.resize(sk.num_vertices);
    for (auto [a, b] : sk.edges) {
        int h = p.num_half_edges();
        p.involution.push_back(h + 1);
        p.involution.push_back(h);
        p.vertices[a].push_back(h);
        p.vertices[b].push_back(h + 1);
    }
    p.genus.assign(sk.num_vertices, 0);
    return p;
}

nlohmann::ordered_json to_json(const OpCatObject& x) {
    if (auto g = std::get_if<DecoratedGraph>(&x)) return to_json(*g);
    nlohmann::ordered_json j;
    j["flavor"] = "Per";
    j["map"] = std::get<Surjection>(x).map;
    return j;
}

OpCatObject object_from_json(const nlohmann::ordered_json& j) {
    try {
        if (j.at("flavor").get<std::string>() == "Per") {
            Surjection s{j.at("map").get<std::vector<int>>()};
            validate(s);
            return s;
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed object JSON: ") + e.what());
    }
    return graph_from_json(j);
}

}  // namespace operadforge
