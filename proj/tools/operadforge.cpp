#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "operadforge/axioms.hpp"
#include "operadforge/cobar.hpp"
#include "operadforge/enumerate.hpp"
#include "operadforge/presentations.hpp"

using namespace operadforge;
using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string flavor = "ggGrc";
    std::string presentation;
    int max_edges = 2;
    int max_legs = 2;
    int max_genus = 0;
    int jobs = 1;
    std::string format = "json";
    std::string out;
    bool mutate = false;

    Flavor parsed_flavor() const {
        try {
            return parse_flavor(flavor);
        } catch (const std::exception&) {
            throw UsageError("unknown flavor: " + flavor);
        }
    }
    Bounds bounds() const {
        Bounds b{max_edges, max_legs, max_genus};
        try {
            validate(b);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return b;
    }
    Json bounds_json() const {
        return {{"max_edges", max_edges}, {"max_legs", max_legs}, {"max_genus", max_genus}};
    }
};

// Runs fn(i) for i < n on `jobs` threads; results land in index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, int jobs, Fn fn) {
    std::vector<T> out(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < n;) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs && static_cast<std::size_t>(t) < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

std::string render_rows(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (w.size() <= i) w.push_back(0);
            w[i] = std::max(w[i], r[i].size());
        }
    std::ostringstream os;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) line += (i ? "  " : "") + (i + 1 < r.size() ? pad(r[i], w[i]) : r[i]);
        os << line << '\n';
    }
    return os.str();
}

std::string dims_string(const std::map<int, int>& m) {
    std::vector<std::string> parts;
    for (auto [k, v] : m) parts.push_back(std::to_string(k) + ":" + std::to_string(v));
    return "{" + join(parts, ",") + "}";
}

Json vector_json(const SparseVector& v) {
    Json j = Json::object();
    for (const auto& [i, c] : v) j[std::to_string(i)] = c.get_str();
    return j;
}

std::string vector_string(const SparseVector& v, const std::vector<std::string>& names) {
    std::string s;
    for (const auto& [i, c] : v) {
        Rational a = abs(c);
        std::string term = (a == 1 ? "" : a.get_str() + "*") + names.at(i);
        s += s.empty() ? (c < 0 ? "-" : "") + term : (c < 0 ? " - " : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

void emit(const RunConfig& cfg, const Json& j, const std::string& table) {
    std::string text = cfg.format == "table" ? table : j.dump(2) + "\n";
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << text;
}

// ------------------------------------------------------------ enumerate

int cmd_enumerate(const RunConfig& cfg) {
    Flavor f = cfg.parsed_flavor();
    auto objects = enumerate_objects(f, cfg.bounds());
    Json list = Json::array();
    std::vector<std::vector<std::string>> rows{{"key", "edges"}};
    for (const auto& x : objects) {
        list.push_back({{"key", canonical_key(x)}, {"edges", grade(x)}, {"object", to_json(x)}});
        rows.push_back({canonical_key(x), std::to_string(grade(x))});
    }
    Json j{{"command", "enumerate"}, {"flavor", flavor_name(f)}, {"bounds", cfg.bounds_json()},
           {"count", objects.size()}, {"objects", list}};
    emit(cfg, j, render_rows(rows) + "count " + std::to_string(objects.size()) + "\n");
    return 0;
}

// ----------------------------------------------------------------- dims

QuadraticData presentation_of(const RunConfig& cfg, Flavor f) {
    std::string name = cfg.presentation.empty() ? presentation_for(f) : cfg.presentation;
    try {
        return builtin_presentation(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int cmd_dims(const RunConfig& cfg) {
    auto q = presentation_of(cfg, cfg.parsed_flavor());
    Flavor f = cfg.presentation.empty() ? cfg.parsed_flavor() : q.flavor;
    auto objects = enumerate_objects(f, cfg.bounds());
    struct Row {
        std::map<int, int> free, quotient;
        DualComponent dual;
    };
    auto rows = parallel_map<Row>(objects.size(), cfg.jobs, [&](std::size_t i) {
        Row r;
        const auto& x = objects[i];
        for (int k = 1; k <= grade(x); ++k) {
            int d = component(q.generators, x, k)->dim();
            if (d) r.free[k] = d;
        }
        r.quotient = quotient_dim(q, x);
        if (cfg.presentation.empty() || cfg.presentation == presentation_for(f))
            r.dual = dual_component_as_determinant(f, x);
        return r;
    });
    Json list = Json::array();
    std::vector<std::vector<std::string>> table{{"key", "edges", "free", "quotient", "dual"}};
    for (std::size_t i = 0; i < objects.size(); ++i) {
        const auto& x = objects[i];
        auto obj = [](const std::map<int, int>& m) {
            Json o = Json::object();
            for (auto [k, v] : m) o[std::to_string(k)] = v;
            return o;
        };
        Json e{{"key", canonical_key(x)}, {"edges", grade(x)}, {"free", obj(rows[i].free)},
               {"quotient", obj(rows[i].quotient)}};
        if (cfg.presentation.empty() || cfg.presentation == presentation_for(f))
            e["dual"] = {{"dim", rows[i].dual.dimension}, {"degree", rows[i].dual.degree}};
        list.push_back(e);
        table.push_back({canonical_key(x), std::to_string(grade(x)), dims_string(rows[i].free),
                         dims_string(rows[i].quotient),
                         std::to_string(rows[i].dual.dimension) + "@" + std::to_string(rows[i].dual.degree)});
    }
    Json j{{"command", "dims"}, {"flavor", flavor_name(f)}, {"presentation", q.name}, {"bounds", cfg.bounds_json()},
           {"objects", list}};
    emit(cfg, j, render_rows(table));
    return 0;
}

// -------------------------------------------------------------- present

int cmd_present(const RunConfig& cfg) {
    QuadraticData q;
    if (!cfg.presentation.empty()) {
        q = presentation_of(cfg, Flavor::ggGrc);
    } else {
        q = presentation_of(cfg, cfg.parsed_flavor());
    }
    auto dual = koszul_dual(q);
    Json fams = Json::array();
    std::vector<std::vector<std::string>> table{{"shape", "relations", "dual relations"}};
    bool identity_pairings = true;
    for (const auto& [key, fam] : q.families) {
        const auto& dfam = dual.families.at(key);
        auto p = pairing_matrix(q, OpCatObject(fam.shape));
        identity_pairings &= p == RationalMatrix::identity(p.rows()) && p.rows() == p.cols();
        std::vector<std::string> names;
        for (int i = 1; i <= p.cols(); ++i) names.push_back("d" + std::to_string(i));
        Json rel = Json::array(), drel = Json::array();
        std::vector<std::string> rs, ds;
        for (const auto& v : fam.relations.basis) {
            rel.push_back(vector_json(v));
            rs.push_back(vector_string(v, names));
        }
        for (const auto& v : dfam.relations.basis) {
            drel.push_back(vector_json(v));
            ds.push_back(vector_string(v, names));
        }
        fams.push_back({{"shape", fam.name},
                        {"key", key},
                        {"dim", p.cols()},
                        {"relations", rel},
                        {"dual_relations", drel},
                        {"pairing", to_json(p)}});
        table.push_back({fam.name, rs.empty() ? "none" : join(rs, ", "), ds.empty() ? "none" : join(ds, ", ")});
    }
    Json j{{"command", "present"},
           {"presentation", q.name},
           {"flavor", flavor_name(q.flavor)},
           {"identity_pairings", identity_pairings},
           {"families", fams}};
    emit(cfg, j, render_rows(table));
    return identity_pairings ? 0 : 1;
}

// --------------------------------------------------------------- koszul

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    return h;
}

// File-backed memo for certification reports, keyed by soul.
class ReportCache {
public:
    ReportCache() {
        if (const char* d = std::getenv("OPERADFORGE_CACHE_DIR"); d && *d) {
            dir_ = d;
            std::filesystem::create_directories(dir_);
        }
    }

    std::optional<CobarReport> load(const std::string& key) const {
        if (dir_.empty()) return std::nullopt;
        std::ifstream in(path(key));
        if (!in) return std::nullopt;
        try {
            auto j = Json::parse(in);
            if (j.at("cache_key") != key) return std::nullopt;
            CobarReport r;
            r.edges = j.at("edges");
            r.layer_dims = j.at("layer_dims").get<std::vector<int>>();
            for (auto& [k, v] : j.at("betti").items()) r.betti[std::stoi(k)] = v.get<int>();
            r.d_squared = j.at("d_squared_zero");
            r.canonical_map = j.at("canonical_map");
            r.chi = j.at("chi_intertwines");
            return r;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    void store(const std::string& key, const CobarReport& r) const {
        if (dir_.empty()) return;
        Json j = to_json(r);
        j.erase("key");
        j["cache_key"] = key;
        auto p = path(key);
        auto tmp = p;
        tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
        {
            std::ofstream f(tmp);
            f << j.dump();
        }
        std::error_code ec;
        std::filesystem::rename(tmp, p, ec);
    }

private:
    std::filesystem::path path(const std::string& key) const {
        std::ostringstream os;
        os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key) << ".json";
        return dir_ / os.str();
    }
    std::filesystem::path dir_;
};

int cmd_koszul(const RunConfig& cfg) {
    Flavor f = cfg.parsed_flavor();
    auto objects = enumerate_objects(f, cfg.bounds());
    std::vector<OpCatObject> work;
    for (const auto& x : objects)
        if (grade(x) >= 1) work.push_back(x);
    CobarOptions opt;
    opt.mutate = cfg.mutate;
    ReportCache cache;
    auto reports = parallel_map<CobarReport>(work.size(), cfg.jobs, [&](std::size_t i) {
        const auto& x = work[i];
        std::string key = flavor_name(f) + (opt.mutate ? "!" : "") + "|" +
                          canonical_key(canonical_form(soul_graph(x)).first);
        if (auto hit = cache.load(key)) {
            hit->key = canonical_key(x);
            return *hit;
        }
        auto r = certify(f, x, opt);
        cache.store(key, r);
        return r;
    });
    Json list = Json::array();
    std::vector<std::vector<std::string>> table{{"key", "edges", "layers", "betti", "d2", "can", "chi", "koszul"}};
    int failures = 0;
    Json witness;
    for (std::size_t i = 0; i < work.size(); ++i) {
        const auto& r = reports[i];
        list.push_back(to_json(r));
        std::vector<std::string> layers;
        for (int d : r.layer_dims) layers.push_back(std::to_string(d));
        auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
        table.push_back({r.key, std::to_string(r.edges), join(layers, ","), dims_string(r.betti), yn(r.d_squared),
                         yn(r.canonical_map), yn(r.chi), yn(r.koszul())});
        if (!r.koszul() && failures++ == 0) witness = {{"key", r.key}, {"object", to_json(work[i])}, {"report", to_json(r)}};
    }
    Json j{{"command", "koszul"}, {"flavor", flavor_name(f)}, {"bounds", cfg.bounds_json()},
           {"objects_checked", work.size()}, {"koszul", failures == 0}, {"failures", failures}};
    if (failures) j["witness"] = witness;
    j["objects"] = list;
    std::string text = render_rows(table) + (failures ? "FAIL " + std::to_string(failures) + " object(s); first " +
                                                            witness["key"].get<std::string>() + "\n"
                                                      : "koszul on all " + std::to_string(work.size()) + " objects\n");
    emit(cfg, j, text);
    if (failures) std::cerr << "not koszul at " << witness["key"].get<std::string>() << "\n";
    return failures ? 1 : 0;
}

// --------------------------------------------------------------- axioms

OperadTable builtin_table(const std::string& name, const RunConfig& cfg) {
    auto dim_suffix = [&](const std::string& prefix) {
        try {
            return std::stoi(name.substr(prefix.size()));
        } catch (const std::exception&) {
            throw UsageError("bad table name: " + name);
        }
    };
    try {
        if (name == "det") return det_modular(cfg.max_legs, cfg.max_genus);
        if (name == "terminal") return terminal_modular(cfg.max_legs, cfg.max_genus);
        if (name.rfind("end", 0) == 0) return endomorphism_modular(dim_suffix("end"), cfg.max_legs, cfg.max_genus);
        if (name == "markl-associative") return associative_markl(cfg.max_legs);
        if (name.rfind("markl-end", 0) == 0) return endomorphism_markl(dim_suffix("markl-end"), cfg.max_legs);
    } catch (const TableError& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown built-in table: " + name);
}

void report_rows(std::vector<std::vector<std::string>>& rows, const AxiomReport& r) {
    for (const auto& a : r.axioms)
        rows.push_back({r.checker, a.axiom, std::to_string(a.checked), std::to_string(a.skipped),
                        std::to_string(a.failed), a.passed() ? "pass" : "FAIL " + a.witness});
}

int cmd_axioms(const RunConfig& cfg, const std::string& file, const std::string& builtin, bool do_suspend, bool emit_only) {
    if (file.empty() == builtin.empty()) throw UsageError("give exactly one of a table file or --builtin");
    OperadTable table;
    if (!builtin.empty()) {
        table = builtin_table(builtin, cfg);
    } else {
        std::ifstream in(file);
        if (!in) throw UsageError("cannot read " + file);
        try {
            table = table_from_json(Json::parse(in));
        } catch (const Json::exception& e) {
            throw UsageError(std::string("parse error: ") + e.what());
        } catch (const TableError& e) {
            throw UsageError(e.what());
        }
    }
    if (do_suspend) {
        try {
            std::visit([](auto& t) { t = suspend(t); }, table);
        } catch (const TableError& e) {
            Json j{{"command", "axioms"}, {"suspension", "obstructed"}, {"reason", e.what()}};
            emit(cfg, j, std::string("suspension obstructed: ") + e.what() + "\n");
            return 1;
        }
    }
    if (emit_only) {
        Json j = std::visit([](const auto& t) { return to_json(t); }, table);
        emit(cfg, j, j.dump(2) + "\n");
        return 0;
    }
    Json reports = Json::array();
    std::vector<std::vector<std::string>> rows{{"checker", "axiom", "checked", "skipped", "failed", "verdict"}};
    bool ok = false;
    std::string kind;
    if (auto* m = std::get_if<ModularTable>(&table)) {
        kind = m->odd() ? "odd modular" : "modular";
        AxiomReport even, odd;
        std::thread t([&] { odd = check_odd_modular(*m); });
        even = check_modular(*m);
        t.join();
        ok = m->odd() ? odd.passed() : even.passed();
        reports.push_back(to_json(even));
        reports.push_back(to_json(odd));
        report_rows(rows, even);
        report_rows(rows, odd);
    } else {
        const auto& mk = std::get<MarklTable>(table);
        kind = mk.odd() ? "odd markl" : "markl";
        auto r = check_markl(mk);
        ok = r.passed();
        reports.push_back(to_json(r));
        report_rows(rows, r);
    }
    Json j{{"command", "axioms"}, {"table", kind}, {"passed", ok}, {"reports", reports}};
    emit(cfg, j, render_rows(rows) + (ok ? "passes the " : "fails the ") + kind + " axioms\n");
    return ok ? 0 : 1;
}

void add_bounds(CLI::App* app, RunConfig& cfg) {
    app->add_option("--flavor", cfg.flavor, "ggGrc, Tr, RTr, Whe or Per")->capture_default_str();
    app->add_option("--max-edges", cfg.max_edges, "Edge bound (Per: k-1)")->capture_default_str();
    app->add_option("--max-legs", cfg.max_legs, "Total leg bound")->capture_default_str();
    app->add_option("--max-genus", cfg.max_genus, "Per-vertex genus bound")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Free operads, quadratic presentations and Koszulity over operadic categories of graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--format", cfg.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out, "Write the report here instead of stdout");

    auto* en = app.add_subcommand("enumerate", "List canonical objects within bounds");
    add_bounds(en, cfg);
    auto* di = app.add_subcommand("dims", "Free, quotient and dual dimensions per object");
    add_bounds(di, cfg);
    di->add_option("--presentation", cfg.presentation, "Built-in presentation (default: the flavor's)");
    auto* pr = app.add_subcommand("present", "Relations, pairings and Koszul dual relations");
    pr->add_option("--flavor", cfg.flavor, "Flavor whose presentation to show")->capture_default_str();
    pr->add_option("--presentation", cfg.presentation, "Built-in presentation, e.g. prePermutad");
    auto* ko = app.add_subcommand("koszul", "Certify Koszulity object by object");
    add_bounds(ko, cfg);
    ko->add_flag("--debug-mutate-sign", cfg.mutate, "Flip one differential sign")->group("");
    auto* ax = app.add_subcommand("axioms", "Check a finite operad table");
    std::string file, builtin;
    bool do_suspend = false, emit_only = false;
    ax->add_option("table", file, "Table JSON file");
    ax->add_option("--builtin", builtin, "det, terminal, endK, markl-associative or markl-endK");
    ax->add_option("--max-legs", cfg.max_legs, "Bound for built-in tables (Markl: arity)")->capture_default_str();
    ax->add_option("--max-genus", cfg.max_genus, "Genus bound for built-in tables")->capture_default_str();
    ax->add_flag("--suspend", do_suspend, "Suspend the table before checking");
    ax->add_flag("--emit", emit_only, "Print the table instead of checking it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (*en) return cmd_enumerate(cfg);
        if (*di) return cmd_dims(cfg);
        if (*pr) return cmd_present(cfg);
        if (*ko) return cmd_koszul(cfg);
        if (*ax) return cmd_axioms(cfg, file, builtin, do_suspend, emit_only);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
