#include "turanlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "turanlab/constructions.hpp"
#include "turanlab/freeness.hpp"
#include "turanlab/report.hpp"
#include "turanlab/search.hpp"
#include "turanlab/spectral.hpp"
#include "turanlab/verify.hpp"

namespace turanlab {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GraphSource {
    std::string label;
    std::optional<ConstructionParams> construction;
    std::optional<Graph> graph;  // set whenever the graph fits in 64 vertices
};

GraphSource resolve_graph(const std::string& text) {
    GraphSource src;
    src.label = text;
    const std::string cprefix = "construction:";
    if (text.rfind(cprefix, 0) == 0) {
        src.construction = ConstructionParams::parse(text.substr(cprefix.size()));
        if (src.construction->vertex_count() <= kMaxVertices) src.graph = build(*src.construction);
        return src;
    }
    const std::string gprefix = "g6:";
    src.graph = parse_graph6(text.rfind(gprefix, 0) == 0 ? text.substr(gprefix.size()) : text);
    return src;
}

FormulaParams parse_params(const std::string& text) {
    FormulaParams params;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("parameter '" + item + "' is not key=value");
        params[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return params;
}

std::int64_t param_int(const FormulaParams& params, const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end()) throw UsageError("missing parameter '" + key + "'");
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(it->second, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != it->second.size()) throw UsageError("parameter '" + key + "' is not an integer");
    return v;
}

// "1..7", "6,7" or a mix such as "3,5..7".
std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto dots = item.find("..");
        try {
            if (dots == std::string::npos) {
                out.push_back(std::stoi(item));
            } else {
                const int lo = std::stoi(item.substr(0, dots));
                const int hi = std::stoi(item.substr(dots + 2));
                for (int v = lo; v <= hi; ++v) out.push_back(v);
            }
        } catch (const std::exception&) {
            throw UsageError("bad integer list '" + text + "'");
        }
    }
    return out;
}

std::string fixed(double v, int digits = 10) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

void emit(std::ostream& out, bool json, const Json& doc, const std::vector<std::pair<std::string, std::string>>& rows) {
    if (json) {
        out << doc.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : rows) out << key << "\t" << value << "\n";
}

// ---------------------------------------------------------------------------

int cmd_count(const std::string& target_text, const std::string& graph_text, bool json, std::ostream& out) {
    const Pattern target = parse_pattern(target_text);
    const GraphSource src = resolve_graph(graph_text);
    const BigInt count = src.construction ? count_in_construction(target, *src.construction)
                                          : BigInt(count_motif(target, *src.graph));
    if (json) {
        Json doc;
        doc["schema_version"] = kReportSchemaVersion;
        doc["target"] = target.name();
        doc["graph"] = src.label;
        doc["count"] = count.str();
        out << doc.dump(2) << "\n";
    } else {
        out << count.str() << "\n";
    }
    return kExitOk;
}

struct FreeVerdict {
    bool free = false;
    std::string certificate;  // searched | structural
    std::string measure;      // "longest path", "circumference" or empty
    std::optional<int> value;
    bool lower_bound_only = false;
};

FreeVerdict decide_free(const Forbidden& f, const GraphSource& src) {
    FreeVerdict v;
    const bool structural = src.construction && src.construction->vertex_count() > 20;
    v.certificate = structural ? "structural" : "searched";
    const bool path = f.kind == Forbidden::Kind::single_pattern && f.pattern.kind == MotifKind::path;
    if (f.kind == Forbidden::Kind::long_cycles || path) {
        Graph g(0);
        if (structural) {
            const Blueprint reduced = blueprint(*src.construction).twin_reduced();
            if (reduced.vertex_count() > kMaxVertices) throw UsageError("construction too large for a structural certificate");
            g = reduced.materialize();
        } else {
            g = *src.graph;
        }
        const int k = f.kind == Forbidden::Kind::long_cycles ? f.k : f.pattern.size;
        // with the cutoff a value below k is exact and k means "at least k"
        const int value = f.kind == Forbidden::Kind::long_cycles ? circumference(g, k) : longest_path_edges(g, std::max(k, 1));
        v.measure = f.kind == Forbidden::Kind::long_cycles ? "circumference" : "longest path";
        v.value = value;
        v.free = f.kind == Forbidden::Kind::long_cycles ? value < k : (k == 0 ? g.vertex_count() == 0 : value < k);
        v.lower_bound_only = value >= std::max(k, 1);
        return v;
    }
    if (structural) {
        v.free = blueprint(*src.construction).count_copies(f.pattern) == 0;
    } else {
        v.free = is_free(*src.graph, f);
    }
    return v;
}

int cmd_free(const std::string& forbid_text, const std::string& graph_text, bool json, std::ostream& out) {
    const Forbidden f = Forbidden::parse(forbid_text);
    const GraphSource src = resolve_graph(graph_text);
    const FreeVerdict v = decide_free(f, src);
    if (json) {
        Json doc;
        doc["schema_version"] = kReportSchemaVersion;
        doc["forbidden"] = f.name();
        doc["graph"] = src.label;
        doc["free"] = v.free;
        doc["certificate"] = v.certificate;
        if (v.value) {
            doc["measure"] = v.measure;
            doc[v.lower_bound_only ? "at_least" : "value"] = *v.value;
        }
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    out << (v.free ? "free" : "not free") << " (" << v.certificate;
    if (v.value) out << ", " << v.measure << (v.lower_bound_only ? " >= " : " = ") << *v.value;
    out << ")\n";
    return kExitOk;
}

int cmd_construct(const std::string& family, const std::string& params_text, bool json, std::ostream& out) {
    const FormulaParams params = parse_params(params_text);
    ConstructionParams c;
    if (family == "gnka") {
        const std::int64_t k = param_int(params, "k");
        c = ConstructionParams::gnka(param_int(params, "n"), k, params.count("a") ? param_int(params, "a") : half_clique(k));
    } else if (family == "srab") {
        c = ConstructionParams::srab(param_int(params, "r"), param_int(params, "a"), param_int(params, "b"));
    } else if (family == "hnk") {
        c = ConstructionParams::hnk(param_int(params, "n"), param_int(params, "k"));
    } else {
        throw UsageError("unknown family '" + family + "' (gnka, srab, hnk)");
    }
    const Blueprint bp = blueprint(c);
    const BigInt edges = bp.count_copies(make_path(1));
    std::vector<std::pair<std::string, std::string>> rows;
    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["construction"] = c.spec();
    doc["vertices"] = c.vertex_count();
    doc["edges"] = edges.str();
    rows.emplace_back("construction", c.spec());
    rows.emplace_back("vertices", std::to_string(c.vertex_count()));
    rows.emplace_back("edges", edges.str());
    Json classes = Json::array();
    std::string class_text;
    for (const auto& vc : bp.classes()) {
        classes.push_back({{"label", vc.label}, {"size", vc.size}, {"clique", vc.clique}});
        if (!class_text.empty()) class_text += ",";
        class_text += vc.label + ":" + std::to_string(vc.size) + ":" + (vc.clique ? "clique" : "independent");
    }
    doc["classes"] = classes;
    rows.emplace_back("classes", class_text);
    if (c.family == Family::hnk) {
        const HnkChoice h = choose_hnk(c.n, c.k);
        doc["a"] = h.a;
        doc["b"] = h.b;
        doc["paths"] = h.paths.str();
        rows.emplace_back("a", std::to_string(h.a));
        rows.emplace_back("b", std::to_string(h.b));
        rows.emplace_back("paths", h.paths.str());
    }
    if (c.vertex_count() <= kMaxVertices) {
        const std::string g6 = to_graph6(bp.materialize());
        doc["graph6"] = g6;
        rows.emplace_back("graph6", g6);
    } else {
        doc["graph6"] = nullptr;
        rows.emplace_back("graph6", "-");
    }
    emit(out, json, doc, rows);
    return kExitOk;
}

int cmd_formula(const std::string& id_text, const std::string& params_text, bool json, std::ostream& out) {
    const auto id = parse_formula_id(id_text);
    if (!id) throw UsageError("unknown formula id '" + id_text + "'");
    const FormulaResult r = evaluate_formula(*id, parse_params(params_text));
    if (json) {
        Json doc;
        doc["schema_version"] = kReportSchemaVersion;
        doc["id"] = to_string(r.id);
        Json params = Json::object();
        for (const auto& [key, value] : r.params) params[key] = value;
        doc["params"] = params;
        doc["value"] = r.value_string();
        doc["integer"] = r.is_integer();
        if (r.exponent) doc["exponent"] = *r.exponent;
        if (r.direct_count) doc["direct_count"] = true;
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    out << r.value_string() << "\n";
    if (r.exponent) out << "exponent\t" << *r.exponent << "\n";
    if (r.direct_count) out << "direct_count\ttrue\n";
    return kExitOk;
}

int cmd_spectral(const std::string& graph_text, std::optional<int> chain, std::optional<int> k_opt, bool json,
                 std::ostream& out) {
    const GraphSource src = resolve_graph(graph_text);
    if (!src.graph) throw UsageError("spectral needs a graph with at most 64 vertices");
    const Graph& g = *src.graph;
    const double radius = spectral_radius(g);
    std::int64_t k = 0;
    if (k_opt) {
        k = *k_opt;
    } else if (src.construction && src.construction->family != Family::srab) {
        k = src.construction->k;
    } else {
        k = longest_path_edges(g) + 1;  // smallest k with g P_k-free
    }
    std::vector<std::pair<std::string, std::string>> rows;
    Json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["graph"] = src.label;
    doc["radius"] = fixed(radius);
    rows.emplace_back("radius", fixed(radius));
    if (g.vertex_count() >= 1 && k >= 2) {
        const double bound = nikiforov_bound(g.vertex_count(), k);
        doc["k"] = k;
        doc["bound"] = fixed(bound);
        doc["within_bound"] = radius <= bound;
        rows.emplace_back("k", std::to_string(k));
        rows.emplace_back("bound", fixed(bound));
        rows.emplace_back("within_bound", radius <= bound ? "true" : "false");
    }
    int code = kExitOk;
    if (chain) {
        const SpectralChainReport r = check_spectral_path_chain(g, *chain);
        doc["chain"] = {{"l", r.l},
                        {"twice_paths", r.twice_paths.str()},
                        {"walks", r.walks.str()},
                        {"walk_bound", fixed(r.walk_bound, 6)},
                        {"pass", r.pass()}};
        rows.emplace_back("chain_l", std::to_string(r.l));
        rows.emplace_back("twice_paths", r.twice_paths.str());
        rows.emplace_back("walks", r.walks.str());
        rows.emplace_back("walk_bound", fixed(r.walk_bound, 6));
        rows.emplace_back("chain", r.pass() ? "pass" : "fail");
        if (!r.pass()) code = kExitCheckFailed;
    }
    emit(out, json, doc, rows);
    return code;
}

int cmd_search(int n, const std::string& target_text, const std::string& forbid_text, bool connected,
               const std::string& stream, bool allow_n8, int threads, bool json, std::ostream& out) {
    const Pattern target = parse_pattern(target_text);
    const Forbidden f = Forbidden::parse(forbid_text);
    ExtremalRecord rec;
    if (!stream.empty()) {
        if (stream == "-") {
            rec = stream_ex(std::cin, target, f, connected);
        } else {
            std::ifstream in(stream);
            if (!in) throw UsageError("cannot open stream '" + stream + "'");
            rec = stream_ex(in, target, f, connected);
        }
        if (n != 0 && n != rec.n) throw UsageError("stream has n = " + std::to_string(rec.n));
    } else {
        if (n == 0) throw UsageError("search needs --n or --stream");
        SearchOptions o;
        o.connected_only = connected;
        o.threads = threads;
        o.allow_n8 = allow_n8;
        rec = brute_force_ex(n, target, f, o);
    }
    out << (json ? to_json(rec) : to_tsv(rec));
    return kExitOk;
}

int cmd_verify(const std::string& suite, const SuiteGrid& grid, bool json, std::ostream& out) {
    std::vector<std::string> ids;
    if (suite == "all") {
        ids = suite_ids();
    } else {
        ids.push_back(suite);
    }
    bool ok = true;
    for (const auto& id : ids) {
        const SuiteReport rep = verify_suite(id, grid);
        out << (json ? to_json(rep) : to_tsv(rep));
        ok = ok && rep.passed();
    }
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Turan number laboratory", "turanlab"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    int threads = 0;
    bool json = false;
    app.add_option("--threads", threads, "Worker threads (0 = available parallelism)")->check(CLI::NonNegativeNumber);
    app.add_flag("--json", json, "Emit JSON instead of TSV");

    std::string target;
    std::string graph;
    std::string forbid;

    auto* count = app.add_subcommand("count", "Count copies of a motif");
    count->add_option("--target", target, "path:l|cycle:l|star:r|clique:r|m1:l|m2:l|m3:l|g6:<str>")->required();
    count->add_option("--graph", graph, "graph6 string, g6:<str> or construction:<family>:<params>")->required();

    auto* free_cmd = app.add_subcommand("free", "Decide freeness of a forbidden motif");
    free_cmd->add_option("--forbid", forbid, "path:k|cycles-ge:k|g6:<str>")->required();
    free_cmd->add_option("--graph", graph, "graph6 string, g6:<str> or construction:<family>:<params>")->required();

    std::string family;
    std::string params;
    auto* construct = app.add_subcommand("construct", "Build a construction");
    construct->add_option("--family", family, "gnka|srab|hnk")->required();
    construct->add_option("--params", params, "e.g. n=12,k=5,a=2")->required();

    std::string formula_id;
    auto* formula = app.add_subcommand("formula", "Evaluate a closed form exactly");
    formula->add_option("--id", formula_id, "formula id")->required();
    formula->add_option("--params", params, "e.g. n=10,k=5");

    std::optional<int> chain;
    std::optional<int> spectral_k;
    auto* spectral = app.add_subcommand("spectral", "Spectral radius, bound and walk chain");
    spectral->add_option("--graph", graph, "graph source")->required();
    spectral->add_option("--chain", chain, "check the chain for paths with 2l edges")->check(CLI::PositiveNumber);
    spectral->add_option("--k", spectral_k, "k for the spectral bound (default: smallest k with the graph P_k-free)");

    int n = 0;
    bool connected = false;
    bool allow_n8 = false;
    std::string stream;
    auto* search = app.add_subcommand("search", "Exact extremal search");
    search->add_option("--n", n, "vertex count");
    search->add_option("--target", target, "target motif")->required();
    search->add_option("--forbid", forbid, "forbidden motif")->required();
    search->add_flag("--connected", connected, "only connected graphs");
    search->add_option("--stream", stream, "graph6 file ('-' for stdin) instead of enumeration");
    search->add_flag("--allow-n8", allow_n8, "permit n = 8");

    std::string suite;
    std::string grid_n;
    std::string grid_k;
    std::string grid_r;
    std::string grid_l;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "suite id or 'all'")->required();
    verify->add_option("--n", grid_n, "n values, e.g. 1..7 or 6,7");
    verify->add_option("--k", grid_k, "k values");
    verify->add_option("--r", grid_r, "r values");
    verify->add_option("--l", grid_l, "l values");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*count) return cmd_count(target, graph, json, out);
        if (*free_cmd) return cmd_free(forbid, graph, json, out);
        if (*construct) return cmd_construct(family, params, json, out);
        if (*formula) return cmd_formula(formula_id, params, json, out);
        if (*spectral) return cmd_spectral(graph, chain, spectral_k, json, out);
        if (*search) return cmd_search(n, target, forbid, connected, stream, allow_n8, threads, json, out);
        if (*verify) {
            SuiteGrid grid;
            grid.threads = threads;
            if (!grid_n.empty()) grid.n = parse_int_list(grid_n);
            if (!grid_k.empty()) grid.k = parse_int_list(grid_k);
            if (!grid_r.empty()) grid.r = parse_int_list(grid_r);
            if (!grid_l.empty()) grid.l = parse_int_list(grid_l);
            return cmd_verify(suite, grid, json, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace turanlab
