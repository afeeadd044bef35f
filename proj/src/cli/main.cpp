#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tcc/bounds.hpp"
#include "tcc/criticality.hpp"
#include "tcc/error.hpp"
#include "tcc/families.hpp"
#include "tcc/sweep.hpp"
#include "tcc/tilealg.hpp"

namespace {

using namespace tcc;
using nlohmann::ordered_json;

enum Exit { ok = 0, input = 1, verification = 2, budget = 3, io = 4 };

constexpr const char* kCatalogEnv = "TCC_CATALOG";

struct Globals {
    std::string catalog_path;
    std::uint64_t seed = 0;
    std::uint64_t budget_nodes = Budget{}.max_nodes;
    double budget_seconds = Budget{}.max_seconds;
    std::size_t max_vertices = 60;

    std::unique_ptr<Catalog> loaded;
    const Catalog& catalog() {
        if (catalog_path.empty()) return Catalog::bundled();
        if (!loaded) loaded = std::make_unique<Catalog>(Catalog::load_file(catalog_path));
        return *loaded;
    }
    Budget budget() const { return Budget{budget_nodes, budget_seconds}; }
};

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw IoError("cannot write " + path);
}

ordered_json counts_json(const SymbolCounts& c) {
    return {{"A", c.A}, {"B", c.B}, {"D", c.D},     {"H", c.H},     {"I", c.I},
            {"V", c.V}, {"L", c.L}, {"d", c.d}, {"AIV", c.AIV}, {"VIA", c.VIA}};
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read graph file " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("graph file is not JSON: ") + e.what(), e.byte);
    }
    try {
        const auto& vs = j.at("vertices");
        const std::size_t n = vs.is_number_integer() ? vs.get<std::size_t>() : vs.size();
        Graph g(n);
        for (const auto& e : j.at("edges")) {
            const Vertex u = e.at(0).get<Vertex>(), v = e.at(1).get<Vertex>();
            if (!g.has_vertex(u) || !g.has_vertex(v) || u == v)
                throw ValidationError("graph file edge [" + std::to_string(u) + "," + std::to_string(v) + "] is invalid");
            g.add_edge(u, v);
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("graph file needs 'vertices' and 'edges': ") + e.what());
    }
}

int cmd_parse(Globals& g, const std::string& text) {
    const Signature sig = parse_signature(text, g.catalog());
    ordered_json j;
    j["signature"] = sig.text();
    j["tiles"] = sig.tiles.size();
    j["counts"] = counts_json(counts(sig));
    std::cout << j.dump() << "\n";
    return Exit::ok;
}

int cmd_build(Globals& g, const std::string& text, const std::string& format, const std::string& out) {
    const LabeledGraph graph = build_graph(parse_signature(text, g.catalog()), g.catalog());
    write_output(format == "dot" ? to_dot(graph) : to_json(graph) + "\n", out);
    return Exit::ok;
}

int cmd_bounds(Globals& g, const std::string& text, bool exact) {
    const Signature sig = parse_signature(text, g.catalog());
    BoundsOptions options;
    options.compute_exact = exact;
    options.budget = g.budget();
    const BoundsReport r = bounds_report(sig, options, g.catalog());
    std::cout << r.to_json() << "\n";
    if (!r.checks_ok()) return Exit::verification;
    if (r.budget_exceeded()) return Exit::budget;
    return Exit::ok;
}

int cmd_verify_critical(Globals& g, const std::string& text, const std::string& graph_file) {
    ordered_json j;
    CriticalityReport r;
    if (!graph_file.empty()) {
        const Graph graph = read_graph_file(graph_file);
        if (graph.order() > g.max_vertices)
            throw GuardError("graph has " + std::to_string(graph.order()) + " vertices, limit is " +
                             std::to_string(g.max_vertices));
        j["graph_file"] = graph_file;
        j["vertices"] = graph.order();
        j["edges"] = graph.size();
        r = verify_2cc(graph);
    } else {
        const Signature sig = parse_signature(text, g.catalog());
        const LabeledMultigraph multi = build_multigraph(sig, g.catalog());
        const std::size_t order = multi.graph.simplified().order();
        if (order > g.max_vertices)
            throw GuardError("graph of " + sig.text() + " has " + std::to_string(order) + " vertices, limit is " +
                             std::to_string(g.max_vertices));
        j["signature"] = sig.text();
        j["vertices"] = order;
        j["edges"] = multi.graph.simplified().size();
        r = verify_2cc(multi.graph);
    }
    const ordered_json report = ordered_json::parse(to_json(r));
    for (const auto& [key, value] : report.items()) j[key] = value;
    std::cout << j.dump() << "\n";
    return r.is_2cc && r.three_connected ? Exit::ok : Exit::verification;
}

int cmd_family(Globals& g, const std::string& spec) {
    const FamilyInstance f = family_instance(spec, g.catalog());
    const LabeledGraph graph = build_graph(f.signature, g.catalog());
    const SymbolCounts c = counts(f.signature);
    ordered_json j;
    j["family"] = f.spec();
    j["signature"] = f.signature.text();
    j["vertices"] = graph.graph.order();
    bool match = true, exhausted = false;
    ordered_json expected, computed;
    int solved = 0;
    if (f.expected.gamma) {
        const SolveResult r = gamma_exact(graph.graph, g.budget());
        exhausted |= r.status != SolveStatus::optimal;
        expected["gamma"] = *f.expected.gamma;
        computed["gamma"] = r.value;
        match &= r.value == *f.expected.gamma;
        solved = r.value;
    }
    if (f.expected.alpha) {
        const SolveResult r = alpha_exact(graph.graph, g.budget());
        exhausted |= r.status != SolveStatus::optimal;
        expected["alpha"] = *f.expected.alpha;
        computed["alpha"] = r.value;
        match &= r.value == *f.expected.alpha;
        solved = r.value;
    }
    if (f.expected.vertex_count) {
        expected["vertices"] = *f.expected.vertex_count;
        match &= static_cast<int>(graph.graph.order()) == *f.expected.vertex_count;
    }
    const std::string& bound = f.expected.sharp_bound;
    const int bound_value = bound == "gamma_upper"   ? gamma_upper(c)
                            : bound == "gamma_lower" ? gamma_lower(c)
                            : bound == "alpha_upper" ? alpha_upper(graph.graph)
                                                     : alpha_lower(c);
    match &= bound_value == solved;
    j["expected"] = expected;
    j["computed"] = computed;
    j["sharp"] = {{"bound", bound}, {"value", bound_value}, {"attained", bound_value == solved}};
    j["match"] = match;
    std::cout << j.dump() << "\n";
    if (exhausted) return Exit::budget;
    return match ? Exit::ok : Exit::verification;
}

struct SweepArgs {
    std::size_t tiles = 3;
    std::size_t samples = 10;
    bool check_critical = false;
    std::string format = "jsonl";
    std::string output;
    std::size_t resume = 0;
    unsigned threads = 0;
    std::vector<std::string> allow;
};

int cmd_sweep(Globals& g, const SweepArgs& a) {
    SweepOptions o;
    o.tiles = a.tiles;
    o.samples = a.samples;
    o.seed = g.seed;
    o.start = a.resume;
    o.check_critical = a.check_critical;
    o.max_vertices = g.max_vertices;
    o.budget = g.budget();
    o.threads = a.threads;
    for (const auto& t : a.allow) {
        const Signature s = parse_tiles(t, g.catalog());
        o.allowed.insert(o.allowed.end(), s.tiles.begin(), s.tiles.end());
    }
    if (o.tiles < 3 || o.tiles % 2 == 0) throw ValidationError("--tiles must be odd and at least 3");

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!a.output.empty() && a.output != "-") {
        file.open(a.output, std::ios::binary | (a.resume ? std::ios::app : std::ios::trunc));
        if (!file) throw IoError("cannot write " + a.output);
        out = &file;
    }
    const bool csv = a.format == "csv";
    if (csv && a.resume == 0) *out << SweepRecord::csv_header() << "\n";
    const SweepSummary s = run_sweep(
        o, [&](const SweepRecord& r) { *out << (csv ? r.to_csv() : r.to_jsonl()) << "\n" << std::flush; }, g.catalog());
    if (!*out) throw IoError("write failed for " + (a.output.empty() ? std::string("stdout") : a.output));
    std::cerr << "sweep: " << s.records << " records, " << (s.records - s.failed) << " passed, " << s.failed
              << " failed, " << s.budget_exceeded << " over budget";
    if (a.check_critical) std::cerr << ", " << s.critical_skipped << " criticality skipped";
    std::cerr << "\n";
    if (s.failed) return Exit::verification;
    if (s.budget_exceeded) return Exit::budget;
    return Exit::ok;
}

int cmd_export_catalog(Globals& g, const std::string& out) {
    write_output(g.catalog().to_text(), out);
    return Exit::ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Build tile graphs, evaluate domination and independence bounds, verify crossing-criticality."};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    if (const char* env = std::getenv(kCatalogEnv)) g.catalog_path = env;
    app.add_option("--catalog", g.catalog_path, std::string("Catalog file (default: bundled, or $") + kCatalogEnv + ")");
    app.add_option("--seed", g.seed, "Random seed");
    app.add_option("--budget-nodes", g.budget_nodes, "Search node budget per exact solve");
    app.add_option("--budget-seconds", g.budget_seconds, "Time budget per exact solve");
    app.add_option("--max-vertices", g.max_vertices, "Size guard for criticality checks")->capture_default_str();

    std::string signature, format = "json", out, graph_file, spec;
    bool exact = false;
    SweepArgs sweep;

    auto* parse = app.add_subcommand("parse", "Canonical form and symbol counts of a signature");
    parse->add_option("signature", signature)->required();

    auto* build = app.add_subcommand("build", "Export the graph of a signature");
    build->add_option("signature", signature)->required();
    build->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
    build->add_option("--out", out, "Output file (default stdout)");

    auto* bounds = app.add_subcommand("bounds", "Bounds, constructed witnesses and optional exact values");
    bounds->add_option("signature", signature)->required();
    bounds->add_flag("--exact", exact, "Solve gamma and alpha exactly");

    auto* critical = app.add_subcommand("verify-critical", "Check 3-connectivity and 2-crossing-criticality");
    critical->add_option("signature", signature);
    critical->add_option("--graph-file", graph_file, "JSON graph {vertices, edges} instead of a signature");

    auto* family = app.add_subcommand("family", "Solve a family instance and compare with its stated values");
    family->add_option("spec", spec, "e.g. G1:n=3 or G5:tiles=DDdL,DDL,DDdL")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "Random signatures with bound and witness checks");
    sweep_cmd->add_option("--tiles", sweep.tiles, "Tiles per signature")->capture_default_str();
    sweep_cmd->add_option("--samples", sweep.samples, "Number of signatures")->capture_default_str();
    sweep_cmd->add_flag("--check-critical", sweep.check_critical, "Also verify criticality");
    sweep_cmd->add_option("--out", sweep.format, "Record format")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();
    sweep_cmd->add_option("--output", sweep.output, "Output file (default stdout)");
    sweep_cmd->add_option("--resume", sweep.resume, "First sample index; appends to --output");
    sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0: all cores)");
    sweep_cmd->add_option("--allow", sweep.allow, "Restrict to these tiles, e.g. DDL,AIVL")->delimiter(',');

    auto* export_catalog = app.add_subcommand("export-catalog", "Print the catalog document");
    export_catalog->add_option("--out", out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::input;
    }

    try {
        if (*parse) return cmd_parse(g, signature);
        if (*build) return cmd_build(g, signature, format, out);
        if (*bounds) return cmd_bounds(g, signature, exact);
        if (*critical) {
            if (signature.empty() == graph_file.empty())
                throw ValidationError("verify-critical takes either a signature or --graph-file");
            return cmd_verify_critical(g, signature, graph_file);
        }
        if (*family) return cmd_family(g, spec);
        if (*sweep_cmd) return cmd_sweep(g, sweep);
        if (*export_catalog) return cmd_export_catalog(g, out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::input;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::input;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return Exit::verification;
    } catch (const GuardError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return Exit::budget;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::io;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::input;
    }
    return Exit::input;
}
