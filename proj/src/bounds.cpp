#include "tcc/bounds.hpp"

#include <algorithm>

#include "json.hpp"

#include "tcc/error.hpp"

namespace tcc {

namespace {

Vertex locate(const LabeledGraph& g, const Provenance& p) {
    const auto hits = g.find(p);
    if (hits.size() != 1)
        throw VerificationError("vertex " + p.text() + " is not present in the built graph");
    return hits.front();
}

TileTemplate tile_template(const Catalog& catalog, const TileSignature& tile) {
    Orientation orientation = Orientation::upright;
    const Picture* picture = catalog.find_token(tile.picture, &orientation);
    if (!picture) throw ValidationError("unknown picture '" + tile.picture + "'");
    return make_template(catalog, picture->id, orientation, to_string(tile.frame));
}

bool adjacent_to_any(const Graph& g, Vertex v, const std::vector<Vertex>& chosen) {
    return std::any_of(chosen.begin(), chosen.end(), [&](Vertex w) { return w == v || g.has_edge(v, w); });
}

// Options for the cycle to the right of tile i in the frames-only graph: a 3-cycle offers
// its degree-3 vertices, a 4-cycle its two diagonals.
std::vector<std::vector<Vertex>> cycle_options(const LabeledGraph& fg, const Signature& sig, int i) {
    auto v = [&](const char* local) { return locate(fg, Provenance{i, local}); };
    if (sig.tiles[i].frame == FrameKind::L) return {{v("r")}, {v("tr")}};
    return {{v("br"), v("r1")}, {v("tr"), v("r0")}};
}

// Picks one option per cycle, from cycle j down to cycle 0, keeping the selection independent.
bool select_right_to_left(const Graph& fg, const std::vector<std::vector<std::vector<Vertex>>>& options, int j,
                          std::vector<Vertex>& chosen) {
    if (j < 0) return true;
    for (const auto& option : options[j]) {
        if (std::any_of(option.begin(), option.end(), [&](Vertex v) { return adjacent_to_any(fg, v, chosen); }))
            continue;
        chosen.insert(chosen.end(), option.begin(), option.end());
        if (select_right_to_left(fg, options, j - 1, chosen)) return true;
        chosen.resize(chosen.size() - option.size());
    }
    return false;
}

}  // namespace

int gamma_upper(const SymbolCounts& c) { return c.A + c.B + c.D + c.V + 2 * c.H - c.AIV - c.VIA; }

int gamma_lower(const SymbolCounts& c) { return (2 * c.L + 2) / 3; }

int alpha_upper(const Graph& g) { return static_cast<int>(g.order() / 2); }

int alpha_lower(const SymbolCounts& c) { return std::min(c.L + c.d, 2 * c.L - 1); }

VertexSet construct_dominating_set(const LabeledGraph& g, const Signature& sig, const Catalog& catalog) {
    std::vector<Vertex> picked;
    for (int i = 0; i < static_cast<int>(sig.tiles.size()); ++i)
        for (const auto& mark : tile_template(catalog, sig.tiles[i]).marks) picked.push_back(locate(g, {i, mark}));
    VertexSet out = make_vertex_set(std::move(picked));
    const int expected = gamma_upper(counts(sig));
    if (!is_dominating(g.graph, out))
        throw VerificationError("marked vertices do not dominate the graph of " + sig.text());
    if (static_cast<int>(out.size()) != expected)
        throw VerificationError("marked dominating set of " + sig.text() + " has size " + std::to_string(out.size()) +
                                ", expected " + std::to_string(expected));
    return out;
}

LabeledGraph frames_only_graph(const Signature& sig, const Catalog& catalog) {
    Signature frames = sig;
    for (auto& t : frames.tiles) t.picture = "DD";
    return build_graph(frames, catalog);
}

VertexSet construct_independent_set(const LabeledGraph& g, const Signature& sig, const Catalog& catalog) {
    const int n = static_cast<int>(sig.tiles.size());
    const LabeledGraph fg = frames_only_graph(sig, catalog);
    std::vector<std::vector<std::vector<Vertex>>> options(n);
    for (int i = 0; i < n; ++i) options[i] = cycle_options(fg, sig, i);

    const bool all_double = std::all_of(sig.tiles.begin(), sig.tiles.end(),
                                        [](const TileSignature& t) { return t.frame == FrameKind::dL; });
    if (all_double) {
        // One 4-cycle gives a single vertex; every other 4-cycle gives a diagonal.
        options[n - 1].clear();
        for (const char* local : {"br", "tr", "r0", "r1"}) options[n - 1].push_back({locate(fg, Provenance{n - 1, local})});
    }
    std::vector<Vertex> chosen;
    const bool ok = select_right_to_left(fg.graph, options, n - 1, chosen);
    if (!ok) throw VerificationError("no right-to-left corner selection found for " + sig.text());

    std::vector<Vertex> mapped;
    for (Vertex v : chosen) mapped.push_back(locate(g, fg.labels[v].front()));
    VertexSet out = make_vertex_set(std::move(mapped));
    const int expected = alpha_lower(counts(sig));
    if (!is_independent(g.graph, out))
        throw VerificationError("selected frame corners are not independent in the graph of " + sig.text());
    if (static_cast<int>(out.size()) != expected)
        throw VerificationError("corner selection of " + sig.text() + " has size " + std::to_string(out.size()) +
                                ", expected " + std::to_string(expected));
    return out;
}

bool BoundsReport::budget_exceeded() const {
    return (gamma_exact && gamma_exact->status == SolveStatus::budget_exceeded) ||
           (alpha_exact && alpha_exact->status == SolveStatus::budget_exceeded);
}

std::string BoundsReport::to_json() const {
    nlohmann::ordered_json j;
    j["signature"] = signature;
    j["vertices"] = vertex_count;
    j["edges"] = edge_count;
    j["counts"] = {{"A", counts.A}, {"B", counts.B},     {"D", counts.D}, {"H", counts.H},
                   {"I", counts.I}, {"V", counts.V},     {"L", counts.L}, {"d", counts.d},
                   {"AIV", counts.AIV}, {"VIA", counts.VIA}};
    auto side = [](int lower, int upper, const std::optional<SolveResult>& exact,
                   const std::vector<std::string>& constructed) {
        nlohmann::ordered_json s;
        s["lower"] = lower;
        s["upper"] = upper;
        if (exact) {
            s["exact"] = exact->value;
            s["status"] = to_string(exact->status);
            s["nodes"] = exact->nodes_explored;
            s["witness"] = exact->witness;
        }
        s["constructed"] = constructed;
        return s;
    };
    j["gamma"] = side(gamma_lower, gamma_upper, gamma_exact, dom_witness_names);
    j["alpha"] = side(alpha_lower, alpha_upper, alpha_exact, ind_witness_names);
    j["checks"] = {{"gamma_sandwich", gamma_sandwich},
                   {"alpha_sandwich", alpha_sandwich},
                   {"dom_witness_ok", dom_witness_ok},
                   {"ind_witness_ok", ind_witness_ok}};
    if (!failures.empty()) j["failures"] = failures;
    return j.dump();
}

BoundsReport bounds_report(const Signature& sig, const BoundsOptions& options, const Catalog& catalog) {
    const LabeledGraph g = build_graph(sig, catalog);
    BoundsReport r;
    r.signature = sig.text();
    r.counts = counts(sig);
    r.vertex_count = g.graph.order();
    r.edge_count = g.graph.size();
    r.gamma_lower = gamma_lower(r.counts);
    r.gamma_upper = gamma_upper(r.counts);
    r.alpha_lower = alpha_lower(r.counts);
    r.alpha_upper = alpha_upper(g.graph);

    try {
        r.dom_witness = construct_dominating_set(g, sig, catalog);
        r.dom_witness_ok = true;
    } catch (const VerificationError& e) {
        r.failures.emplace_back(e.what());
    }
    try {
        r.ind_witness = construct_independent_set(g, sig, catalog);
        r.ind_witness_ok = true;
    } catch (const VerificationError& e) {
        r.failures.emplace_back(e.what());
    }
    for (Vertex v : r.dom_witness) r.dom_witness_names.push_back(g.name(v));
    for (Vertex v : r.ind_witness) r.ind_witness_names.push_back(g.name(v));

    r.gamma_sandwich = r.gamma_lower <= r.gamma_upper;
    r.alpha_sandwich = r.alpha_lower <= r.alpha_upper;
    if (options.compute_exact) {
        r.gamma_exact = gamma_exact(g.graph, options.budget);
        r.alpha_exact = alpha_exact(g.graph, options.budget);
        // A budget-limited value is only a bound; the sandwich is judged on optimal values.
        if (r.gamma_exact->status == SolveStatus::optimal)
            r.gamma_sandwich = r.gamma_lower <= r.gamma_exact->value && r.gamma_exact->value <= r.gamma_upper;
        if (r.alpha_exact->status == SolveStatus::optimal)
            r.alpha_sandwich = r.alpha_lower <= r.alpha_exact->value && r.alpha_exact->value <= r.alpha_upper;
    }
    return r;
}

}  // namespace tcc
