#include "tcc/tilealg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "json.hpp"

#include "tcc/error.hpp"

namespace tcc {

namespace {

// Union-find over vertex ids; the root is always the smallest id of its class.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    Vertex find(Vertex v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    void unite(Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<Vertex> parent_;
};

// Quotient of a labeled multigraph by the classes of `uf`, keeping vertex order of the
// class representatives. `map` receives the new id of every old vertex.
LabeledMultigraph quotient(const LabeledMultigraph& g, UnionFind& uf, std::vector<Vertex>& map) {
    const std::size_t n = g.graph.order();
    map.assign(n, -1);
    LabeledMultigraph out;
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
        if (uf.find(v) == v) {
            map[v] = out.graph.add_vertex();
            out.labels.emplace_back();
        }
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
        map[v] = map[uf.find(v)];
        auto& history = out.labels[map[v]];
        history.insert(history.end(), g.labels[v].begin(), g.labels[v].end());
    }
    for (auto& history : out.labels) std::sort(history.begin(), history.end());
    for (const auto& [e, m] : g.graph.edges()) out.graph.add_edge(map[e.u], map[e.v], m);
    return out;
}

void check_walls(const Tile& a, const Tile& b) {
    if (a.right_wall.size() != b.left_wall.size())
        throw ValidationError("incompatible tiles: right wall of size " + std::to_string(a.right_wall.size()) +
                              " meets left wall of size " + std::to_string(b.left_wall.size()));
}

std::vector<std::map<Vertex, int>> adjacency(const Multigraph& g) {
    std::vector<std::map<Vertex, int>> adj(g.order());
    for (const auto& [e, m] : g.edges()) {
        adj[e.u][e.v] += m;
        adj[e.v][e.u] += m;
    }
    return adj;
}

int weighted_degree(const std::map<Vertex, int>& nb) {
    int d = 0;
    for (const auto& [w, m] : nb) d += m;
    return d;
}

LabeledMultigraph compact(const std::vector<std::map<Vertex, int>>& adj, const std::vector<char>& alive,
                          const std::vector<MergeHistory>& labels) {
    std::vector<Vertex> map(adj.size(), -1);
    LabeledMultigraph out;
    for (std::size_t v = 0; v < adj.size(); ++v)
        if (alive[v]) {
            map[v] = out.graph.add_vertex();
            out.labels.push_back(labels[v]);
        }
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if (!alive[v]) continue;
        for (const auto& [w, m] : adj[v])
            if (static_cast<Vertex>(v) < w && alive[w]) out.graph.add_edge(map[v], map[w], m);
    }
    return out;
}

}  // namespace

std::string LabeledGraph::name(Vertex v) const { return labels.at(v).front().text(); }

std::string LabeledGraph::full_name(Vertex v) const {
    std::string out;
    for (const auto& p : labels.at(v)) out += (out.empty() ? "" : "=") + p.text();
    return out;
}

std::vector<Vertex> LabeledGraph::find(const Provenance& p) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < static_cast<Vertex>(labels.size()); ++v)
        if (std::binary_search(labels[v].begin(), labels[v].end(), p)) out.push_back(v);
    return out;
}

Tile instantiate(const TileTemplate& tmpl, int index) {
    Tile t;
    t.body.graph = tmpl.multigraph();
    for (const auto& v : tmpl.vertices) t.body.labels.push_back({Provenance{index, v}});
    const WallPair walls = tmpl.walls();
    t.left_wall = walls.left;
    t.right_wall = walls.right;
    return t;
}

Tile transform(const Tile& tile, TransformMode mode) {
    Tile t = tile;
    switch (mode) {
        case TransformMode::right_invert: std::reverse(t.right_wall.begin(), t.right_wall.end()); break;
        case TransformMode::left_invert: std::reverse(t.left_wall.begin(), t.left_wall.end()); break;
        case TransformMode::both_invert:
            std::reverse(t.left_wall.begin(), t.left_wall.end());
            std::reverse(t.right_wall.begin(), t.right_wall.end());
            break;
        case TransformMode::reverse: std::swap(t.left_wall, t.right_wall); break;
    }
    return t;
}

Tile join(const Tile& a, const Tile& b) {
    check_walls(a, b);
    const auto na = static_cast<Vertex>(a.body.graph.order());
    LabeledMultigraph both;
    both.graph = Multigraph(a.body.graph.order() + b.body.graph.order());
    both.labels = a.body.labels;
    both.labels.insert(both.labels.end(), b.body.labels.begin(), b.body.labels.end());
    for (const auto& [e, m] : a.body.graph.edges()) both.graph.add_edge(e.u, e.v, m);
    for (const auto& [e, m] : b.body.graph.edges()) both.graph.add_edge(e.u + na, e.v + na, m);

    UnionFind uf(both.graph.order());
    for (std::size_t i = 0; i < a.right_wall.size(); ++i) uf.unite(a.right_wall[i], b.left_wall[i] + na);
    std::vector<Vertex> map;
    Tile out;
    out.body = quotient(both, uf, map);
    for (Vertex v : a.left_wall) out.left_wall.push_back(map[v]);
    for (Vertex v : b.right_wall) out.right_wall.push_back(map[v + na]);
    return out;
}

LabeledMultigraph cyclize(const Tile& tile) {
    check_walls(tile, tile);
    UnionFind uf(tile.body.graph.order());
    for (std::size_t i = 0; i < tile.left_wall.size(); ++i) uf.unite(tile.left_wall[i], tile.right_wall[i]);
    std::vector<Vertex> map;
    return quotient(tile.body, uf, map);
}

LabeledMultigraph suppress_degree2(const LabeledMultigraph& g) {
    auto adj = adjacency(g.graph);
    std::vector<char> alive(adj.size(), 1);
    std::vector<Vertex> work(adj.size());
    std::iota(work.begin(), work.end(), 0);
    while (!work.empty()) {
        const Vertex x = work.back();
        work.pop_back();
        if (!alive[x] || weighted_degree(adj[x]) != 2) continue;
        alive[x] = 0;
        std::vector<Vertex> ends;
        for (const auto& [w, m] : adj[x]) ends.insert(ends.end(), m, w);
        for (Vertex w : ends) adj[w].erase(x);
        adj[x].clear();
        if (ends[0] != ends[1]) {
            adj[ends[0]][ends[1]] += 1;
            adj[ends[1]][ends[0]] += 1;
        }
        work.push_back(ends[0]);
        if (ends[1] != ends[0]) work.push_back(ends[1]);
    }
    return compact(adj, alive, g.labels);
}

LabeledGraph simplify_parallel(const LabeledMultigraph& g) {
    return LabeledGraph{g.graph.simplified(), g.labels};
}

LabeledMultigraph build_multigraph(const Signature& sig, const Catalog& catalog) {
    const std::size_t n = sig.tiles.size();
    if (n < 3 || n % 2 == 0) throw ValidationError("a signature needs an odd number of at least 3 tiles");
    Tile acc;
    for (std::size_t i = 0; i < n; ++i) {
        Orientation orientation = Orientation::upright;
        const Picture* picture = catalog.find_token(sig.tiles[i].picture, &orientation);
        if (!picture) throw ValidationError("unknown picture '" + sig.tiles[i].picture + "'");
        Tile t = instantiate(make_template(catalog, picture->id, orientation, to_string(sig.tiles[i].frame)),
                             static_cast<int>(i));
        if (i % 2 == 1) t = transform(t, TransformMode::both_invert);
        acc = i == 0 ? std::move(t) : join(acc, t);
    }
    return suppress_degree2(cyclize(transform(acc, TransformMode::right_invert)));
}

LabeledGraph build_graph(const Signature& sig, const Catalog& catalog) {
    return finalize_graph(build_multigraph(sig, catalog));
}

LabeledGraph finalize_graph(LabeledMultigraph g) {
    // In a simple graph every further suppression can only create parallel edges, which
    // are collapsed at once; iterate until both steps are idle.
    while (true) {
        LabeledMultigraph simple;
        simple.graph = Multigraph(g.graph.order());
        for (const auto& [e, m] : g.graph.edges()) simple.graph.add_edge(e.u, e.v);
        simple.labels = g.labels;
        LabeledMultigraph next = suppress_degree2(simple);
        const bool changed = next.graph.order() != g.graph.order() || next.graph.edges().size() != g.graph.edges().size();
        bool has_parallel = false;
        for (const auto& [e, m] : next.graph.edges()) has_parallel |= m > 1;
        g = std::move(next);
        if (!changed && !has_parallel) break;
    }

    std::vector<Vertex> order(g.graph.order());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.labels[a] < g.labels[b]; });
    std::vector<Vertex> rank(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<Vertex>(i);
    LabeledGraph out;
    out.graph = Graph(order.size());
    for (const auto& [e, m] : g.graph.edges()) out.graph.add_edge(rank[e.u], rank[e.v]);
    for (Vertex v : order) out.labels.push_back(g.labels[v]);
    return out;
}

std::string to_dot(const LabeledGraph& g) {
    std::string out = "graph G {\n";
    for (Vertex v = 0; v < static_cast<Vertex>(g.graph.order()); ++v)
        out += "  " + std::to_string(v) + " [label=\"" + g.full_name(v) + "\"];\n";
    for (const auto& e : g.graph.edges()) out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
    return out + "}\n";
}

std::string to_json(const LabeledGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::json::array();
    for (Vertex v = 0; v < static_cast<Vertex>(g.graph.order()); ++v) j["vertices"].push_back(g.full_name(v));
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.graph.edges()) j["edges"].push_back({e.u, e.v});
    return j.dump();
}

}  // namespace tcc
