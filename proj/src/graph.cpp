#include "tcc/graph.hpp"

#include <algorithm>

#include "tcc/error.hpp"

namespace tcc {

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

Graph::Graph(std::size_t order) : adj_(order) {}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
    Graph g(order);
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
}

void Graph::check_vertex(Vertex v) const {
    if (!has_vertex(v)) throw ValidationError("unknown vertex " + std::to_string(v));
}

Vertex Graph::add_vertex() {
    adj_.emplace_back();
    return static_cast<Vertex>(adj_.size() - 1);
}

bool Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return false;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
    return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it == au.end() || *it != v) return false;
    au.erase(it);
    auto& av = adj_[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    --edge_count_;
    return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

std::size_t Graph::min_degree() const {
    std::size_t best = adj_.empty() ? 0 : adj_.front().size();
    for (const auto& a : adj_) best = std::min(best, a.size());
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < static_cast<Vertex>(adj_.size()); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.push_back({u, v});
    return out;
}

void Multigraph::add_edge(Vertex u, Vertex v, int multiplicity) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(std::max(u, v)) >= order_)
        throw ValidationError("multigraph edge references unknown vertex");
    if (u == v || multiplicity <= 0) return;
    const Edge e = Edge::of(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                               [](const auto& entry, const Edge& key) { return entry.first < key; });
    if (it != edges_.end() && it->first == e)
        it->second += multiplicity;
    else
        edges_.insert(it, {e, multiplicity});
}

int Multigraph::multiplicity(Vertex u, Vertex v) const {
    const Edge e = Edge::of(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                               [](const auto& entry, const Edge& key) { return entry.first < key; });
    return (it != edges_.end() && it->first == e) ? it->second : 0;
}

std::size_t Multigraph::degree(Vertex v) const {
    std::size_t d = 0;
    for (const auto& [e, m] : edges_)
        if (e.u == v || e.v == v) d += static_cast<std::size_t>(m);
    return d;
}

std::size_t Multigraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& entry : edges_) total += static_cast<std::size_t>(entry.second);
    return total;
}

Graph Multigraph::simplified() const {
    Graph g(order_);
    for (const auto& entry : edges_) g.add_edge(entry.first.u, entry.first.v);
    return g;
}

VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> set) {
    std::vector<char> mark(g.order(), 0);
    for (Vertex v : set) {
        mark.at(static_cast<std::size_t>(v)) = 1;
        for (Vertex w : g.neighbors(v)) mark[w] = 1;
    }
    VertexSet out;
    for (std::size_t v = 0; v < mark.size(); ++v)
        if (mark[v]) out.push_back(static_cast<Vertex>(v));
    return out;
}

bool is_dominating(const Graph& g, std::span<const Vertex> set) {
    return closed_neighborhood(g, set).size() == g.order();
}

bool is_independent(const Graph& g, std::span<const Vertex> set) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (!g.has_vertex(set[i])) throw ValidationError("unknown vertex " + std::to_string(set[i]));
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (set[i] == set[j] || g.has_edge(set[i], set[j])) return false;
    }
    return true;
}

namespace {

// Number of vertices reached from the first non-removed vertex.
std::size_t reach_count(const Graph& g, const std::vector<char>& removed) {
    const std::size_t n = g.order();
    Vertex start = -1;
    for (std::size_t v = 0; v < n; ++v)
        if (!removed[v]) {
            start = static_cast<Vertex>(v);
            break;
        }
    if (start < 0) return 0;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!removed[w] && !seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    std::vector<char> removed(g.order(), 0);
    return reach_count(g, removed) == g.order();
}

bool is_3_connected(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 4 || g.min_degree() < 3 || !is_connected(g)) return false;
    std::vector<char> removed(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        removed[a] = 1;
        for (std::size_t b = a + 1; b < n; ++b) {
            removed[b] = 1;
            const bool ok = reach_count(g, removed) == n - 2;
            removed[b] = 0;
            if (!ok) return false;
        }
        removed[a] = 0;
    }
    return true;
}

Graph delete_edge(const Graph& g, Edge e) {
    Graph out = g;
    if (!out.remove_edge(e.u, e.v))
        throw ValidationError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " does not exist");
    return out;
}

Graph delete_vertex(const Graph& g, Vertex v) {
    if (!g.has_vertex(v)) throw ValidationError("unknown vertex " + std::to_string(v));
    std::vector<Vertex> keep;
    for (Vertex w = 0; w < static_cast<Vertex>(g.order()); ++w)
        if (w != v) keep.push_back(w);
    return induced_subgraph(g, keep);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<Vertex> index(g.order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) index.at(static_cast<std::size_t>(keep[i])) = static_cast<Vertex>(i);
    Graph out(keep.size());
    for (const auto& e : g.edges())
        if (index[e.u] >= 0 && index[e.v] >= 0) out.add_edge(index[e.u], index[e.v]);
    return out;
}

namespace {

// Dense multiplicity matrix used by the isomorphism search.
struct Dense {
    std::size_t n = 0;
    std::vector<int> mult;
    std::vector<int> degree;

    int at(std::size_t a, std::size_t b) const { return mult[a * n + b]; }
};

Dense dense_of(const Multigraph& g) {
    Dense d;
    d.n = g.order();
    d.mult.assign(d.n * d.n, 0);
    d.degree.assign(d.n, 0);
    for (const auto& [e, m] : g.edges()) {
        d.mult[e.u * d.n + e.v] = m;
        d.mult[e.v * d.n + e.u] = m;
        d.degree[e.u] += m;
        d.degree[e.v] += m;
    }
    return d;
}

class IsoSearch {
public:
    IsoSearch(const Dense& a, const Dense& b) : a_(a), b_(b), map_(a.n, -1), used_(b.n, 0) {}

    bool fix(std::size_t x, std::size_t y) {
        if (map_[x] >= 0) return map_[x] == static_cast<int>(y);
        if (used_[y] || !consistent(x, y)) return false;
        map_[x] = static_cast<int>(y);
        used_[y] = 1;
        return true;
    }

    bool run() {
        // Assign remaining vertices in an order that keeps each new vertex adjacent to
        // already-mapped ones where possible, which makes the consistency check bite early.
        std::vector<std::size_t> order;
        std::vector<char> placed(a_.n, 0);
        for (std::size_t v = 0; v < a_.n; ++v)
            if (map_[v] >= 0) {
                placed[v] = 1;
                order.push_back(v);
            }
        const std::size_t fixed = order.size();
        while (order.size() < a_.n) {
            std::size_t best = a_.n;
            int best_links = -1;
            for (std::size_t v = 0; v < a_.n; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (std::size_t w : order) links += a_.at(v, w) > 0;
                if (links > best_links || (links == best_links && a_.degree[v] > a_.degree[best])) {
                    best = v;
                    best_links = links;
                }
            }
            placed[best] = 1;
            order.push_back(best);
        }
        order_.assign(order.begin() + static_cast<std::ptrdiff_t>(fixed), order.end());
        return extend(0);
    }

private:
    bool consistent(std::size_t x, std::size_t y) const {
        if (a_.degree[x] != b_.degree[y]) return false;
        for (std::size_t w = 0; w < a_.n; ++w)
            if (map_[w] >= 0 && a_.at(x, w) != b_.at(y, static_cast<std::size_t>(map_[w]))) return false;
        return true;
    }

    bool extend(std::size_t k) {
        if (k == order_.size()) return true;
        const std::size_t x = order_[k];
        for (std::size_t y = 0; y < b_.n; ++y) {
            if (used_[y] || !consistent(x, y)) continue;
            map_[x] = static_cast<int>(y);
            used_[y] = 1;
            if (extend(k + 1)) return true;
            map_[x] = -1;
            used_[y] = 0;
        }
        return false;
    }

    const Dense& a_;
    const Dense& b_;
    std::vector<int> map_;
    std::vector<char> used_;
    std::vector<std::size_t> order_;
};

bool same_degree_sequence(const Dense& a, const Dense& b) {
    auto da = a.degree, db = b.degree;
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    return da == db;
}

Multigraph as_multigraph(const Graph& g) {
    Multigraph m(g.order());
    for (const auto& e : g.edges()) m.add_edge(e.u, e.v);
    return m;
}

}  // namespace

bool isomorphic(const Graph& g1, const Graph& g2, std::size_t size_limit) {
    return isomorphic(as_multigraph(g1), WallPair{}, as_multigraph(g2), WallPair{}, size_limit);
}

bool isomorphic(const Multigraph& g1, const WallPair& walls1, const Multigraph& g2, const WallPair& walls2,
                std::size_t size_limit) {
    if (g1.order() > size_limit || g2.order() > size_limit)
        throw GuardError("isomorphism test limited to " + std::to_string(size_limit) + " vertices");
    if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
    if (walls1.left.size() != walls2.left.size() || walls1.right.size() != walls2.right.size()) return false;
    const Dense a = dense_of(g1), b = dense_of(g2);
    if (!same_degree_sequence(a, b)) return false;
    IsoSearch search(a, b);
    for (std::size_t i = 0; i < walls1.left.size(); ++i)
        if (!search.fix(static_cast<std::size_t>(walls1.left[i]), static_cast<std::size_t>(walls2.left[i])))
            return false;
    for (std::size_t i = 0; i < walls1.right.size(); ++i)
        if (!search.fix(static_cast<std::size_t>(walls1.right[i]), static_cast<std::size_t>(walls2.right[i])))
            return false;
    return search.run();
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    Graph g(a + b);
    for (std::size_t x = 0; x < a; ++x)
        for (std::size_t y = 0; y < b; ++y) g.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(a + y));
    return g;
}

Graph cycle_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t v = 0; v < n && n >= 3; ++v)
        g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
    return g;
}

Graph path_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
    return g;
}

Graph star_graph(std::size_t leaves) {
    Graph g(leaves + 1);
    for (std::size_t v = 1; v <= leaves; ++v) g.add_edge(0, static_cast<Vertex>(v));
    return g;
}

}  // namespace tcc
