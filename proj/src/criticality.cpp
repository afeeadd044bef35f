#include "tcc/criticality.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "json.hpp"

#include "tcc/error.hpp"

namespace tcc {

namespace {

// Biconnected blocks as edge lists (Hopcroft-Tarjan with an explicit edge stack).
class Blocks {
public:
    explicit Blocks(const Graph& g) : g_(g), disc_(g.order(), -1), low_(g.order(), 0) {
        for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v)
            if (disc_[v] < 0) visit(v, -1);
    }

    std::vector<std::vector<Edge>> blocks;

private:
    void visit(Vertex v, Vertex parent) {
        disc_[v] = low_[v] = time_++;
        for (Vertex w : g_.neighbors(v)) {
            if (w == parent) continue;
            if (disc_[w] < 0) {
                stack_.push_back(Edge::of(v, w));
                visit(w, v);
                low_[v] = std::min(low_[v], low_[w]);
                if (low_[w] >= disc_[v]) {
                    std::vector<Edge> block;
                    const Edge top = Edge::of(v, w);
                    while (true) {
                        Edge e = stack_.back();
                        stack_.pop_back();
                        block.push_back(e);
                        if (e == top) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (disc_[w] < disc_[v]) {
                stack_.push_back(Edge::of(v, w));
                low_[v] = std::min(low_[v], disc_[w]);
            }
        }
    }

    const Graph& g_;
    std::vector<int> disc_, low_;
    std::vector<Edge> stack_;
    int time_ = 0;
};

// Demoucron-Malgrange-Pertuiset path addition on a biconnected graph given as a dense
// adjacency matrix. Every face of the partial embedding is a simple cycle.
class PathAddition {
public:
    PathAddition(std::size_t n, const std::vector<Edge>& edges)
        : n_(n), adj_(n * n, 0), placed_edge_(n * n, 0), placed_(n, 0), nbrs_(n) {
        for (const auto& e : edges) {
            adj_[e.u * n + e.v] = adj_[e.v * n + e.u] = 1;
            nbrs_[e.u].push_back(e.v);
            nbrs_[e.v].push_back(e.u);
        }
        edge_count_ = edges.size();
    }

    bool planar() {
        if (n_ < 5 || edge_count_ < 9) return true;
        if (edge_count_ > 3 * n_ - 6) return false;
        seed_cycle();
        while (true) {
            collect_fragments();
            if (fragments_.empty()) return true;
            int chosen = -1;
            int chosen_face = -1;
            for (std::size_t f = 0; f < fragments_.size(); ++f) {
                int count = 0, face = -1;
                for (std::size_t k = 0; k < faces_.size(); ++k)
                    if (admits(k, fragments_[f])) {
                        ++count;
                        if (face < 0) face = static_cast<int>(k);
                    }
                if (count == 0) return false;
                if (count == 1 || chosen < 0) {
                    chosen = static_cast<int>(f);
                    chosen_face = face;
                    if (count == 1) break;
                }
            }
            embed(fragments_[chosen], static_cast<std::size_t>(chosen_face));
        }
    }

private:
    struct Fragment {
        std::vector<int> attachments;
        std::vector<int> interior;  // empty for a chord
    };

    bool edge(int a, int b) const { return adj_[a * n_ + b] != 0; }
    bool placed_edge(int a, int b) const { return placed_edge_[a * n_ + b] != 0; }
    void place_edge(int a, int b) { placed_edge_[a * n_ + b] = placed_edge_[b * n_ + a] = 1; }

    void seed_cycle() {
        // Any edge plus a shortest path between its ends avoiding it forms a cycle.
        int a = -1, b = -1;
        for (std::size_t v = 0; v < n_ && a < 0; ++v)
            if (!nbrs_[v].empty()) {
                a = static_cast<int>(v);
                b = nbrs_[v].front();
            }
        std::vector<int> prev(n_, -1);
        std::vector<int> queue{b};
        prev[b] = b;
        for (std::size_t head = 0; head < queue.size() && prev[a] < 0; ++head) {
            int v = queue[head];
            for (int w : nbrs_[v]) {
                if (prev[w] >= 0 || (v == b && w == a)) continue;
                prev[w] = v;
                queue.push_back(w);
            }
        }
        std::vector<int> cycle;
        for (int v = a; v != b; v = prev[v]) cycle.push_back(v);
        cycle.push_back(b);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            placed_[cycle[i]] = 1;
            place_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
        }
        faces_.push_back(cycle);
        faces_.push_back(cycle);
        rebuild_membership();
    }

    void rebuild_membership() {
        member_.assign(faces_.size() * n_, 0);
        for (std::size_t k = 0; k < faces_.size(); ++k)
            for (int v : faces_[k]) member_[k * n_ + v] = 1;
    }

    bool admits(std::size_t face, const Fragment& fr) const {
        for (int v : fr.attachments)
            if (!member_[face * n_ + v]) return false;
        return true;
    }

    void collect_fragments() {
        fragments_.clear();
        for (std::size_t a = 0; a < n_; ++a) {
            if (!placed_[a]) continue;
            for (int b : nbrs_[a])
                if (static_cast<int>(a) < b && placed_[b] && !placed_edge(static_cast<int>(a), b))
                    fragments_.push_back({{static_cast<int>(a), b}, {}});
        }
        std::vector<char> seen(n_, 0);
        std::vector<char> attached(n_, 0);
        for (std::size_t s = 0; s < n_; ++s) {
            if (placed_[s] || seen[s] || nbrs_[s].empty()) continue;
            Fragment fr;
            std::vector<int> stack{static_cast<int>(s)};
            seen[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                fr.interior.push_back(v);
                for (int w : nbrs_[v]) {
                    if (placed_[w]) {
                        if (!attached[w]) {
                            attached[w] = 1;
                            fr.attachments.push_back(w);
                        }
                    } else if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            for (int w : fr.attachments) attached[w] = 0;
            fragments_.push_back(std::move(fr));
        }
    }

    std::vector<int> fragment_path(const Fragment& fr) const {
        if (fr.interior.empty()) return fr.attachments;
        // From the first attachment, walk through the interior to any other attachment.
        const int a = fr.attachments.front();
        std::vector<int> prev(n_, -1);
        std::vector<int> queue;
        for (int v : fr.interior)
            if (edge(a, v)) {
                prev[v] = a;
                queue.push_back(v);
                break;
            }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : nbrs_[v]) {
                if (placed_[w]) {
                    if (w != a) {
                        std::vector<int> path{w};
                        for (int x = v; x != a; x = prev[x]) path.push_back(x);
                        path.push_back(a);
                        std::reverse(path.begin(), path.end());
                        return path;
                    }
                } else if (prev[w] < 0) {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        throw Error("planarity: fragment with a single attachment in a biconnected block");
    }

    void embed(const Fragment& fr, std::size_t face) {
        const std::vector<int> path = fragment_path(fr);
        const int a = path.front(), b = path.back();
        const std::vector<int> cyc = faces_[face];
        const std::size_t len = cyc.size();
        std::size_t i = 0, j = 0;
        for (std::size_t k = 0; k < len; ++k) {
            if (cyc[k] == a) i = k;
            if (cyc[k] == b) j = k;
        }
        std::vector<int> first, second;
        for (std::size_t k = i;; k = (k + 1) % len) {
            first.push_back(cyc[k]);
            if (k == j) break;
        }
        for (std::size_t k = path.size() - 2; k >= 1; --k) first.push_back(path[k]);
        for (std::size_t k = j;; k = (k + 1) % len) {
            second.push_back(cyc[k]);
            if (k == i) break;
        }
        for (std::size_t k = 1; k + 1 < path.size(); ++k) second.push_back(path[k]);
        faces_[face] = std::move(first);
        faces_.push_back(std::move(second));
        for (std::size_t k = 0; k < path.size(); ++k) {
            placed_[path[k]] = 1;
            if (k + 1 < path.size()) place_edge(path[k], path[k + 1]);
        }
        rebuild_membership();
    }

    std::size_t n_;
    std::size_t edge_count_ = 0;
    std::vector<char> adj_, placed_edge_, placed_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<std::vector<int>> faces_;
    std::vector<char> member_;
    std::vector<Fragment> fragments_;
};

bool block_planar(const std::vector<Edge>& block) {
    if (block.size() < 9) return true;
    std::vector<Vertex> verts;
    for (const auto& e : block) {
        verts.push_back(e.u);
        verts.push_back(e.v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto local = [&](Vertex v) {
        return static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::vector<Edge> relabelled;
    relabelled.reserve(block.size());
    for (const auto& e : block) relabelled.push_back(Edge::of(local(e.u), local(e.v)));
    return PathAddition(verts.size(), relabelled).planar();
}

}  // namespace

bool is_planar(const Graph& g) {
    const std::size_t n = g.order(), m = g.size();
    if (n >= 3 && m > 3 * n - 6) return false;
    if (m < 9) return true;
    Blocks blocks(g);
    for (const auto& block : blocks.blocks)
        if (!block_planar(block)) return false;
    return true;
}

Graph planarize_pair(const Graph& g, Edge e, Edge f) {
    e = Edge::of(e.u, e.v);
    f = Edge::of(f.u, f.v);
    if (e == f) throw ValidationError("planarize_pair needs two distinct edges");
    if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v)
        throw ValidationError("planarize_pair needs edges without a common endpoint");
    Graph out = g;
    if (!out.remove_edge(e.u, e.v) || !out.remove_edge(f.u, f.v))
        throw ValidationError("planarize_pair: unknown edge");
    const Vertex c = out.add_vertex();
    for (Vertex x : {e.u, e.v, f.u, f.v}) out.add_edge(c, x);
    return out;
}

CrossingWitness crossing_le_1(const Graph& g) {
    if (is_planar(g)) return {true, std::nullopt};
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge e = edges[i], f = edges[j];
            if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
            if (is_planar(planarize_pair(g, e, f))) return {true, std::make_pair(e, f)};
        }
    return {false, std::nullopt};
}

Subdivided subdivide_parallel(const Multigraph& g) {
    Subdivided out;
    out.graph = Graph(g.order());
    for (const auto& [e, m] : g.edges()) {
        out.graph.add_edge(e.u, e.v);
        out.origin.push_back(e);
        for (int copy = 1; copy < m; ++copy) {
            const Vertex s = out.graph.add_vertex();
            out.graph.add_edge(e.u, s);
            out.graph.add_edge(s, e.v);
        }
    }
    // Recompute the origin map in the graph's own edge order.
    std::vector<Edge> origin;
    for (const auto& e : out.graph.edges()) {
        if (static_cast<std::size_t>(e.v) < g.order()) {
            origin.push_back(e);
        } else {
            // e.u is an original endpoint and e.v a subdivision vertex: find its pair.
            const auto nb = out.graph.neighbors(e.v);
            origin.push_back(Edge::of(nb[0], nb[1]));
        }
    }
    out.origin = std::move(origin);
    return out;
}

namespace {

CriticalityReport verify_on(const Graph& tested, const Graph& simple, const std::vector<Edge>& deletions,
                            const std::vector<Edge>& deletion_origin, const CriticalityOptions& options) {
    CriticalityReport report;
    report.planar = is_planar(tested);
    const auto cr = crossing_le_1(tested);
    report.cr_le_1 = cr.le_1;
    report.cr_le_1_witness = cr.pair;
    report.three_connected = is_3_connected(simple);

    // First failing index wins so the report does not depend on the thread schedule.
    std::atomic<std::size_t> next{0};
    std::vector<char> failed(deletions.size(), 0);
    auto worker = [&] {
        for (std::size_t k = next++; k < deletions.size(); k = next++)
            failed[k] = !crossing_le_1(delete_edge(tested, deletions[k])).le_1;
    };
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, deletions.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    report.critical_edges_ok = true;
    for (std::size_t k = 0; k < deletions.size(); ++k)
        if (failed[k]) {
            report.critical_edges_ok = false;
            report.failing_edge = deletion_origin[k];
            break;
        }
    report.is_2cc = !report.cr_le_1 && report.critical_edges_ok;
    return report;
}

}  // namespace

CriticalityReport verify_2cc(const Graph& g, const CriticalityOptions& options) {
    const auto edges = g.edges();
    return verify_on(g, g, edges, edges, options);
}

CriticalityReport verify_2cc(const Multigraph& g, const CriticalityOptions& options) {
    const Subdivided sub = subdivide_parallel(g);
    // One representative per multigraph edge: copies of the same edge are interchangeable,
    // and deleting either half of a subdivided copy removes that copy.
    std::vector<Edge> deletions, origin;
    const auto edges = sub.graph.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (std::find(origin.begin(), origin.end(), sub.origin[k]) != origin.end()) continue;
        deletions.push_back(edges[k]);
        origin.push_back(sub.origin[k]);
    }
    return verify_on(sub.graph, g.simplified(), deletions, origin, options);
}

std::string to_json(const CriticalityReport& r) {
    auto edge = [](const Edge& e) { return nlohmann::json::array({e.u, e.v}); };
    nlohmann::ordered_json j;
    j["planar"] = r.planar;
    j["cr_le_1"] = r.cr_le_1;
    if (r.cr_le_1_witness) j["cr_le_1_witness"] = {edge(r.cr_le_1_witness->first), edge(r.cr_le_1_witness->second)};
    j["three_connected"] = r.three_connected;
    j["critical_edges_ok"] = r.critical_edges_ok;
    if (r.failing_edge) j["failing_edge"] = edge(*r.failing_edge);
    j["is_2cc"] = r.is_2cc;
    return j.dump();
}

}  // namespace tcc
