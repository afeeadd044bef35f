#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tcc {

using Vertex = std::int32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    // Normalized so that u < v.
    static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    auto operator<=>(const Edge&) const = default;
};

// Sorted, duplicate-free list of vertex ids of some host graph.
using VertexSet = std::vector<Vertex>;

VertexSet make_vertex_set(std::vector<Vertex> vertices);

// Simple undirected graph on vertices 0..order()-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order);

    static Graph from_edges(std::size_t order, std::span<const Edge> edges);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    Vertex add_vertex();
    // Returns false when the edge is already present. Loops are rejected.
    bool add_edge(Vertex u, Vertex v);
    bool remove_edge(Vertex u, Vertex v);

    bool has_vertex(Vertex v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < adj_.size(); }
    bool has_edge(Vertex u, Vertex v) const;
    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    std::size_t min_degree() const;

    // All edges with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> set);
bool is_dominating(const Graph& g, std::span<const Vertex> set);
bool is_independent(const Graph& g, std::span<const Vertex> set);

bool is_connected(const Graph& g);
// |V| >= 4, connected, and no pair of vertices whose removal disconnects the graph.
bool is_3_connected(const Graph& g);

Graph delete_edge(const Graph& g, Edge e);
// The remaining vertices are renumbered in order, skipping v.
Graph delete_vertex(const Graph& g, Vertex v);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// Undirected multigraph without loops; edge multiplicities are kept.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(std::size_t order) : order_(order) {}

    std::size_t order() const noexcept { return order_; }
    Vertex add_vertex() { return static_cast<Vertex>(order_++); }
    // Loops are dropped silently: identification may legitimately produce them.
    void add_edge(Vertex u, Vertex v, int multiplicity = 1);

    int multiplicity(Vertex u, Vertex v) const;
    // Sum of multiplicities of incident edges.
    std::size_t degree(Vertex v) const;
    // Distinct edges (u < v) with their multiplicities, lexicographically ordered.
    const std::vector<std::pair<Edge, int>>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const;

    Graph simplified() const;
    bool operator==(const Multigraph&) const = default;

private:
    std::size_t order_ = 0;
    std::vector<std::pair<Edge, int>> edges_;
};

// Wall constraint for isomorphism: left[i] of the first graph must map to left[i] of the
// second, and likewise for right.
struct WallPair {
    std::vector<Vertex> left;
    std::vector<Vertex> right;
};

inline constexpr std::size_t kDefaultIsomorphismLimit = 64;

// Backtracking isomorphism with degree pruning; throws GuardError above size_limit vertices.
bool isomorphic(const Graph& g1, const Graph& g2, std::size_t size_limit = kDefaultIsomorphismLimit);
bool isomorphic(const Multigraph& g1, const WallPair& walls1, const Multigraph& g2, const WallPair& walls2,
                std::size_t size_limit = kDefaultIsomorphismLimit);

// Common small graphs, mostly for tests and diagnostics.
Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

}  // namespace tcc
