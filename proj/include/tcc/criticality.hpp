#pragma once

#include <optional>
#include <string>
#include <utility>

#include "tcc/graph.hpp"

namespace tcc {

// Complete planarity decision (path-addition on each biconnected block).
bool is_planar(const Graph& g);

// Removes the independent edges e and f and joins a new vertex to their four endpoints,
// modelling a single crossing between them. The new vertex is numbered order().
Graph planarize_pair(const Graph& g, Edge e, Edge f);

struct CrossingWitness {
    bool le_1 = false;
    // Set when the graph is non-planar but becomes planar after planarizing this pair.
    std::optional<std::pair<Edge, Edge>> pair;
};

// Decides cr(g) <= 1 exactly: planar, or some independent edge pair planarizes.
CrossingWitness crossing_le_1(const Graph& g);

// Crossing number questions on multigraphs are answered on the graph where every extra
// copy of an edge is subdivided once; subdivision does not change the crossing number.
struct Subdivided {
    Graph graph;
    // For each edge of `graph`, the multigraph edge it came from.
    std::vector<Edge> origin;
};
Subdivided subdivide_parallel(const Multigraph& g);

struct CriticalityReport {
    bool planar = false;
    bool cr_le_1 = false;
    std::optional<std::pair<Edge, Edge>> cr_le_1_witness;  // in terms of the tested graph
    bool three_connected = false;
    bool critical_edges_ok = false;
    std::optional<Edge> failing_edge;  // multigraph edge whose deletion keeps cr >= 2
    bool is_2cc = false;
};

// {planar, cr_le_1, cr_le_1_witness?, three_connected, critical_edges_ok, failing_edge?, is_2cc}
std::string to_json(const CriticalityReport& r);

struct CriticalityOptions {
    // Worker threads for the per-edge deletion loop; 0 picks hardware concurrency.
    unsigned threads = 0;
};

// 2-crossing-criticality: cr >= 2 while every single-edge deletion has cr <= 1. Checking
// edge deletions suffices because every proper subgraph lies inside some g - e.
CriticalityReport verify_2cc(const Graph& g, const CriticalityOptions& options = {});
CriticalityReport verify_2cc(const Multigraph& g, const CriticalityOptions& options = {});

}  // namespace tcc
