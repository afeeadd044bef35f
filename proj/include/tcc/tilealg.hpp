#pragma once

#include <string>
#include <vector>

#include "tcc/catalog.hpp"
#include "tcc/graph.hpp"
#include "tcc/signature.hpp"

namespace tcc {

// Where a vertex came from: tile position in the signature and the template's local id.
struct Provenance {
    int tile = 0;
    std::string local;

    std::string text() const { return std::to_string(tile) + ":" + local; }
    auto operator<=>(const Provenance&) const = default;
};

// Sorted provenance of every original vertex merged into one vertex.
using MergeHistory = std::vector<Provenance>;

struct LabeledMultigraph {
    Multigraph graph;
    std::vector<MergeHistory> labels;  // indexed by vertex
};

struct LabeledGraph {
    Graph graph;
    std::vector<MergeHistory> labels;

    // Canonical name: least provenance of the vertex, e.g. "2:tr".
    std::string name(Vertex v) const;
    // All merged provenances joined by '=', e.g. "0:br=1:bl".
    std::string full_name(Vertex v) const;
    // Vertices whose history contains the given provenance.
    std::vector<Vertex> find(const Provenance& p) const;
};

struct Tile {
    LabeledMultigraph body;
    std::vector<Vertex> left_wall;
    std::vector<Vertex> right_wall;
};

Tile instantiate(const TileTemplate& tmpl, int index);

enum class TransformMode { right_invert, left_invert, both_invert, reverse };

Tile transform(const Tile& tile, TransformMode mode);

// Identifies a.right_wall[i] with b.left_wall[i]; walls of the result are (a.left, b.right).
Tile join(const Tile& a, const Tile& b);

// Identifies left_wall[i] with right_wall[i]. Loops created by the identification vanish.
LabeledMultigraph cyclize(const Tile& tile);

// Replaces degree-2 vertices (counting multiplicity) by an edge between their neighbours
// until none is left. A vertex joined to a single neighbour by a doubled edge is removed.
LabeledMultigraph suppress_degree2(const LabeledMultigraph& g);

// Collapses parallel edges; the vertex set is unchanged.
LabeledGraph simplify_parallel(const LabeledMultigraph& g);

// Tiles of the signature, odd positions inverted, joined, right-inverted and cyclized, with
// degree-2 vertices suppressed. Parallel edges are kept.
LabeledMultigraph build_multigraph(const Signature& sig, const Catalog& catalog = Catalog::bundled());

// build_multigraph followed by parallel-edge collapse and suppression to a joint fixpoint.
// Vertices are numbered in order of their canonical names.
LabeledGraph build_graph(const Signature& sig, const Catalog& catalog = Catalog::bundled());

// Parallel-edge collapse and suppression to a joint fixpoint, then renumbering by name.
LabeledGraph finalize_graph(LabeledMultigraph g);

// Deterministic exports; vertex names are provenance strings.
std::string to_dot(const LabeledGraph& g);
std::string to_json(const LabeledGraph& g);

}  // namespace tcc
