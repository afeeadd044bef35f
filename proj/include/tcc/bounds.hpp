#pragma once

#include <optional>
#include <string>

#include "tcc/exact.hpp"
#include "tcc/signature.hpp"
#include "tcc/tilealg.hpp"

namespace tcc {

int gamma_upper(const SymbolCounts& c);
int gamma_lower(const SymbolCounts& c);
int alpha_upper(const Graph& g);
int alpha_lower(const SymbolCounts& c);

// Union of every tile's picture marks, located in g through the merge histories.
// Throws VerificationError unless the result dominates g and has size gamma_upper.
VertexSet construct_dominating_set(const LabeledGraph& g, const Signature& sig,
                                   const Catalog& catalog = Catalog::bundled());

// The graph with every picture replaced by DD, i.e. frames only.
LabeledGraph frames_only_graph(const Signature& sig, const Catalog& catalog = Catalog::bundled());

// Corner selection on the frames-only graph, transferred to g by label.
// Throws VerificationError unless the result is independent in g and has size alpha_lower.
VertexSet construct_independent_set(const LabeledGraph& g, const Signature& sig,
                                    const Catalog& catalog = Catalog::bundled());

struct BoundsOptions {
    bool compute_exact = false;
    Budget budget;
};

struct BoundsReport {
    std::string signature;
    SymbolCounts counts;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    int gamma_lower = 0;
    int gamma_upper = 0;
    int alpha_lower = 0;
    int alpha_upper = 0;
    std::optional<SolveResult> gamma_exact;
    std::optional<SolveResult> alpha_exact;
    VertexSet dom_witness;  // constructed, empty when construction failed
    VertexSet ind_witness;
    std::vector<std::string> dom_witness_names;
    std::vector<std::string> ind_witness_names;
    bool gamma_sandwich = false;
    bool alpha_sandwich = false;
    bool dom_witness_ok = false;
    bool ind_witness_ok = false;
    std::vector<std::string> failures;  // messages of construction failures

    bool checks_ok() const { return gamma_sandwich && alpha_sandwich && dom_witness_ok && ind_witness_ok; }
    bool budget_exceeded() const;
    std::string to_json() const;
};

BoundsReport bounds_report(const Signature& sig, const BoundsOptions& options = {},
                           const Catalog& catalog = Catalog::bundled());

}  // namespace tcc
