#pragma once

#include <cstdint>
#include <string_view>

#include "tcc/graph.hpp"

namespace tcc {

enum class SolveStatus { optimal, budget_exceeded };

std::string_view to_string(SolveStatus s);

struct SolveResult {
    int value = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    double elapsed_seconds = 0.0;
    SolveStatus status = SolveStatus::optimal;
};

struct Budget {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 60.0;
};

inline constexpr std::size_t kBruteforceLimit = 20;

// Exhaustive search by cardinality; the witness is the lexicographically least optimal set.
// Throw GuardError above kBruteforceLimit vertices.
SolveResult gamma_bruteforce(const Graph& g);
SolveResult alpha_bruteforce(const Graph& g);

// Branch and bound. On budget exhaustion the best set found so far is returned with
// status budget_exceeded; that set is still a valid dominating / independent set.
SolveResult gamma_exact(const Graph& g, const Budget& budget = {});
SolveResult alpha_exact(const Graph& g, const Budget& budget = {});

}  // namespace tcc
