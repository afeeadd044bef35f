#include "doctest.h"

#include <random>

#include "tcc/error.hpp"
#include "tcc/exact.hpp"
#include "tcc/tilealg.hpp"

using namespace tcc;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution edge(p);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_SUITE("exact") {
    TEST_CASE("brute force on small graphs") {
        CHECK(gamma_bruteforce(cycle_graph(6)).value == 2);
        CHECK(gamma_bruteforce(cycle_graph(6)).witness == VertexSet{0, 3});
        CHECK(alpha_bruteforce(cycle_graph(6)).value == 3);
        CHECK(alpha_bruteforce(cycle_graph(6)).witness == VertexSet{0, 2, 4});
        CHECK(gamma_bruteforce(star_graph(5)).witness == VertexSet{0});
        CHECK(alpha_bruteforce(complete_graph(5)).witness == VertexSet{0});
        CHECK(gamma_bruteforce(Graph{}).value == 0);
        CHECK(alpha_bruteforce(Graph(3)).value == 3);
    }

    TEST_CASE("brute force size guard") {
        CHECK_THROWS_AS(gamma_bruteforce(cycle_graph(21)), GuardError);
        CHECK_THROWS_AS(alpha_bruteforce(cycle_graph(21)), GuardError);
        CHECK_NOTHROW(gamma_bruteforce(cycle_graph(20)));
    }

    TEST_CASE("branch and bound agrees with brute force") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 60; ++i) {
            const Graph g = random_graph(rng, 4 + i % 14, 0.1 + 0.05 * (i % 10));
            const SolveResult ge = gamma_exact(g), ae = alpha_exact(g);
            CHECK(ge.status == SolveStatus::optimal);
            CHECK(ge.value == gamma_bruteforce(g).value);
            CHECK(ae.value == alpha_bruteforce(g).value);
            CHECK(is_dominating(g, ge.witness));
            CHECK(is_independent(g, ae.witness));
        }
    }

    TEST_CASE("classical values") {
        CHECK(gamma_exact(cycle_graph(30)).value == 10);
        CHECK(alpha_exact(cycle_graph(31)).value == 15);
        CHECK(gamma_exact(complete_bipartite(4, 5)).value == 2);
        CHECK(alpha_exact(complete_bipartite(4, 5)).value == 5);
        CHECK(gamma_exact(Graph(4)).value == 4);
    }

    TEST_CASE("budget exhaustion returns a valid incumbent") {
        const Graph g = build_graph(parse_signature("VBdLVBdLVBdLVBdLVBdL")).graph;
        const SolveResult r = gamma_exact(g, Budget{1, 60.0});
        CHECK(r.status == SolveStatus::budget_exceeded);
        CHECK(is_dominating(g, r.witness));
        CHECK(r.value >= 10);
        const SolveResult a = alpha_exact(g, Budget{1, 60.0});
        CHECK(a.status == SolveStatus::budget_exceeded);
        CHECK(is_independent(g, a.witness));
    }

    TEST_CASE("status names") {
        CHECK(to_string(SolveStatus::optimal) == "optimal");
        CHECK(to_string(SolveStatus::budget_exceeded) == "budget_exceeded");
    }
}
