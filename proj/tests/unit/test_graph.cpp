#include "doctest.h"

#include "tcc/error.hpp"
#include "tcc/graph.hpp"

using namespace tcc;

TEST_SUITE("graphcore") {
    TEST_CASE("closed neighborhoods") {
        const Graph star = star_graph(3);
        CHECK(closed_neighborhood(star, VertexSet{0}) == VertexSet{0, 1, 2, 3});
        CHECK(closed_neighborhood(star, VertexSet{}).empty());
        const Graph k4 = complete_graph(4);
        CHECK(closed_neighborhood(k4, VertexSet{0, 1, 2, 3}) == VertexSet{0, 1, 2, 3});
        CHECK_THROWS(closed_neighborhood(k4, VertexSet{7}));
    }

    TEST_CASE("domination and independence predicates") {
        const Graph p4 = path_graph(4);
        CHECK(is_dominating(p4, VertexSet{0, 1, 2, 3}));
        CHECK_FALSE(is_dominating(p4, VertexSet{0}));
        CHECK(is_dominating(p4, VertexSet{1, 2}));
        CHECK(is_independent(p4, VertexSet{}));
        CHECK_FALSE(is_independent(p4, VertexSet{0, 1}));
        CHECK(is_independent(p4, VertexSet{0, 2}));
    }

    TEST_CASE("connectivity") {
        CHECK(is_3_connected(complete_graph(4)));
        CHECK_FALSE(is_3_connected(path_graph(3)));
        CHECK_FALSE(is_3_connected(cycle_graph(6)));
        CHECK(is_3_connected(complete_bipartite(3, 3)));
        CHECK(is_connected(cycle_graph(5)));
        Graph two(4);
        two.add_edge(0, 1);
        two.add_edge(2, 3);
        CHECK_FALSE(is_connected(two));
    }

    TEST_CASE("deletions leave the original alone") {
        const Graph k3 = complete_graph(3);
        const Graph p = delete_edge(k3, Edge::of(0, 1));
        CHECK(p.size() == 2);
        CHECK(isomorphic(p, path_graph(3)));
        CHECK(k3.size() == 3);
        CHECK(isomorphic(delete_vertex(complete_graph(4), 2), complete_graph(3)));
        CHECK_THROWS(delete_edge(path_graph(4), Edge::of(0, 3)));
    }

    TEST_CASE("isomorphism") {
        CHECK(isomorphic(cycle_graph(5), cycle_graph(5)));
        CHECK_FALSE(isomorphic(cycle_graph(5), path_graph(5)));
        CHECK_FALSE(isomorphic(complete_graph(4), delete_edge(complete_graph(4), Edge::of(0, 1))));
        CHECK_THROWS_AS(isomorphic(cycle_graph(70), cycle_graph(70)), GuardError);
    }

    TEST_CASE("multigraph keeps multiplicities") {
        Multigraph m(3);
        m.add_edge(0, 1);
        m.add_edge(1, 0);
        m.add_edge(1, 2);
        m.add_edge(2, 2);
        CHECK(m.multiplicity(0, 1) == 2);
        CHECK(m.degree(1) == 3);
        CHECK(m.edge_count() == 3);
        CHECK(m.simplified().size() == 2);
    }

    TEST_CASE("vertex sets are sorted and unique") {
        CHECK(make_vertex_set({3, 1, 3, 0}) == VertexSet{0, 1, 3});
    }
}
