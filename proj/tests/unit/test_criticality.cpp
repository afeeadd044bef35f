#include "doctest.h"

#include "tcc/criticality.hpp"
#include "tcc/error.hpp"
#include "tcc/signature.hpp"
#include "tcc/tilealg.hpp"

using namespace tcc;

TEST_SUITE("criticality") {
    TEST_CASE("planarity") {
        CHECK(is_planar(complete_graph(4)));
        CHECK_FALSE(is_planar(complete_graph(5)));
        CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
        CHECK(is_planar(cycle_graph(9)));
    }

    TEST_CASE("planar graphs respect the edge bound") {
        for (std::size_t n = 3; n <= 8; ++n)
            for (const Graph& g : {complete_graph(n), complete_bipartite(n / 2, n - n / 2), cycle_graph(n)})
                if (is_planar(g)) CHECK(g.size() <= 3 * g.order() - 6);
    }

    TEST_CASE("planarize_pair") {
        const Graph c6 = cycle_graph(6);
        const Graph p = planarize_pair(c6, Edge::of(0, 1), Edge::of(3, 4));
        CHECK(p.order() == 7);
        CHECK(p.size() == 8);
        CHECK_THROWS(planarize_pair(c6, Edge::of(0, 1), Edge::of(1, 2)));
        CHECK_THROWS(planarize_pair(c6, Edge::of(0, 1), Edge::of(0, 1)));
    }

    TEST_CASE("crossing number at most one") {
        const auto k5 = crossing_le_1(complete_graph(5));
        CHECK(k5.le_1);
        CHECK(k5.pair.has_value());
        CHECK(crossing_le_1(cycle_graph(5)).le_1);
        CHECK_FALSE(crossing_le_1(subdivide_parallel(build_multigraph(parse_signature("DDLDDLDDL")).graph).graph).le_1);
    }

    TEST_CASE("crossing at most one survives edge deletion") {
        const Graph k5 = complete_graph(5);
        for (const Edge& e : k5.edges()) CHECK(crossing_le_1(delete_edge(k5, e)).le_1);
    }

    TEST_CASE("small graphs are not 2-crossing-critical") {
        const auto k5 = verify_2cc(complete_graph(5));
        CHECK(k5.cr_le_1);
        CHECK_FALSE(k5.is_2cc);
        const auto c4 = verify_2cc(cycle_graph(4));
        CHECK(c4.planar);
        CHECK_FALSE(c4.is_2cc);
    }

    TEST_CASE("frames-only graph is 3-connected and 2-crossing-critical") {
        const Signature sig = parse_signature("DDLDDLDDL");
        const auto r = verify_2cc(build_multigraph(sig).graph);
        CHECK(r.three_connected);
        CHECK_FALSE(r.cr_le_1);
        CHECK(r.critical_edges_ok);
        CHECK(r.is_2cc);
        CHECK(r.is_2cc == (!r.cr_le_1 && r.critical_edges_ok));
    }

    TEST_CASE("report does not depend on the thread count") {
        const Multigraph g = build_multigraph(parse_signature("AIVLDDLDVdL")).graph;
        CHECK(to_json(verify_2cc(g, {1})) == to_json(verify_2cc(g, {3})));
    }

    TEST_CASE("subdividing parallel copies") {
        Multigraph m(2);
        m.add_edge(0, 1, 3);
        const Subdivided s = subdivide_parallel(m);
        CHECK(s.graph.order() == 4);
        CHECK(s.graph.size() == 5);
        CHECK(s.origin.size() == 5);
    }
}
