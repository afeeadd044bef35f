#include "doctest.h"

#include <set>

#include "tcc/error.hpp"
#include "tcc/tilealg.hpp"

using namespace tcc;

namespace {

TileTemplate tmpl(const char* picture, const char* frame) {
    return make_template(Catalog::bundled(), picture, Orientation::upright, frame);
}

bool same_tile(const Tile& a, const Tile& b) {
    return a.body.graph == b.body.graph && a.body.labels == b.body.labels && a.left_wall == b.left_wall &&
           a.right_wall == b.right_wall;
}

}  // namespace

TEST_SUITE("tilealg") {
    TEST_CASE("instantiate labels and walls") {
        const Tile t0 = instantiate(tmpl("DD", "L"), 0);
        for (const auto& h : t0.body.labels) {
            REQUIRE(h.size() == 1);
            CHECK(h.front().tile == 0);
        }
        CHECK(t0.left_wall.size() == 2);
        CHECK(t0.right_wall.size() == 2);
        const Tile t1 = instantiate(tmpl("DD", "L"), 1);
        std::set<Provenance> a, b;
        for (const auto& h : t0.body.labels) a.insert(h.front());
        for (const auto& h : t1.body.labels) b.insert(h.front());
        for (const auto& p : a) CHECK(b.count(p) == 0);
    }

    TEST_CASE("inversions are involutions") {
        const Tile t = instantiate(tmpl("AV", "dL"), 0);
        for (auto mode : {TransformMode::both_invert, TransformMode::reverse, TransformMode::left_invert,
                          TransformMode::right_invert})
            CHECK(same_tile(transform(transform(t, mode), mode), t));
        CHECK_FALSE(same_tile(transform(t, TransformMode::right_invert), t));
    }

    TEST_CASE("join identifies two wall pairs") {
        const Tile a = instantiate(tmpl("H", "dL"), 0), b = instantiate(tmpl("VIA", "L"), 1);
        const Tile j = join(a, b);
        CHECK(j.body.graph.order() == a.body.graph.order() + b.body.graph.order() - 2);
        CHECK(j.left_wall.size() == 2);
        const Multigraph m = cyclize(j).graph;
        CHECK(m.order() == a.body.graph.order() + b.body.graph.order() - 4);
    }

    TEST_CASE("join is associative up to vertex order") {
        const Tile a = instantiate(tmpl("DD", "L"), 0), b = instantiate(tmpl("AV", "dL"), 1),
                   c = instantiate(tmpl("H", "L"), 2);
        const Tile left = join(join(a, b), c), right = join(a, join(b, c));
        CHECK(isomorphic(left.body.graph, WallPair{left.left_wall, left.right_wall}, right.body.graph,
                         WallPair{right.left_wall, right.right_wall}));
    }

    TEST_CASE("mismatched walls are rejected") {
        Tile a = instantiate(tmpl("DD", "L"), 0), b = instantiate(tmpl("DD", "L"), 1);
        b.left_wall.push_back(b.left_wall.front());
        CHECK_THROWS_AS(join(a, b), ValidationError);
        a.right_wall.pop_back();
        CHECK_THROWS_AS(cyclize(a), ValidationError);
    }

    TEST_CASE("cyclizing one frame-only tile keeps parallel edges") {
        const LabeledMultigraph m = cyclize(instantiate(tmpl("DD", "dL"), 0));
        bool parallel = false;
        for (const auto& [e, k] : m.graph.edges()) parallel |= k > 1;
        CHECK(parallel);
    }

    TEST_CASE("suppression") {
        LabeledMultigraph path;
        path.graph = Multigraph(3);
        path.graph.add_edge(0, 1);
        path.graph.add_edge(1, 2);
        path.labels = {{{0, "a"}}, {{0, "x"}}, {{0, "b"}}};
        const LabeledMultigraph s = suppress_degree2(path);
        CHECK(s.graph.order() == 2);
        CHECK(s.graph.multiplicity(0, 1) == 1);

        const Graph k4 = complete_graph(4);
        LabeledMultigraph dense;
        dense.graph = Multigraph(4);
        for (const auto& e : k4.edges()) dense.graph.add_edge(e.u, e.v);
        dense.labels.resize(4);
        CHECK(suppress_degree2(dense).graph == dense.graph);
    }

    TEST_CASE("suppression can create a parallel edge") {
        // a-x-b plus the edge ab; a doubled edge to c keeps a and b above degree 2.
        LabeledMultigraph h;
        h.labels.resize(4);
        h.graph = Multigraph(4);
        h.graph.add_edge(0, 1);
        h.graph.add_edge(1, 2);
        h.graph.add_edge(0, 2);
        h.graph.add_edge(0, 3, 2);
        h.graph.add_edge(2, 3, 2);
        const LabeledMultigraph s = suppress_degree2(h);
        CHECK(s.graph.order() == 3);
        CHECK(s.graph.multiplicity(0, 1) == 2);
    }

    TEST_CASE("simplify_parallel") {
        LabeledMultigraph m;
        m.graph = Multigraph(2);
        m.graph.add_edge(0, 1, 2);
        m.labels.resize(2);
        CHECK(simplify_parallel(m).graph.size() == 1);
        LabeledMultigraph empty;
        CHECK(simplify_parallel(empty).graph.order() == 0);
    }

    TEST_CASE("built graphs") {
        const LabeledGraph g4 = build_graph(parse_signature("HdLHdLHdL"));
        CHECK(g4.graph.order() == 18);
        const LabeledGraph g2 = build_graph(parse_signature("AIVLAIVLAIVL"));
        CHECK(is_3_connected(g2.graph));
        CHECK(g2.graph.min_degree() >= 3);
        Signature one;
        one.tiles.push_back({"DD", FrameKind::L});
        CHECK_THROWS_AS(build_graph(one), ValidationError);
    }

    TEST_CASE("built graphs are simple, 3-connected and merge at most two tiles per vertex") {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const Signature sig = random_signature(3 + 2 * (seed % 3), {}, seed);
            CAPTURE(sig.text());
            const LabeledGraph g = build_graph(sig);
            CHECK(is_connected(g.graph));
            CHECK(g.graph.min_degree() >= 3);
            CHECK(is_3_connected(g.graph));
            for (const auto& h : g.labels) {
                std::set<int> tiles;
                for (const auto& p : h) tiles.insert(p.tile);
                CHECK(tiles.size() <= 2);
            }
        }
    }

    TEST_CASE("vertex count grows by six per HdL tile") {
        for (int n : {3, 5, 7}) {
            Signature sig;
            for (int i = 0; i < n; ++i) sig.tiles.push_back({"H", FrameKind::dL});
            CHECK(build_graph(sig).graph.order() == static_cast<std::size_t>(6 * n));
        }
    }

    TEST_CASE("names and exports are deterministic") {
        const LabeledGraph g = build_graph(parse_signature("VIAdLDDLHL"));
        CHECK(to_json(g) == to_json(build_graph(parse_signature("VIAdLDDLHL"))));
        CHECK(to_dot(g).rfind("graph G {", 0) == 0);
        for (Vertex v = 0; v < static_cast<Vertex>(g.graph.order()); ++v) {
            CHECK(g.full_name(v).rfind(g.name(v), 0) == 0);
            CHECK(g.find(g.labels[v].front()) == std::vector<Vertex>{v});
        }
        for (Vertex v = 1; v < static_cast<Vertex>(g.graph.order()); ++v) CHECK(g.labels[v - 1] < g.labels[v]);
    }

    TEST_CASE("plain alternation without the final wall inversion gives a different graph") {
        const TileTemplate t = tmpl("DD", "L");
        Tile acc;
        for (int i = 0; i < 3; ++i) {
            Tile x = instantiate(t, i);
            if (i % 2) x = transform(x, TransformMode::both_invert);
            acc = i ? join(acc, x) : x;
        }
        const LabeledGraph plain = finalize_graph(suppress_degree2(cyclize(acc)));
        CHECK_FALSE(isomorphic(plain.graph, build_graph(parse_signature("DDLDDLDDL")).graph));
    }
}
