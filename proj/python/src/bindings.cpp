#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tcc/bounds.hpp"
#include "tcc/criticality.hpp"
#include "tcc/error.hpp"
#include "tcc/exact.hpp"
#include "tcc/families.hpp"
#include "tcc/sweep.hpp"
#include "tcc/tilealg.hpp"

namespace py = pybind11;
using namespace tcc;

namespace {

py::dict counts_dict(const SymbolCounts& c) {
    py::dict d;
    d["A"] = c.A, d["B"] = c.B, d["D"] = c.D, d["H"] = c.H, d["I"] = c.I, d["V"] = c.V;
    d["L"] = c.L, d["d"] = c.d, d["AIV"] = c.AIV, d["VIA"] = c.VIA;
    return d;
}

Graph graph_from(std::size_t order, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g(order);
    for (const auto& [u, v] : edges) {
        if (!g.has_vertex(u) || !g.has_vertex(v) || u == v)
            throw ValidationError("invalid edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        g.add_edge(u, v);
    }
    return g;
}

Budget budget_of(std::uint64_t max_nodes, double max_seconds) { return Budget{max_nodes, max_seconds}; }

py::dict solve_dict(const SolveResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["witness"] = r.witness;
    d["status"] = std::string(to_string(r.status));
    d["nodes"] = r.nodes_explored;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Native core of the tcc package";

    auto base = py::register_exception<Error>(m, "TccError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<VerificationError>(m, "VerificationError", base.ptr());
    py::register_exception<GuardError>(m, "GuardError", base.ptr());
    py::register_exception<IoError>(m, "IoError", base.ptr());

    m.def("parse", [](const std::string& text) {
        const Signature sig = parse_signature(text);
        py::dict d;
        d["signature"] = sig.text();
        std::vector<std::string> tiles;
        for (const auto& t : sig.tiles) tiles.push_back(t.text());
        d["tiles"] = tiles;
        d["counts"] = counts_dict(counts(sig));
        return d;
    }, py::arg("signature"));

    m.def("graph_json", [](const std::string& text) { return to_json(build_graph(parse_signature(text))); },
          py::arg("signature"));
    m.def("graph_dot", [](const std::string& text) { return to_dot(build_graph(parse_signature(text))); },
          py::arg("signature"));

    m.def("bounds_json", [](const std::string& text, bool exact, std::uint64_t max_nodes, double max_seconds) {
        BoundsOptions o;
        o.compute_exact = exact;
        o.budget = budget_of(max_nodes, max_seconds);
        py::gil_scoped_release release;
        return bounds_report(parse_signature(text), o).to_json();
    }, py::arg("signature"), py::arg("exact") = false, py::arg("max_nodes") = Budget{}.max_nodes,
       py::arg("max_seconds") = Budget{}.max_seconds);

    m.def("gamma", [](std::size_t order, const std::vector<std::pair<Vertex, Vertex>>& edges, std::uint64_t max_nodes,
                      double max_seconds) { return solve_dict(gamma_exact(graph_from(order, edges), budget_of(max_nodes, max_seconds))); },
          py::arg("order"), py::arg("edges"), py::arg("max_nodes") = Budget{}.max_nodes,
          py::arg("max_seconds") = Budget{}.max_seconds);
    m.def("alpha", [](std::size_t order, const std::vector<std::pair<Vertex, Vertex>>& edges, std::uint64_t max_nodes,
                      double max_seconds) { return solve_dict(alpha_exact(graph_from(order, edges), budget_of(max_nodes, max_seconds))); },
          py::arg("order"), py::arg("edges"), py::arg("max_nodes") = Budget{}.max_nodes,
          py::arg("max_seconds") = Budget{}.max_seconds);

    m.def("critical_json", [](const std::string& text) {
        const Multigraph g = build_multigraph(parse_signature(text)).graph;
        py::gil_scoped_release release;
        return to_json(verify_2cc(g));
    }, py::arg("signature"));
    m.def("critical_graph_json", [](std::size_t order, const std::vector<std::pair<Vertex, Vertex>>& edges) {
        const Graph g = graph_from(order, edges);
        py::gil_scoped_release release;
        return to_json(verify_2cc(g));
    }, py::arg("order"), py::arg("edges"));

    m.def("family", [](const std::string& spec) {
        const FamilyInstance f = family_instance(spec);
        py::dict d;
        d["family"] = f.spec();
        d["signature"] = f.signature.text();
        py::dict expected;
        if (f.expected.gamma) expected["gamma"] = *f.expected.gamma;
        if (f.expected.alpha) expected["alpha"] = *f.expected.alpha;
        if (f.expected.vertex_count) expected["vertices"] = *f.expected.vertex_count;
        d["expected"] = expected;
        d["sharp_bound"] = f.expected.sharp_bound;
        return d;
    }, py::arg("spec"));

    m.def("sweep_jsonl", [](std::size_t tiles, std::size_t samples, std::uint64_t seed, std::size_t start,
                            unsigned threads, bool check_critical) {
        SweepOptions o;
        o.tiles = tiles;
        o.samples = samples;
        o.seed = seed;
        o.start = start;
        o.threads = threads;
        o.check_critical = check_critical;
        std::vector<std::string> lines;
        py::gil_scoped_release release;
        run_sweep(o, [&](const SweepRecord& r) { lines.push_back(r.to_jsonl()); });
        return lines;
    }, py::arg("tiles"), py::arg("samples"), py::arg("seed") = 0, py::arg("start") = 0, py::arg("threads") = 0,
       py::arg("check_critical") = false);

    m.def("catalog_text", [] { return Catalog::bundled_text(); });
}
