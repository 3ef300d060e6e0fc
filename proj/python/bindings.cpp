#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dvbc/analysis.hpp"
#include "dvbc/experiment.hpp"
#include "dvbc/generate.hpp"
#include "dvbc/graph.hpp"
#include "dvbc/graph_metrics.hpp"
#include "dvbc/oracle.hpp"
#include "dvbc/simulator.hpp"

namespace py = pybind11;
using namespace dvbc;

namespace {

py::dict metrics_dict(const Graph& g, bool include_matrices) {
    const GraphMetrics m = compute_metrics(g);
    py::dict out;
    out["diam"] = m.diam;
    out["Diam"] = m.Diam;
    out["ecc_hop"] = m.ecc_hop;
    out["ecc_maxhop"] = m.ecc_maxhop;
    if (include_matrices) {
        const std::size_t n = m.n;
        std::vector<std::vector<double>> dist(n, std::vector<double>(n));
        std::vector<std::vector<std::uint32_t>> minhop(n, std::vector<std::uint32_t>(n));
        std::vector<std::vector<std::uint32_t>> maxhop(n, std::vector<std::uint32_t>(n));
        for (NodeId s = 0; s < n; ++s)
            for (NodeId t = 0; t < n; ++t) {
                dist[s][t] = m.dist_at(s, t).to_double(g.tick_digits());
                minhop[s][t] = m.minhop_at(s, t);
                maxhop[s][t] = m.maxhop_at(s, t);
            }
        out["dist"] = dist;
        out["minhop"] = minhop;
        out["maxhop"] = maxhop;
    }
    return out;
}

py::dict brandes_dict(const Graph& g) {
    const auto e = brandes<Float64Mode>(g);
    py::dict out;
    out["bc"] = e.bc;
    out["bc_raw"] = e.bc_raw;
    return out;
}

py::dict simulate_dict(const Graph& g, const std::string& mode, const std::string& arithmetic,
                       const std::string& schedule, std::uint64_t seed, std::size_t max_phases,
                       bool with_oracle) {
    Schedule sched;
    if (schedule == "canonical") {
        sched = Schedule::canonical(max_phases);
    } else if (schedule == "shuffled" || schedule == "shuffle") {
        sched = Schedule::shuffled(seed, max_phases);
    } else {
        throw ParseError("unknown schedule '" + schedule + "'");
    }
    const RunOutcome outcome =
        execute_run(g, parse_mode(mode), parse_arithmetic(arithmetic), sched);
    const GraphMetrics m = compute_metrics(g);

    py::dict out;
    out["converged"] = outcome.converged;
    out["quiescence_phase"] = outcome.quiescence_phase;
    out["c_quiescence_phase"] = outcome.c_quiescence_phase;
    out["phases_executed"] = outcome.phases_executed;
    out["messages"] = outcome.messages;
    out["elementary_ops"] = outcome.elementary_ops;
    out["centrality"] = outcome.final_centrality;
    out["t_d"] = outcome.t_d;
    out["t_c"] = outcome.t_c;
    out["diam"] = m.diam;
    out["Diam"] = m.Diam;
    out["bound"] = 2 * static_cast<std::size_t>(m.Diam) + 1;
    out["bound_ok"] = outcome.converged && outcome.quiescence_phase <= 2 * static_cast<std::size_t>(m.Diam) + 1;
    if (with_oracle && g.node_count() >= 3) {
        const auto oracle = brandes<Float64Mode>(g);
        out["bc"] = oracle.bc;
        std::vector<double> errors;
        errors.reserve(outcome.centrality_by_phase.size());
        for (const auto& estimate : outcome.centrality_by_phase)
            errors.push_back(global_error(estimate, oracle.bc_raw));
        out["global_error_by_phase"] = errors;
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "distributed betweenness centrality: graphs, simulator, oracles";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<OverflowError>(m, "CountOverflowError", PyExc_OverflowError);
    py::register_exception<MetricUndefinedError>(m, "MetricUndefinedError", PyExc_ValueError);
    py::register_exception<NotConvergedError>(m, "NotConvergedError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("tick_digits", &Graph::tick_digits)
        .def("degree", [](const Graph& g, NodeId v) { return g.degree(v); })
        .def("unit_weights", &Graph::unit_weights)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::tuple<NodeId, NodeId, double>> out;
                 out.reserve(g.edge_count());
                 for (const Edge& e : g.edges())
                     out.emplace_back(e.u, e.v, e.w.to_double(g.tick_digits()));
                 return out;
             })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(nodes=" << g.node_count() << ", edges=" << g.edge_count() << ")";
            return s.str();
        });

    m.def(
        "generate",
        [](const std::string& spec, const std::string& weights, const std::string& weight_probs,
           std::uint64_t seed, int tick_digits) {
            return generate(GeneratorSpec::parse(spec), parse_weight_assignment(weights, weight_probs),
                            seed, tick_digits);
        },
        py::arg("spec"), py::arg("weights") = "unit", py::arg("weight_probs") = "",
        py::arg("seed") = 1, py::arg("tick_digits") = 3,
        "Build a graph from a generator spec like 'cycle(6)' or 'er(100,0.05)'.");
    m.def(
        "load_edges",
        [](const std::string& text, int tick_digits) {
            std::istringstream in(text);
            return load_edge_list(in, tick_digits);
        },
        py::arg("text"), py::arg("tick_digits") = 3);
    m.def("load_edge_file", &load_edge_list_file, py::arg("path"), py::arg("tick_digits") = 3);
    m.def(
        "to_edge_text", [](const Graph& g) { return to_edge_list(g); }, py::arg("graph"));

    m.def("metrics", &metrics_dict, py::arg("graph"), py::arg("include_matrices") = false,
          "Hop/weight metrics: diam, Diam, eccentricities, optionally full matrices.");
    m.def("brandes", &brandes_dict, py::arg("graph"), "Exact betweenness (normalized and raw).");
    m.def("simulate", &simulate_dict, py::arg("graph"), py::arg("mode") = "fast",
          py::arg("arithmetic") = "float64", py::arg("schedule") = "canonical", py::arg("seed") = 0,
          py::arg("max_phases") = 0, py::arg("with_oracle") = true,
          "Run the synchronous protocol to quiescence and report convergence data.");
    m.def("optimal_frequency", &optimal_frequency, py::arg("degree"), py::arg("bc"),
          "Link-sensing frequency sqrt(degree/bc); +inf when bc is 0.");
}
