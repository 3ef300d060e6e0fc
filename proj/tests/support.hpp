#ifndef DVBC_TESTS_SUPPORT_HPP
#define DVBC_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "dvbc/generate.hpp"
#include "dvbc/graph.hpp"
#include "dvbc/rng.hpp"

namespace dvbc::testing {

// Weights given in units (doubles with <= 3 fractional digits).
inline Graph make_graph(std::size_t n, const std::vector<std::tuple<NodeId, NodeId, double>>& edges) {
    std::vector<Edge> parsed;
    parsed.reserve(edges.size());
    for (const auto& [u, v, w] : edges) {
        const std::int64_t ticks = static_cast<std::int64_t>(w * 1000.0 + 0.5);
        parsed.push_back({u, v, Weight::from_raw(ticks)});
    }
    return Graph::from_edges(n, parsed, 3);
}

inline Graph path_graph(std::size_t n) {
    std::vector<std::tuple<NodeId, NodeId, double>> edges;
    for (std::size_t v = 0; v + 1 < n; ++v)
        edges.push_back({static_cast<NodeId>(v), static_cast<NodeId>(v + 1), 1.0});
    return make_graph(n, edges);
}

inline Graph star_graph(std::size_t leaves) {
    std::vector<std::tuple<NodeId, NodeId, double>> edges;
    for (std::size_t v = 1; v <= leaves; ++v) edges.push_back({0, static_cast<NodeId>(v), 1.0});
    return make_graph(leaves + 1, edges);
}

inline Graph complete_graph(std::size_t n) {
    std::vector<std::tuple<NodeId, NodeId, double>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), 1.0});
    return make_graph(n, edges);
}

inline WeightAssignment weighted_set_125() {
    WeightAssignment w;
    w.kind = WeightAssignment::Kind::random_from_set;
    return w;
}

// Small random connected graph, optionally weighted from {1,2,5}; used by
// the n<=8 enumeration sweeps.
inline Graph random_small_graph(std::size_t n, std::uint64_t seed, bool weighted) {
    Graph g = generate_erdos_renyi(n, 0.45, seed);
    if (!weighted) return g;
    return assign_weights(g, weighted_set_125(), derive_seed(seed, SeedStream::weights));
}

}  // namespace dvbc::testing

#endif
