#ifndef DVBC_GRAPH_METRICS_HPP
#define DVBC_GRAPH_METRICS_HPP

#include <cstdint>
#include <vector>

#include "dvbc/graph.hpp"

namespace dvbc {

// All-pairs shortest-path structure of a connected graph: exact distances,
// the minimum and maximum edge counts over shortest paths (minhop / maxhop),
// the hop diameters derived from them, and per-node eccentricities.
struct GraphMetrics {
    std::size_t n = 0;
    std::vector<Weight> dist;          // n*n, row-major
    std::vector<std::uint32_t> minhop; // n*n
    std::vector<std::uint32_t> maxhop; // n*n
    std::uint32_t diam = 0;            // max over pairs of minhop
    std::uint32_t Diam = 0;            // max over pairs of maxhop
    std::vector<std::uint32_t> ecc_hop;     // per node, max_t minhop(v,t)
    std::vector<std::uint32_t> ecc_maxhop;  // per node, max_t maxhop(v,t)

    Weight dist_at(NodeId s, NodeId t) const { return dist[static_cast<std::size_t>(s) * n + t]; }
    std::uint32_t minhop_at(NodeId s, NodeId t) const { return minhop[static_cast<std::size_t>(s) * n + t]; }
    std::uint32_t maxhop_at(NodeId s, NodeId t) const { return maxhop[static_cast<std::size_t>(s) * n + t]; }
};

GraphMetrics compute_metrics(const Graph& g);

// Single-source exact distances (used where a full metrics matrix is overkill).
std::vector<Weight> single_source_distances(const Graph& g, NodeId source);

// True next-hop set membership: u is a neighbor of v on some shortest v->t path.
inline bool oracle_next_hop(const GraphMetrics& m, NodeId v, NodeId u, Weight edge_w, NodeId t) {
    return m.dist_at(v, t) == edge_w + m.dist_at(u, t);
}

// True previous-hop set membership: v lies on some shortest u->t path.
inline bool oracle_prev_hop(const GraphMetrics& m, NodeId v, NodeId u, Weight edge_w, NodeId t) {
    return m.dist_at(u, t) == edge_w + m.dist_at(v, t);
}

}  // namespace dvbc

#endif
