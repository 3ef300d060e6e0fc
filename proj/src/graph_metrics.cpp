#include "dvbc/graph_metrics.hpp"

#include <algorithm>
#include <queue>

namespace dvbc {

std::vector<Weight> single_source_distances(const Graph& g, NodeId source) {
    const std::size_t n = g.node_count();
    std::vector<Weight> dist(n, Weight::infinity());
    using Entry = std::pair<std::int64_t, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
    dist[source] = Weight::zero();
    frontier.push({0, source});
    while (!frontier.empty()) {
        auto [d, v] = frontier.top();
        frontier.pop();
        if (d != dist[v].raw()) continue;
        for (const EdgeRef& e : g.neighbors(v)) {
            Weight candidate = dist[v] + e.w;
            if (candidate < dist[e.to]) {
                dist[e.to] = candidate;
                frontier.push({candidate.raw(), e.to});
            }
        }
    }
    return dist;
}

GraphMetrics compute_metrics(const Graph& g) {
    const std::size_t n = g.node_count();
    GraphMetrics m;
    m.n = n;
    m.dist.assign(n * n, Weight::infinity());
    m.minhop.assign(n * n, 0);
    m.maxhop.assign(n * n, 0);
    m.ecc_hop.assign(n, 0);
    m.ecc_maxhop.assign(n, 0);

    std::vector<NodeId> order(n);
    for (NodeId s = 0; s < n; ++s) {
        std::vector<Weight> dist = single_source_distances(g, s);
        for (std::size_t t = 0; t < n; ++t) m.dist[s * n + t] = dist[t];

        // Hop recurrences over the shortest-path DAG, in nondecreasing
        // distance order. Positive weights put every predecessor strictly
        // closer to s, so each node's value is final when visited.
        for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<NodeId>(i);
        std::sort(order.begin(), order.end(),
                  [&](NodeId a, NodeId b) { return dist[a] < dist[b]; });
        std::uint32_t* minhop = &m.minhop[s * n];
        std::uint32_t* maxhop = &m.maxhop[s * n];
        for (NodeId t : order) {
            if (t == s) continue;
            std::uint32_t best_min = 0, best_max = 0;
            bool found = false;
            for (const EdgeRef& e : g.neighbors(t)) {
                if (dist[e.to] + e.w != dist[t]) continue;
                if (!found) {
                    best_min = minhop[e.to];
                    best_max = maxhop[e.to];
                    found = true;
                } else {
                    best_min = std::min(best_min, minhop[e.to]);
                    best_max = std::max(best_max, maxhop[e.to]);
                }
            }
            minhop[t] = best_min + 1;
            maxhop[t] = best_max + 1;
        }
        for (std::size_t t = 0; t < n; ++t) {
            m.ecc_hop[s] = std::max(m.ecc_hop[s], minhop[t]);
            m.ecc_maxhop[s] = std::max(m.ecc_maxhop[s], maxhop[t]);
        }
        m.diam = std::max(m.diam, m.ecc_hop[s]);
        m.Diam = std::max(m.Diam, m.ecc_maxhop[s]);
    }
    return m;
}

}  // namespace dvbc
