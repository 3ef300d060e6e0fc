#ifndef DVBC_ORACLE_HPP
#define DVBC_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "dvbc/arith.hpp"
#include "dvbc/graph.hpp"
#include "dvbc/graph_metrics.hpp"

namespace dvbc {

// Ground-truth betweenness data. sigma and the per-source contributions are
// always filled; the through-node and through-arc tensors only exist in
// brute-force mode (tiny graphs).
template <class M>
struct ExactCentrality {
    using Count = typename M::Count;
    using Real = typename M::Real;

    std::size_t n = 0;
    std::vector<Count> sigma;       // n*n, sigma[s*n+t], sigma[s*n+s] = 1
    std::vector<Real> bc_contrib;   // n*n, [v*n+s] = contribution of source s at v
    std::vector<Real> bc_raw;       // per node, sum of contributions
    std::vector<Real> bc;           // bc_raw / ((n-1)(n-2))
    bool has_through = false;
    std::vector<Count> sigma_through;  // n*n*n, [(s*n+t)*n+v]
    std::vector<std::pair<NodeId, NodeId>> arcs;  // both directions of every edge
    std::vector<Count> sigma_arc;   // n*n*arcs.size(), [(s*n+t)*arcs.size()+a]

    const Count& sigma_at(NodeId s, NodeId t) const { return sigma[static_cast<std::size_t>(s) * n + t]; }
    const Real& contribution(NodeId v, NodeId s) const { return bc_contrib[static_cast<std::size_t>(v) * n + s]; }
    const Count& through(NodeId s, NodeId t, NodeId v) const {
        return sigma_through[(static_cast<std::size_t>(s) * n + t) * n + v];
    }
};

// Centralized Brandes: one shortest-path DAG pass per source with exact
// Weight arithmetic, then dependency accumulation in decreasing-distance
// order.
template <class M>
ExactCentrality<M> brandes(const Graph& g) {
    using Count = typename M::Count;
    using Real = typename M::Real;
    const std::size_t n = g.node_count();
    if (n < 3) throw std::invalid_argument("betweenness needs n >= 3");

    ExactCentrality<M> out;
    out.n = n;
    out.sigma.assign(n * n, Count{});
    out.bc_contrib.assign(n * n, Real{});
    out.bc_raw.assign(n, Real{});
    out.bc.assign(n, Real{});

    std::vector<Weight> dist(n);
    std::vector<Count> sigma(n);
    std::vector<std::vector<NodeId>> preds(n);
    std::vector<Real> delta(n);
    std::vector<NodeId> order(n);

    for (NodeId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), Weight::infinity());
        std::fill(sigma.begin(), sigma.end(), Count{});
        for (auto& p : preds) p.clear();
        std::fill(delta.begin(), delta.end(), Real{});

        dist[s] = Weight::zero();
        sigma[s] = Count{1};
        using Entry = std::pair<std::int64_t, NodeId>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
        frontier.push({0, s});
        while (!frontier.empty()) {
            auto [d, v] = frontier.top();
            frontier.pop();
            if (d != dist[v].raw()) continue;
            for (const EdgeRef& e : g.neighbors(v)) {
                const Weight candidate = dist[v] + e.w;
                if (candidate < dist[e.to]) {
                    dist[e.to] = candidate;
                    sigma[e.to] = sigma[v];
                    preds[e.to].assign(1, v);
                    frontier.push({candidate.raw(), e.to});
                } else if (candidate == dist[e.to]) {
                    sigma[e.to] += sigma[v];
                    preds[e.to].push_back(v);
                }
            }
        }

        for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<NodeId>(i);
        std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return dist[a] > dist[b]; });
        // Ties in distance are safe in arbitrary order: with positive
        // weights, DAG edges only connect distinct distance levels.
        for (NodeId u : order) {
            for (NodeId v : preds[u])
                delta[v] += M::to_real(sigma[v]) *
                            ((M::real_from_int(1) + delta[u]) / M::to_real(sigma[u]));
        }
        for (NodeId v = 0; v < n; ++v) {
            out.sigma[static_cast<std::size_t>(s) * n + v] = sigma[v];
            if (v != s) {
                out.bc_contrib[static_cast<std::size_t>(v) * n + s] = delta[v];
                out.bc_raw[v] += delta[v];
            }
        }
    }
    const auto pairs = M::real_from_int(static_cast<long>((n - 1) * (n - 2)));
    for (NodeId v = 0; v < n; ++v) out.bc[v] = out.bc_raw[v] / pairs;
    return out;
}

// Exhaustive simple-path enumeration for tiny graphs (n <= 10): the
// independent check for everything else. Optionally reports the enumerated
// distance/hop metrics.
template <class M>
ExactCentrality<M> brute_force(const Graph& g, GraphMetrics* enumerated_metrics = nullptr) {
    using Count = typename M::Count;
    using Real = typename M::Real;
    const std::size_t n = g.node_count();
    if (n > 10) throw std::invalid_argument("brute force is limited to n <= 10");
    if (n < 3) throw std::invalid_argument("betweenness needs n >= 3");

    ExactCentrality<M> out;
    out.n = n;
    out.sigma.assign(n * n, Count{});
    out.bc_contrib.assign(n * n, Real{});
    out.bc_raw.assign(n, Real{});
    out.bc.assign(n, Real{});
    out.has_through = true;
    out.sigma_through.assign(n * n * n, Count{});
    for (const Edge& e : g.edges()) {
        out.arcs.push_back({e.u, e.v});
        out.arcs.push_back({e.v, e.u});
    }
    out.sigma_arc.assign(n * n * out.arcs.size(), Count{});
    auto arc_index = [&](NodeId u, NodeId v) {
        return static_cast<std::size_t>(
            std::find(out.arcs.begin(), out.arcs.end(), std::make_pair(u, v)) - out.arcs.begin());
    };

    GraphMetrics metrics;
    metrics.n = n;
    metrics.dist.assign(n * n, Weight::infinity());
    metrics.minhop.assign(n * n, 0);
    metrics.maxhop.assign(n * n, 0);
    metrics.ecc_hop.assign(n, 0);
    metrics.ecc_maxhop.assign(n, 0);
    for (NodeId v = 0; v < n; ++v) metrics.dist[static_cast<std::size_t>(v) * n + v] = Weight::zero();

    for (NodeId s = 0; s < n; ++s) {
        out.sigma[static_cast<std::size_t>(s) * n + s] = Count{1};
        out.sigma_through[(static_cast<std::size_t>(s) * n + s) * n + s] = Count{1};
    }

    std::vector<NodeId> path;
    std::vector<char> visited(n, 0);
    for (NodeId s = 0; s < n; ++s) {
        for (NodeId t = s + 1; t < n; ++t) {
            Weight best = Weight::infinity();
            Count count{};
            std::uint32_t min_hops = 0, max_hops = 0;
            std::vector<Count> through(n, Count{});
            std::vector<Count> arc_count(out.arcs.size(), Count{});

            path.assign(1, s);
            visited.assign(n, 0);
            visited[s] = 1;
            auto dfs = [&](auto&& self, NodeId v, Weight length) -> void {
                if (v == t) {
                    if (length < best) {
                        best = length;
                        count = Count{};
                        std::fill(through.begin(), through.end(), Count{});
                        std::fill(arc_count.begin(), arc_count.end(), Count{});
                        min_hops = max_hops = static_cast<std::uint32_t>(path.size() - 1);
                    }
                    if (length == best) {
                        count += Count{1};
                        for (NodeId w : path) through[w] += Count{1};
                        for (std::size_t i = 0; i + 1 < path.size(); ++i)
                            arc_count[arc_index(path[i], path[i + 1])] += Count{1};
                        min_hops = std::min(min_hops, static_cast<std::uint32_t>(path.size() - 1));
                        max_hops = std::max(max_hops, static_cast<std::uint32_t>(path.size() - 1));
                    }
                    return;
                }
                for (const EdgeRef& e : g.neighbors(v)) {
                    if (visited[e.to]) continue;
                    const Weight extended = length + e.w;
                    if (extended > best) continue;  // positive weights only grow
                    visited[e.to] = 1;
                    path.push_back(e.to);
                    self(self, e.to, extended);
                    path.pop_back();
                    visited[e.to] = 0;
                }
            };
            dfs(dfs, s, Weight::zero());

            const std::size_t st = static_cast<std::size_t>(s) * n + t;
            const std::size_t ts = static_cast<std::size_t>(t) * n + s;
            out.sigma[st] = count;
            out.sigma[ts] = count;
            metrics.dist[st] = metrics.dist[ts] = best;
            metrics.minhop[st] = metrics.minhop[ts] = min_hops;
            metrics.maxhop[st] = metrics.maxhop[ts] = max_hops;
            for (NodeId v = 0; v < n; ++v) {
                out.sigma_through[st * n + v] = through[v];
                out.sigma_through[ts * n + v] = through[v];
            }
            for (std::size_t a = 0; a < out.arcs.size(); ++a) {
                out.sigma_arc[st * out.arcs.size() + a] = arc_count[a];
                // reversed traversal direction for the mirrored pair
                out.sigma_arc[ts * out.arcs.size() + arc_index(out.arcs[a].second, out.arcs[a].first)] =
                    arc_count[a];
            }
        }
    }

    for (NodeId v = 0; v < n; ++v)
        for (NodeId s = 0; s < n; ++s) {
            if (s == v) continue;
            Real total{};
            for (NodeId t = 0; t < n; ++t) {
                if (t == v || t == s) continue;
                const std::size_t st = static_cast<std::size_t>(s) * n + t;
                const Count& via = out.sigma_through[st * n + v];
                if (M::count_is_zero(via)) continue;
                total += M::to_real(via) / M::to_real(out.sigma[st]);
            }
            out.bc_contrib[static_cast<std::size_t>(v) * n + s] = total;
            out.bc_raw[v] += total;
        }
    const auto pairs = M::real_from_int(static_cast<long>((n - 1) * (n - 2)));
    for (NodeId v = 0; v < n; ++v) out.bc[v] = out.bc_raw[v] / pairs;

    if (enumerated_metrics) {
        for (NodeId v = 0; v < n; ++v)
            for (NodeId t = 0; t < n; ++t) {
                metrics.ecc_hop[v] = std::max(metrics.ecc_hop[v], metrics.minhop[static_cast<std::size_t>(v) * n + t]);
                metrics.ecc_maxhop[v] =
                    std::max(metrics.ecc_maxhop[v], metrics.maxhop[static_cast<std::size_t>(v) * n + t]);
            }
        for (NodeId v = 0; v < n; ++v) {
            metrics.diam = std::max(metrics.diam, metrics.ecc_hop[v]);
            metrics.Diam = std::max(metrics.Diam, metrics.ecc_maxhop[v]);
        }
        *enumerated_metrics = std::move(metrics);
    }
    return out;
}

struct IdentityReport {
    std::size_t checks = 0;
    std::size_t violations = 0;
    std::string first_violation;
    bool ok() const { return violations == 0; }
};

// Structural identities of shortest-path counting, checked with exact
// arithmetic on brute-force results: the through-count factorization (node
// and arc forms), the next-hop decomposition of sigma, and for unit weights
// the aggregate interior-vertex identity.
template <class M>
IdentityReport check_identities(const ExactCentrality<M>& e, const Graph& g,
                                const GraphMetrics& m) {
    using Real = typename M::Real;
    if (!e.has_through) throw std::invalid_argument("identities need brute-force tensors");
    const std::size_t n = e.n;
    IdentityReport report;
    auto fail = [&](const std::string& what) {
        ++report.violations;
        if (report.first_violation.empty()) report.first_violation = what;
    };

    for (NodeId s = 0; s < n; ++s)
        for (NodeId t = 0; t < n; ++t) {
            if (s == t) continue;
            const std::size_t st = static_cast<std::size_t>(s) * n + t;
            for (NodeId v = 0; v < n; ++v) {
                const auto& via = e.sigma_through[st * n + v];
                if (M::count_is_zero(via)) continue;
                ++report.checks;
                if (via != e.sigma_at(s, v) * e.sigma_at(v, t))
                    fail("through-count factorization fails at s=" + std::to_string(s) +
                         " t=" + std::to_string(t) + " v=" + std::to_string(v));
            }
            for (std::size_t a = 0; a < e.arcs.size(); ++a) {
                const auto& via = e.sigma_arc[st * e.arcs.size() + a];
                if (M::count_is_zero(via)) continue;
                ++report.checks;
                if (via != e.sigma_at(s, e.arcs[a].first) * e.sigma_at(e.arcs[a].second, t))
                    fail("arc factorization fails at s=" + std::to_string(s) + " t=" + std::to_string(t));
            }
        }

    for (NodeId v = 0; v < n; ++v)
        for (NodeId t = 0; t < n; ++t) {
            if (v == t) continue;
            typename M::Count total{};
            for (const EdgeRef& edge : g.neighbors(v))
                if (oracle_next_hop(m, v, edge.to, edge.w, t)) total += e.sigma_at(edge.to, t);
            ++report.checks;
            if (total != e.sigma_at(v, t))
                fail("next-hop decomposition fails at v=" + std::to_string(v) + " t=" + std::to_string(t));
        }

    if (g.unit_weights()) {
        const std::int64_t unit = ticks_per_unit(g.tick_digits());
        Real lhs{};
        for (NodeId v = 0; v < n; ++v) lhs += e.bc_raw[v];
        Real rhs{};
        for (NodeId s = 0; s < n; ++s)
            for (NodeId t = 0; t < n; ++t) {
                if (s == t) continue;
                rhs += M::real_from_int(static_cast<long>(m.dist_at(s, t).raw() / unit - 1));
            }
        ++report.checks;
        if (lhs != rhs) fail("aggregate interior-vertex identity fails");
    }
    return report;
}

// Link-sensing frequency rule: sqrt(degree / bc). A zero centrality maps to
// the +infinity sentinel.
double optimal_frequency(std::size_t degree, double bc);

}  // namespace dvbc

#endif
