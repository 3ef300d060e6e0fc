#include "dvbc/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dvbc/rng.hpp"

namespace dvbc {

namespace {

constexpr int kConnectivityRetries = 1000;

Graph build_unit(std::size_t n, std::vector<Edge>&& edges, int tick_digits = 3) {
    const Weight one = Weight::from_raw(ticks_per_unit(tick_digits));
    for (Edge& e : edges) e.w = one;
    return Graph::from_edges(n, edges, tick_digits);
}

bool connected(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<std::vector<NodeId>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (NodeId u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++visited;
                stack.push_back(u);
            }
    }
    return visited == n;
}

// Draws random edge sets until connected; throws after the retry budget.
template <class Draw>
Graph generate_until_connected(std::size_t n, std::uint64_t seed, Draw&& draw) {
    for (int attempt = 0; attempt < kConnectivityRetries; ++attempt) {
        Rng rng(splitmix64(seed + static_cast<std::uint64_t>(attempt)));
        std::vector<Edge> edges = draw(rng);
        if (connected(n, edges)) return build_unit(n, std::move(edges));
    }
    throw ValidationError("no connected instance within " + std::to_string(kConnectivityRetries) +
                          " attempts");
}

}  // namespace

WeightAssignment WeightAssignment::from_set(std::vector<double> values,
                                            std::vector<double> probabilities) {
    WeightAssignment w;
    w.kind = Kind::random_from_set;
    if (values.empty()) throw ParseError("weight set is empty");
    if (probabilities.empty()) probabilities.assign(values.size(), 1.0);
    if (probabilities.size() != values.size())
        throw ParseError("weight set and probabilities differ in length");
    double total = std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
    if (!(total > 0)) throw ParseError("weight probabilities must sum to a positive value");
    for (double& p : probabilities) p /= total;
    w.values = std::move(values);
    w.probabilities = std::move(probabilities);
    return w;
}

Graph generate_grid(std::size_t width, std::size_t height) {
    if (width == 0 || height == 0) throw ValidationError("grid dimensions must be positive");
    auto id = [width](std::size_t x, std::size_t y) {
        return static_cast<NodeId>(y * width + x);
    };
    std::vector<Edge> edges;
    for (std::size_t y = 0; y < height; ++y)
        for (std::size_t x = 0; x < width; ++x) {
            if (x + 1 < width) edges.push_back({id(x, y), id(x + 1, y), Weight()});
            if (y + 1 < height) edges.push_back({id(x, y), id(x, y + 1), Weight()});
        }
    return build_unit(width * height, std::move(edges));
}

Graph generate_hypercube(std::size_t dimension) {
    if (dimension == 0 || dimension > 20) throw ValidationError("hypercube dimension must be in [1, 20]");
    const std::size_t n = std::size_t{1} << dimension;
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t bit = 0; bit < dimension; ++bit) {
            std::size_t u = v ^ (std::size_t{1} << bit);
            if (v < u) edges.push_back({static_cast<NodeId>(v), static_cast<NodeId>(u), Weight()});
        }
    return build_unit(n, std::move(edges));
}

Graph generate_binary_tree(std::size_t height) {
    if (height == 0) throw ValidationError("tree height must be positive");
    const std::size_t n = (std::size_t{1} << (height + 1)) - 1;
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v)
        edges.push_back({static_cast<NodeId>((v - 1) / 2), static_cast<NodeId>(v), Weight()});
    return build_unit(n, std::move(edges));
}

Graph generate_cycle(std::size_t n) {
    if (n < 3) throw ValidationError("cycle needs at least 3 nodes");
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < n; ++v)
        edges.push_back({static_cast<NodeId>(v), static_cast<NodeId>((v + 1) % n), Weight()});
    return build_unit(n, std::move(edges));
}

Graph generate_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    if (n < 2) throw ValidationError("erdos-renyi needs at least 2 nodes");
    if (!(p > 0.0) || p > 1.0) throw ValidationError("edge probability must be in (0, 1]");
    return generate_until_connected(n, seed, [n, p](Rng& rng) {
        std::vector<Edge> edges;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (rng.next_unit() < p)
                    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), Weight()});
        return edges;
    });
}

Graph generate_barabasi_albert(std::size_t n, std::size_t links_per_node, std::uint64_t seed) {
    if (links_per_node == 0) throw ValidationError("links per node must be positive");
    if (n < links_per_node + 1) throw ValidationError("need more nodes than links per node");
    // Preferential attachment via the repeated-endpoints list; the first new
    // node links to all of the m initial nodes.
    return generate_until_connected(n, seed, [n, links_per_node](Rng& rng) {
        std::vector<Edge> edges;
        std::vector<NodeId> endpoint_pool;
        for (std::size_t v = links_per_node; v < n; ++v) {
            std::vector<NodeId> targets;
            if (v == links_per_node) {
                for (std::size_t u = 0; u < links_per_node; ++u)
                    targets.push_back(static_cast<NodeId>(u));
            } else {
                while (targets.size() < links_per_node) {
                    NodeId u = endpoint_pool[rng.below(endpoint_pool.size())];
                    if (std::find(targets.begin(), targets.end(), u) == targets.end())
                        targets.push_back(u);
                }
            }
            for (NodeId u : targets) {
                edges.push_back({u, static_cast<NodeId>(v), Weight()});
                endpoint_pool.push_back(u);
                endpoint_pool.push_back(static_cast<NodeId>(v));
            }
        }
        return edges;
    });
}

Graph generate_geometric(std::size_t n, double radius, std::uint64_t seed) {
    if (n < 2) throw ValidationError("geometric graph needs at least 2 nodes");
    if (!(radius > 0.0)) throw ValidationError("radius must be positive");
    return generate_until_connected(n, seed, [n, radius](Rng& rng) {
        std::vector<std::pair<double, double>> points(n);
        for (auto& [x, y] : points) {
            x = rng.next_unit();
            y = rng.next_unit();
        }
        std::vector<Edge> edges;
        const double r2 = radius * radius;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) {
                double dx = points[u].first - points[v].first;
                double dy = points[u].second - points[v].second;
                if (dx * dx + dy * dy <= r2)
                    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), Weight()});
            }
        return edges;
    });
}

Graph assign_weights(const Graph& g, const WeightAssignment& weights, std::uint64_t seed) {
    if (weights.kind == WeightAssignment::Kind::unit) return g;
    std::vector<std::int64_t> ticks;
    ticks.reserve(weights.values.size());
    for (double v : weights.values) {
        std::ostringstream text;
        text << v;
        ticks.push_back(parse_ticks(text.str(), g.tick_digits()));
    }
    std::vector<double> cumulative(weights.probabilities.size());
    std::partial_sum(weights.probabilities.begin(), weights.probabilities.end(), cumulative.begin());
    Rng rng(seed);
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges) {
        double u = rng.next_unit();
        std::size_t pick = cumulative.size() - 1;
        for (std::size_t i = 0; i < cumulative.size(); ++i)
            if (u < cumulative[i]) {
                pick = i;
                break;
            }
        e.w = Weight::from_raw(ticks[pick]);
    }
    return Graph::from_edges(g.node_count(), edges, g.tick_digits());
}

Graph generate(const GeneratorSpec& spec, const WeightAssignment& weights, std::uint64_t seed,
               int tick_digits) {
    const std::uint64_t graph_seed = derive_seed(seed, SeedStream::graph);
    Graph g = [&] {
        using Family = GeneratorSpec::Family;
        switch (spec.family) {
            case Family::grid: return generate_grid(spec.a, spec.b);
            case Family::hypercube: return generate_hypercube(spec.a);
            case Family::binary_tree: return generate_binary_tree(spec.a);
            case Family::cycle: return generate_cycle(spec.a);
            case Family::erdos_renyi: return generate_erdos_renyi(spec.a, spec.x, graph_seed);
            case Family::barabasi_albert: return generate_barabasi_albert(spec.a, spec.b, graph_seed);
            case Family::geometric: return generate_geometric(spec.a, spec.x, graph_seed);
        }
        throw ValidationError("unknown generator family");
    }();
    (void)tick_digits;
    return assign_weights(g, weights, derive_seed(seed, SeedStream::weights));
}

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
    auto open = text.find('(');
    auto close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError("generator spec must look like family(args): '" + text + "'");
    std::string family = text.substr(0, open);
    std::vector<std::string> args;
    std::string arg;
    std::istringstream arg_stream(text.substr(open + 1, close - open - 1));
    while (std::getline(arg_stream, arg, ',')) args.push_back(arg);

    auto integer_at = [&](std::size_t i) -> std::uint64_t {
        if (i >= args.size()) throw ParseError("generator spec '" + text + "': missing argument");
        return std::stoull(args[i]);
    };
    auto real_at = [&](std::size_t i) -> double {
        if (i >= args.size()) throw ParseError("generator spec '" + text + "': missing argument");
        return std::stod(args[i]);
    };

    GeneratorSpec spec;
    try {
        if (family == "grid") {
            spec.family = Family::grid;
            spec.a = integer_at(0);
            spec.b = integer_at(1);
        } else if (family == "hypercube") {
            spec.family = Family::hypercube;
            spec.a = integer_at(0);
        } else if (family == "tree") {
            spec.family = Family::binary_tree;
            spec.a = integer_at(0);
        } else if (family == "cycle") {
            spec.family = Family::cycle;
            spec.a = integer_at(0);
        } else if (family == "er") {
            spec.family = Family::erdos_renyi;
            spec.a = integer_at(0);
            spec.x = real_at(1);
        } else if (family == "ba") {
            spec.family = Family::barabasi_albert;
            spec.a = integer_at(0);
            spec.b = integer_at(1);
        } else if (family == "geometric") {
            spec.family = Family::geometric;
            spec.a = integer_at(0);
            spec.x = real_at(1);
        } else {
            throw ParseError("unknown generator family '" + family + "'");
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("generator spec '" + text + "': bad argument");
    }
    return spec;
}

std::string GeneratorSpec::to_string() const {
    std::ostringstream out;
    switch (family) {
        case Family::grid: out << "grid(" << a << "," << b << ")"; break;
        case Family::hypercube: out << "hypercube(" << a << ")"; break;
        case Family::binary_tree: out << "tree(" << a << ")"; break;
        case Family::cycle: out << "cycle(" << a << ")"; break;
        case Family::erdos_renyi: out << "er(" << a << "," << x << ")"; break;
        case Family::barabasi_albert: out << "ba(" << a << "," << b << ")"; break;
        case Family::geometric: out << "geometric(" << a << "," << x << ")"; break;
    }
    return out.str();
}

}  // namespace dvbc
