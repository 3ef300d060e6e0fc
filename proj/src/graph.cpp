#include "dvbc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace dvbc {

namespace {

void check_connected(std::size_t n, const std::vector<std::vector<EdgeRef>>& adj) {
    if (n == 0) throw ValidationError("graph has no nodes");
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (const EdgeRef& e : adj[v]) {
            if (!seen[e.to]) {
                seen[e.to] = 1;
                ++visited;
                stack.push_back(e.to);
            }
        }
    }
    if (visited != n)
        throw ValidationError("graph is disconnected (" + std::to_string(visited) + " of " +
                              std::to_string(n) + " nodes reachable from node 0)");
}

}  // namespace

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges, int tick_digits) {
    Graph g;
    g.tick_digits_ = tick_digits;
    g.adjacency_.resize(node_count);
    std::set<std::pair<NodeId, NodeId>> seen;
    g.edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= node_count || e.v >= node_count)
            throw ValidationError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
        if (e.u == e.v) throw ValidationError("self-loop at node " + std::to_string(e.u));
        if (!e.w.finite() || e.w.raw() <= 0)
            throw ValidationError("non-positive weight on edge " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
        NodeId a = std::min(e.u, e.v), b = std::max(e.u, e.v);
        if (!seen.insert({a, b}).second)
            throw ValidationError("duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        g.edges_.push_back({a, b, e.w});
    }
    std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& x, const Edge& y) {
        return std::tie(x.u, x.v) < std::tie(y.u, y.v);
    });
    for (const Edge& e : g.edges_) {
        g.adjacency_[e.u].push_back({e.v, e.w});
        g.adjacency_[e.v].push_back({e.u, e.w});
    }
    for (auto& list : g.adjacency_)
        std::sort(list.begin(), list.end(),
                  [](const EdgeRef& x, const EdgeRef& y) { return x.to < y.to; });
    check_connected(node_count, g.adjacency_);
    return g;
}

bool Graph::unit_weights() const {
    const std::int64_t unit = ticks_per_unit(tick_digits_);
    return std::all_of(edges_.begin(), edges_.end(),
                       [unit](const Edge& e) { return e.w.raw() == unit; });
}

Graph load_edge_list(std::istream& in, int tick_digits) {
    std::vector<Edge> edges;
    NodeId max_id = 0;
    std::string line;
    std::size_t line_no = 0;
    bool any = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::string u_text, v_text, w_text, extra;
        if (!(fields >> u_text)) continue;  // blank or comment-only line
        if (!(fields >> v_text >> w_text)) throw ParseError(line_no, "expected `u v w`");
        if (fields >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");
        try {
            std::size_t pos = 0;
            unsigned long u = std::stoul(u_text, &pos);
            if (pos != u_text.size()) throw std::invalid_argument(u_text);
            unsigned long v = std::stoul(v_text, &pos);
            if (pos != v_text.size()) throw std::invalid_argument(v_text);
            std::int64_t w = parse_ticks(w_text, tick_digits);
            if (w <= 0) throw ParseError(line_no, "weight must be positive");
            edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), Weight::from_raw(w)});
            max_id = std::max({max_id, edges.back().u, edges.back().v});
            any = true;
        } catch (const ParseError& e) {
            throw ParseError(line_no, e.what());
        } catch (const std::exception&) {
            throw ParseError(line_no, "invalid node id");
        }
    }
    if (!any) throw ParseError("no edges in input");
    return Graph::from_edges(static_cast<std::size_t>(max_id) + 1, edges, tick_digits);
}

Graph load_edge_list_file(const std::string& path, int tick_digits) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return load_edge_list(in, tick_digits);
}

void save_edge_list(const Graph& g, std::ostream& out, const std::string& header_comment) {
    if (!header_comment.empty()) out << "# " << header_comment << "\n";
    for (const Edge& e : g.edges())
        out << e.u << " " << e.v << " " << format_ticks(e.w.raw(), g.tick_digits()) << "\n";
}

std::string to_edge_list(const Graph& g, const std::string& header_comment) {
    std::ostringstream out;
    save_edge_list(g, out, header_comment);
    return out.str();
}

}  // namespace dvbc
