#ifndef DVBC_GRAPH_HPP
#define DVBC_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dvbc/weight.hpp"

namespace dvbc {

using NodeId = std::uint32_t;

struct Edge {
    NodeId u;
    NodeId v;
    Weight w;
};

struct EdgeRef {
    NodeId to;
    Weight w;
};

// Connected undirected graph with strictly positive exact weights.
// Immutable after construction; safe to share read-only across threads.
class Graph {
public:
    // Validates and builds: rejects self-loops, duplicate edges (regardless
    // of weight), non-positive weights, out-of-range endpoints and
    // disconnected graphs. Edges are stored with u < v; adjacency lists are
    // sorted by neighbor id.
    static Graph from_edges(std::size_t node_count, std::span<const Edge> edges, int tick_digits = 3);

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    int tick_digits() const { return tick_digits_; }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<EdgeRef>& neighbors(NodeId v) const { return adjacency_[v]; }
    std::size_t degree(NodeId v) const { return adjacency_[v].size(); }

    bool unit_weights() const;  // every weight equals one unit

private:
    Graph() = default;

    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeRef>> adjacency_;
    int tick_digits_ = 3;
};

// Edge-list text format: UTF-8 lines `u v w`, `#` starts a comment, node ids
// are non-negative integers, w is a positive decimal with at most
// tick_digits fractional digits.
Graph load_edge_list(std::istream& in, int tick_digits = 3);
Graph load_edge_list_file(const std::string& path, int tick_digits = 3);
void save_edge_list(const Graph& g, std::ostream& out, const std::string& header_comment = "");
std::string to_edge_list(const Graph& g, const std::string& header_comment = "");

}  // namespace dvbc

#endif
