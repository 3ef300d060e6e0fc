#ifndef DVBC_TRACE_HPP
#define DVBC_TRACE_HPP

#include <json.hpp>

#include "dvbc/protocol.hpp"

namespace dvbc {

// Debug serialization of a node state (keys: D, NH, PH, S, B, C). Distances
// render in units, +infinity as "inf". With mask_unknown_contribution set,
// entries of the node's own contribution row whose value is not yet backed
// by usable previous-hop data render as "inf", matching how hand-drawn
// execution figures display a still-unknown contribution: either nothing is
// known about the target at all, or some previous hop still reports a zero
// path count and its term is suppressed by the division guard.
template <class M>
nlohmann::json node_state_json(const NodeState<M>& state, int tick_digits,
                               bool mask_unknown_contribution = false) {
    using json = nlohmann::json;
    const std::size_t n = state.node_count();
    json d = json::array(), nh = json::array(), ph = json::array();
    for (NodeId t = 0; t < n; ++t) {
        Weight w = state.distance(t);
        if (w.finite())
            d.push_back(w.to_double(tick_digits));
        else
            d.push_back("inf");
        nh.push_back(state.next_hops_sorted(t));
        ph.push_back(state.prev_hops_sorted(t));
    }

    json sigma = json::object(), contrib = json::object();
    auto fill_row = [&](NodeId row_node) {
        json s_row = json::array(), b_row = json::array();
        for (NodeId t = 0; t < n; ++t) {
            s_row.push_back(M::count_to_double(state.stored_path_count(row_node, t)));
            bool masked = false;
            if (mask_unknown_contribution && row_node == state.self()) {
                const auto prev = state.prev_hops_sorted(t);
                masked = prev.empty() && !state.distance(t).finite();
                for (NodeId u : prev)
                    if (M::count_is_zero(state.stored_path_count(u, t))) masked = true;
            }
            if (masked)
                b_row.push_back("inf");
            else
                b_row.push_back(M::to_double(state.stored_contribution(row_node, t)));
        }
        sigma[std::to_string(row_node)] = std::move(s_row);
        contrib[std::to_string(row_node)] = std::move(b_row);
    };
    fill_row(state.self());
    for (NodeId u : state.neighbors()) fill_row(u);

    return json{{"node", state.self()}, {"D", std::move(d)},     {"NH", std::move(nh)},
                {"PH", std::move(ph)},  {"S", std::move(sigma)}, {"B", std::move(contrib)},
                {"C", M::to_double(state.centrality())}};
}

}  // namespace dvbc

#endif
