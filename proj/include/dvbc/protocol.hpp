#ifndef DVBC_PROTOCOL_HPP
#define DVBC_PROTOCOL_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "dvbc/arith.hpp"
#include "dvbc/graph.hpp"

namespace dvbc {

// The quadruple exchanged each phase, one per (neighbor, target).
template <class M>
struct Message {
    NodeId target;
    Weight distance;
    typename M::Count path_count;     // sender's sigma estimate for target
    typename M::Real contribution;    // sender's running contribution of target
};

// Instrumentation for the constant-work bound: receive handlers count set
// operations, arithmetic and comparisons as elementary operations.
struct OpCounter {
    std::uint64_t elementary = 0;
    std::uint64_t messages = 0;
};

// What a single receive changed, for quiescence and local-convergence
// tracking. `changed` covers every observable field; the stored copy of a
// neighbor's own-target contribution is excluded because the algorithm can
// never read it back (a sender never qualifies as a previous hop toward
// itself), so it trails quiescence by one phase without affecting behavior.
struct ReceiveEffect {
    bool changed = false;
    bool distance_changed = false;
};

// Per-node protocol state: the distance vector D, next/previous hop sets,
// the sigma and contribution tables for the closed neighborhood, the cached
// per-neighbor contribution terms used by the constant-work receive, and the
// running centrality C.
template <class M>
class NodeState {
public:
    using Count = typename M::Count;
    using Real = typename M::Real;
    using Msg = Message<M>;

    NodeState(NodeId self, std::size_t node_count, std::vector<NodeId> neighbors)
        : self_(self), n_(node_count), neighbors_(std::move(neighbors)) {
        if (self_ >= n_) throw std::invalid_argument("node id out of range");
        std::sort(neighbors_.begin(), neighbors_.end());
        row_of_.assign(n_, kNoRow);
        row_of_[self_] = 0;
        for (std::size_t i = 0; i < neighbors_.size(); ++i) {
            NodeId u = neighbors_[i];
            if (u >= n_ || u == self_ || row_of_[u] != kNoRow)
                throw std::invalid_argument("bad neighbor set");
            row_of_[u] = static_cast<std::uint32_t>(i + 1);
        }
        const std::size_t rows = neighbors_.size() + 1;
        dist_.assign(n_, Weight::infinity());
        dist_[self_] = Weight::zero();
        next_hops_.resize(n_);
        prev_hops_.resize(n_);
        sigma_.assign(rows * n_, Count{});
        contrib_.assign(rows * n_, Real{});
        cached_.assign(neighbors_.size() * n_, Real{});
        sigma_[cell(0, self_)] = Count{1};
        centrality_ = Real{};
    }

    NodeId self() const { return self_; }
    std::size_t node_count() const { return n_; }
    const std::vector<NodeId>& neighbors() const { return neighbors_; }

    Weight distance(NodeId t) const { return dist_[t]; }
    bool in_next_hops(NodeId t, NodeId u) const { return next_hops_[t].contains(u); }
    bool in_prev_hops(NodeId t, NodeId u) const { return prev_hops_[t].contains(u); }
    std::vector<NodeId> next_hops_sorted(NodeId t) const { return sorted(next_hops_[t]); }
    std::vector<NodeId> prev_hops_sorted(NodeId t) const { return sorted(prev_hops_[t]); }

    const Count& own_path_count(NodeId t) const { return sigma_[cell(0, t)]; }
    const Real& own_contribution(NodeId t) const { return contrib_[cell(0, t)]; }
    const Count& stored_path_count(NodeId u, NodeId t) const { return sigma_[cell(row(u), t)]; }
    const Real& stored_contribution(NodeId u, NodeId t) const { return contrib_[cell(row(u), t)]; }

    // Running centrality C (unnormalized). The reference receive recomputes
    // the full sum lazily; the fast receive maintains it incrementally.
    const Real& centrality() const {
        if (centrality_stale_) {
            Real total{};
            for (NodeId t = 0; t < n_; ++t)
                if (t != self_) total += contrib_[cell(0, t)];
            centrality_ = total;
            centrality_stale_ = false;
        }
        return centrality_;
    }

    Msg message_for(NodeId t) const {
        return Msg{t, dist_[t], sigma_[cell(0, t)], contrib_[cell(0, t)]};
    }

    // One message per target, ascending target id; every neighbor gets the
    // same content.
    std::vector<Msg> build_outbox() const {
        std::vector<Msg> out;
        out.reserve(n_);
        for (NodeId t = 0; t < n_; ++t) out.push_back(message_for(t));
        return out;
    }

    ReceiveEffect receive_bellman_ford(NodeId from, const Msg& msg, Weight edge_w, OpCounter* ops = nullptr);
    ReceiveEffect receive_reference(NodeId from, const Msg& msg, Weight edge_w, OpCounter* ops = nullptr);
    ReceiveEffect receive_fast(NodeId from, const Msg& msg, Weight edge_w, OpCounter* ops = nullptr);

    // Field-by-field comparison of observable state (D, NH, PH, S, B, C;
    // stored own-target contribution copies excluded, see ReceiveEffect).
    bool observable_equal(const NodeState& other) const;

    std::uint64_t digest() const;

private:
    static constexpr std::uint32_t kNoRow = UINT32_MAX;

    std::size_t cell(std::uint32_t r, NodeId t) const { return static_cast<std::size_t>(r) * n_ + t; }
    std::uint32_t row(NodeId u) const {
        std::uint32_t r = row_of_[u];
        if (r == kNoRow) throw std::invalid_argument("not a neighbor: " + std::to_string(u));
        return r;
    }
    static std::vector<NodeId> sorted(const std::unordered_set<NodeId>& s) {
        std::vector<NodeId> out(s.begin(), s.end());
        std::sort(out.begin(), out.end());
        return out;
    }
    static void count(OpCounter* ops, std::uint64_t k) {
        if (ops) ops->elementary += k;
    }

    NodeId self_;
    std::size_t n_;
    std::vector<NodeId> neighbors_;
    std::vector<std::uint32_t> row_of_;
    std::vector<Weight> dist_;
    std::vector<std::unordered_set<NodeId>> next_hops_;
    std::vector<std::unordered_set<NodeId>> prev_hops_;
    std::vector<Count> sigma_;
    std::vector<Real> contrib_;
    std::vector<Real> cached_;  // per-neighbor contribution terms (fast mode)
    mutable Real centrality_{};
    mutable bool centrality_stale_ = false;
};

template <class M>
ReceiveEffect NodeState<M>::receive_bellman_ford(NodeId from, const Msg& msg, Weight edge_w,
                                                 OpCounter* ops) {
    if (ops) ++ops->messages;
    (void)row(from);
    ReceiveEffect effect;
    const NodeId t = msg.target;
    const Weight relaxed = msg.distance + edge_w;
    count(ops, 2);
    if (relaxed < dist_[t]) {
        dist_[t] = relaxed;
        effect.changed = effect.distance_changed = true;
        count(ops, 1);
    }
    return effect;
}

template <class M>
ReceiveEffect NodeState<M>::receive_reference(NodeId from, const Msg& msg, Weight edge_w,
                                              OpCounter* ops) {
    if (ops) ++ops->messages;
    ReceiveEffect effect;
    const NodeId t = msg.target;
    const std::uint32_t from_row = row(from);

    const bool was_next = next_hops_[t].erase(from) > 0;
    const bool was_prev = prev_hops_[t].erase(from) > 0;
    count(ops, 2);

    bool now_next = false, now_prev = false;
    const Weight relaxed = msg.distance + edge_w;
    count(ops, 2);
    if (relaxed < dist_[t]) {
        dist_[t] = relaxed;
        effect.distance_changed = true;
        effect.changed = true;
        count(ops, 1);
    } else if (msg.distance.finite() && relaxed == dist_[t]) {
        next_hops_[t].insert(from);
        now_next = true;
        count(ops, 2);
    } else if (msg.distance.finite() && msg.distance == dist_[t] + edge_w) {
        prev_hops_[t].insert(from);
        now_prev = true;
        count(ops, 3);
    }
    effect.changed |= (was_next != now_next) || (was_prev != now_prev);

    if (sigma_[cell(from_row, t)] != msg.path_count) {
        sigma_[cell(from_row, t)] = msg.path_count;
        effect.changed = true;
    }
    if (contrib_[cell(from_row, t)] != msg.contribution) {
        contrib_[cell(from_row, t)] = msg.contribution;
        effect.changed |= (t != from);  // own-target copies are write-only
    }
    count(ops, 2);

    if (t != self_) {
        Count total{};
        for (NodeId u : neighbors_) {
            count(ops, 1);
            if (!next_hops_[t].contains(u)) continue;
            total += sigma_[cell(row_of_[u], t)];
            count(ops, 1);
        }
        if (sigma_[cell(0, t)] != total) {
            sigma_[cell(0, t)] = total;
            effect.changed = true;
        }
    }
    count(ops, 1);

    // Summing terms in ascending neighbor order keeps float results
    // independent of set iteration history. Terms with a zero stored sigma
    // contribute nothing (transient states hold them before the first real
    // count arrives).
    Real accumulated{};
    for (NodeId u : neighbors_) {
        count(ops, 1);
        if (!prev_hops_[t].contains(u)) continue;
        const Count& down = sigma_[cell(row_of_[u], t)];
        if (M::count_is_zero(down)) continue;
        accumulated += (contrib_[cell(row_of_[u], t)] + M::real_from_int(1)) / M::to_real(down);
        count(ops, 4);
    }
    Real updated = M::to_real(sigma_[cell(0, t)]) * accumulated;
    count(ops, 1);
    if (contrib_[cell(0, t)] != updated) {
        contrib_[cell(0, t)] = updated;
        effect.changed = true;
        centrality_stale_ = true;
    }
    return effect;
}

template <class M>
ReceiveEffect NodeState<M>::receive_fast(NodeId from, const Msg& msg, Weight edge_w,
                                         OpCounter* ops) {
    if (ops) ++ops->messages;
    ReceiveEffect effect;
    const NodeId t = msg.target;
    const std::uint32_t from_row = row(from);
    const std::size_t own = cell(0, t);
    const std::size_t theirs = cell(from_row, t);
    const std::size_t cache_slot = static_cast<std::size_t>(from_row - 1) * n_ + t;

    const Real contribution_before = contrib_[own];
    const Count sigma_before = sigma_[own];
    count(ops, 2);  // centrality bookkeeping (subtract now, add back below)

    bool was_next = false, was_prev = false;
    bool removed_term = false;
    Real removed_value{};
    count(ops, 2);
    if (next_hops_[t].contains(from)) {
        next_hops_[t].erase(from);
        was_next = true;
        count(ops, 1);
        if (t != self_) {
            sigma_[own] -= sigma_[theirs];
            count(ops, 1);
        }
    }
    if (prev_hops_[t].contains(from)) {
        prev_hops_[t].erase(from);
        was_prev = true;
        removed_term = true;
        removed_value = cached_[cache_slot];
        count(ops, 2);
    }

    if (sigma_[theirs] != msg.path_count) {
        sigma_[theirs] = msg.path_count;
        effect.changed = true;
    }
    if (contrib_[theirs] != msg.contribution) {
        contrib_[theirs] = msg.contribution;
        effect.changed |= (t != from);  // own-target copies are write-only
    }
    count(ops, 2);

    bool now_next = false, now_prev = false;
    bool added_term = false;
    Real added_value{};
    const Weight relaxed = msg.distance + edge_w;
    count(ops, 2);
    if (relaxed < dist_[t]) {
        dist_[t] = relaxed;
        effect.distance_changed = true;
        effect.changed = true;
        count(ops, 1);
    } else if (msg.distance.finite() && relaxed == dist_[t]) {
        next_hops_[t].insert(from);
        now_next = true;
        count(ops, 2);
        if (t != self_) {
            sigma_[own] += sigma_[theirs];
            count(ops, 1);
        }
    } else if (msg.distance.finite() && msg.distance == dist_[t] + edge_w) {
        prev_hops_[t].insert(from);
        now_prev = true;
        added_term = true;
        count(ops, 4);
        if (!M::count_is_zero(sigma_[theirs])) {
            added_value = M::to_real(sigma_[own]) *
                          ((contrib_[theirs] + M::real_from_int(1)) / M::to_real(sigma_[theirs]));
            count(ops, 3);
        }
        cached_[cache_slot] = added_value;
    }

    // Settle the contribution and centrality accumulators. When a neighbor
    // leaves and immediately re-enters the previous-hop set with a
    // bit-identical term, subtract-then-add would be a no-op algebraically
    // but can still perturb float values; skipping it keeps fixed points
    // exactly fixed.
    if (removed_term && added_term) {
        if (removed_value != added_value) {
            contrib_[own] -= removed_value;
            contrib_[own] += added_value;
            count(ops, 2);
        }
    } else if (removed_term) {
        contrib_[own] -= removed_value;
        count(ops, 1);
    } else if (added_term) {
        contrib_[own] += added_value;
        count(ops, 1);
    }
    effect.changed |= (was_next != now_next) || (was_prev != now_prev);
    effect.changed |= (sigma_[own] != sigma_before);
    if (contrib_[own] != contribution_before) {
        effect.changed = true;
        if (t != self_) {
            centrality_ -= contribution_before;
            centrality_ += contrib_[own];
            count(ops, 2);
        }
    }
    count(ops, 2);
    return effect;
}

template <class M>
bool NodeState<M>::observable_equal(const NodeState& other) const {
    if (self_ != other.self_ || n_ != other.n_ || neighbors_ != other.neighbors_) return false;
    if (dist_ != other.dist_) return false;
    for (NodeId t = 0; t < n_; ++t)
        if (next_hops_[t] != other.next_hops_[t] || prev_hops_[t] != other.prev_hops_[t])
            return false;
    if (sigma_ != other.sigma_) return false;
    for (std::uint32_t r = 0; r <= neighbors_.size(); ++r) {
        const NodeId u = r == 0 ? self_ : neighbors_[r - 1];
        for (NodeId t = 0; t < n_; ++t) {
            if (r != 0 && t == u) continue;  // write-only copy
            if (contrib_[cell(r, t)] != other.contrib_[cell(r, t)]) return false;
        }
    }
    return centrality() == other.centrality();
}

template <class M>
std::uint64_t NodeState<M>::digest() const {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ self_;
    for (NodeId t = 0; t < n_; ++t) {
        Float64Mode::hash_mix(h, static_cast<std::uint64_t>(dist_[t].raw()));
        for (NodeId u : neighbors_) {
            Float64Mode::hash_mix(h, next_hops_[t].contains(u) ? 2u : 3u);
            Float64Mode::hash_mix(h, prev_hops_[t].contains(u) ? 5u : 7u);
        }
    }
    for (std::uint32_t r = 0; r <= neighbors_.size(); ++r) {
        const NodeId u = r == 0 ? self_ : neighbors_[r - 1];
        for (NodeId t = 0; t < n_; ++t) {
            M::hash_count(h, sigma_[cell(r, t)]);
            if (r == 0 || t != u) M::hash_real(h, contrib_[cell(r, t)]);
        }
    }
    M::hash_real(h, centrality());
    return h;
}

// Definition-style normalization of the running centrality.
template <class M>
typename M::Real normalized_centrality(const NodeState<M>& state, std::size_t n) {
    if (n < 3) throw std::invalid_argument("centrality normalization needs n >= 3");
    return state.centrality() / M::real_from_int(static_cast<long>((n - 1) * (n - 2)));
}

}  // namespace dvbc

#endif
