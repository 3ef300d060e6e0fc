#ifndef DVBC_SIMULATOR_HPP
#define DVBC_SIMULATOR_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dvbc/graph.hpp"
#include "dvbc/protocol.hpp"
#include "dvbc/rng.hpp"

namespace dvbc {

enum class Mode { bellman_ford, reference, fast };

const char* mode_name(Mode m);
Mode parse_mode(const std::string& name);

// Within-phase delivery order. Canonical order (by sender id, then target
// id) is the default; seeded shuffles exist solely for order-independence
// testing -- the simulated clock itself is perfectly synchronous.
struct Schedule {
    enum class Order { canonical, shuffled };
    Order order = Order::canonical;
    std::uint64_t seed = 0;
    std::size_t max_phases = 0;  // 0 = automatic cap of 4 * node count

    static Schedule canonical(std::size_t max_phases = 0) { return {Order::canonical, 0, max_phases}; }
    static Schedule shuffled(std::uint64_t seed, std::size_t max_phases = 0) {
        return {Order::shuffled, seed, max_phases};
    }
};

// One synchronous execution. Phase numbering: phase 1 is the first
// send/receive exchange; "after h phases" means the state once phase h
// completed. quiescence_phase is the last phase in which any observable
// field changed; the engine always runs one further phase to confirm.
template <class M>
struct SimulationRun {
    Mode mode = Mode::fast;
    Schedule schedule;
    bool converged = false;
    std::size_t quiescence_phase = 0;
    std::size_t c_quiescence_phase = 0;  // last phase in which any C changed
    std::size_t phases_executed = 0;
    std::uint64_t messages_processed = 0;
    OpCounter ops;
    std::vector<std::size_t> last_distance_change;    // per node (T_D)
    std::vector<std::size_t> last_centrality_change;  // per node (T_C)
    // centrality_by_phase[p][v] = C at node v once phase p completed
    // (index 0 holds the all-zero initial state).
    std::vector<std::vector<double>> centrality_by_phase;
    std::vector<std::uint64_t> phase_digests;  // filled when requested
    std::vector<NodeState<M>> final_states;
};

template <class M>
using PhaseObserver = std::function<void(std::size_t phase, const std::vector<NodeState<M>>&)>;

template <class M>
SimulationRun<M> run_simulation(const Graph& g, Mode mode, const Schedule& schedule,
                                const PhaseObserver<M>& observer = {},
                                bool collect_digests = false) {
    const std::size_t n = g.node_count();
    const std::size_t max_phases = schedule.max_phases ? schedule.max_phases : 4 * n;

    SimulationRun<M> run;
    run.mode = mode;
    run.schedule = schedule;
    run.last_distance_change.assign(n, 0);
    run.last_centrality_change.assign(n, 0);

    std::vector<NodeState<M>> states;
    states.reserve(n);
    for (NodeId v = 0; v < n; ++v) {
        std::vector<NodeId> neighbor_ids;
        neighbor_ids.reserve(g.degree(v));
        for (const EdgeRef& e : g.neighbors(v)) neighbor_ids.push_back(e.to);
        states.emplace_back(v, n, std::move(neighbor_ids));
    }

    std::vector<typename M::Real> previous_c(n, typename M::Real{});
    run.centrality_by_phase.push_back(std::vector<double>(n, 0.0));

    std::vector<std::vector<Message<M>>> outboxes(n);
    std::size_t last_change = 0;
    for (std::size_t phase = 1; phase <= max_phases; ++phase) {
        // Bulk-synchronous round: all outboxes reflect the pre-phase states,
        // then every message is delivered and processed.
        for (NodeId v = 0; v < n; ++v) outboxes[v] = states[v].build_outbox();

        bool any_change = false;
        for (NodeId v = 0; v < n; ++v) {
            NodeState<M>& state = states[v];
            bool distance_change = false;
            auto deliver = [&](NodeId from, Weight w, NodeId t) {
                const Message<M>& msg = outboxes[from][t];
                ReceiveEffect effect;
                switch (mode) {
                    case Mode::bellman_ford:
                        effect = state.receive_bellman_ford(from, msg, w, &run.ops);
                        break;
                    case Mode::reference:
                        effect = state.receive_reference(from, msg, w, &run.ops);
                        break;
                    case Mode::fast:
                        effect = state.receive_fast(from, msg, w, &run.ops);
                        break;
                }
                any_change |= effect.changed;
                distance_change |= effect.distance_changed;
                ++run.messages_processed;
            };
            if (schedule.order == Schedule::Order::canonical) {
                for (const EdgeRef& e : g.neighbors(v))
                    for (NodeId t = 0; t < n; ++t) deliver(e.to, e.w, t);
            } else {
                std::vector<std::pair<std::uint32_t, NodeId>> inbox;
                inbox.reserve(g.degree(v) * n);
                for (std::uint32_t i = 0; i < g.degree(v); ++i)
                    for (NodeId t = 0; t < n; ++t) inbox.push_back({i, t});
                Rng rng(derive_seed(schedule.seed, SeedStream::shuffle, phase * n + v));
                rng.shuffle(inbox);
                for (auto [i, t] : inbox) {
                    const EdgeRef& e = g.neighbors(v)[i];
                    deliver(e.to, e.w, t);
                }
            }
            if (distance_change) run.last_distance_change[v] = phase;
        }

        std::vector<double> c_snapshot(n);
        for (NodeId v = 0; v < n; ++v) {
            const typename M::Real& c = states[v].centrality();
            if (c != previous_c[v]) {
                run.last_centrality_change[v] = phase;
                run.c_quiescence_phase = phase;
                any_change = true;
                previous_c[v] = c;
            }
            c_snapshot[v] = M::to_double(c);
        }
        run.centrality_by_phase.push_back(std::move(c_snapshot));

        if (collect_digests) {
            std::uint64_t h = 0x100001b3ULL;
            for (NodeId v = 0; v < n; ++v) Float64Mode::hash_mix(h, states[v].digest());
            run.phase_digests.push_back(h);
        }
        if (observer) observer(phase, states);

        run.phases_executed = phase;
        if (!any_change) {
            run.converged = true;
            break;
        }
        last_change = phase;
    }
    run.quiescence_phase = last_change;
    run.final_states = std::move(states);
    return run;
}

// Per-node local convergence times, defined on a completed convergent run.
struct LocalConvergence {
    std::vector<std::size_t> t_d;  // last phase any distance entry changed
    std::vector<std::size_t> t_c;  // last phase the centrality value changed
};

template <class M>
LocalConvergence record_local_convergence(const SimulationRun<M>& run) {
    if (!run.converged)
        throw NotConvergedError("run did not reach quiescence within " +
                                std::to_string(run.phases_executed) + " phases");
    return LocalConvergence{run.last_distance_change, run.last_centrality_change};
}

}  // namespace dvbc

#endif
