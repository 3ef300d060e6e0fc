// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <vector>

#include "dvbc/analysis.hpp"
#include "dvbc/oracle.hpp"
#include "dvbc/simulator.hpp"
#include "suite.hpp"

using namespace dvbc;
using dvbc::testing::SuiteGraph;

namespace {

struct Criterion {
    int id;
    std::string title;
    bool pass = true;
    std::size_t checks = 0;
    std::string detail;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        pass = false;
        if (failures.size() < 5) failures.push_back(what);
    }
    void require(bool ok, const std::string& what) {
        ++checks;
        if (!ok) fail(what);
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool close(double a, double b, double scale) { return std::abs(a - b) <= 1e-9 * scale; }

// ---------------------------------------------------------------- criterion 1

Criterion golden_trace() {
    Criterion c{1, "six-cycle golden trace (exact arithmetic)"};
    const auto start = std::chrono::steady_clock::now();
    const Graph g = generate_cycle(6);

    bool saw4 = false, saw5 = false;
    PhaseObserver<ExactMode> observer = [&](std::size_t phase,
                                            const std::vector<NodeState<ExactMode>>& states) {
        if (phase == 4) {
            saw4 = true;
            c.require(states[5].distance(3).raw() == 2000, "node 5 distance to 3 is not 2.0");
            c.require(states[5].own_path_count(3) == mpz_class(1), "node 5 sigma to 3 is not 1");
            c.require(states[5].next_hops_sorted(3) == std::vector<NodeId>{4}, "NH[3] at 5 is not {4}");
            c.require(states[5].prev_hops_sorted(3) == std::vector<NodeId>{0}, "PH[3] at 5 is not {0}");
            const auto msg = states[0].message_for(3);
            c.require(msg.distance.raw() == 3000 && msg.path_count == mpz_class(2) &&
                          msg.contribution == mpq_class(0),
                      "phase-5 message from node 0 is not (3, 3.0, 2, 0.0)");
        }
        if (phase == 5) {
            saw5 = true;
            c.require(states[5].own_contribution(3) == mpq_class(1, 2),
                      "B[5,3] after the phase-5 update is not 1/2");
            c.require(states[5].stored_path_count(0, 3) == mpz_class(2),
                      "stored sigma for node 0 toward 3 is not 2");
        }
    };
    const auto run = run_simulation<ExactMode>(g, Mode::fast, Schedule::canonical(), observer);
    c.require(saw4 && saw5, "phases 4 and 5 not both observed");
    c.require(run.converged, "six-cycle run did not converge");
    c.require(run.quiescence_phase <= 7, "quiescence later than phase 7 = 2*Diam+1");
    for (NodeId v = 0; v < 6; ++v)
        c.require(normalized_centrality(run.final_states[v], 6) == mpq_class(1, 5),
                  "converged normalized centrality is not exactly 1/5");
    const double elapsed = seconds_since(start);
    c.require(elapsed < 1.0, "runtime exceeded 1 s");
    std::ostringstream detail;
    detail << "quiescence at phase " << run.quiescence_phase << ", " << elapsed << " s";
    c.detail = detail.str();
    return c;
}

// ------------------------------------------------------- suite-driven criteria

struct LemmaCounters {
    std::size_t next_hop = 0, prev_hop = 0, sigma = 0, contribution = 0, phases = 0;
};

PhaseObserver<Float64Mode> lemma_observer(const Graph& g, const GraphMetrics& m,
                                          const ExactCentrality<Float64Mode>* oracle,
                                          LemmaCounters& out) {
    const std::size_t diam_bound = m.Diam;
    return [&g, &m, oracle, &out, diam_bound](std::size_t phase,
                                              const std::vector<NodeState<Float64Mode>>& states) {
        ++out.phases;
        const std::size_t n = g.node_count();
        for (NodeId v = 0; v < n; ++v) {
            const auto& state = states[v];
            for (NodeId t = 0; t < n; ++t) {
                if (phase >= m.maxhop_at(v, t) + std::size_t{1}) {
                    for (const EdgeRef& e : g.neighbors(v))
                        if (state.in_next_hops(t, e.to) != oracle_next_hop(m, v, e.to, e.w, t))
                            ++out.next_hop;
                }
                if (phase >= diam_bound + 2) {
                    for (const EdgeRef& e : g.neighbors(v))
                        if (state.in_prev_hops(t, e.to) != oracle_prev_hop(m, v, e.to, e.w, t))
                            ++out.prev_hop;
                }
                if (oracle && phase >= diam_bound + 1) {
                    if (state.own_path_count(t) != oracle->sigma_at(v, t)) ++out.sigma;
                }
                if (oracle && t != v && phase >= 2 * diam_bound + 1) {
                    const double expected = oracle->contribution(v, t);
                    if (!close(state.own_contribution(t), expected, std::max(1.0, std::abs(expected))))
                        ++out.contribution;
                }
            }
        }
    };
}

struct SuiteOutcome {
    Criterion c2{2, "theorem bound over the graph suite"};
    Criterion c3{3, "quiescent centrality equals the oracle"};
    Criterion c5{5, "lemma-level convergence timing"};
    Criterion c8{8, "unweighted dynamics"};
    Criterion c9{9, "weighted dynamics"};
};

void check_unweighted_dynamics(Criterion& c8, const std::string& name,
                               const SimulationRun<Float64Mode>& run, const GraphMetrics& m,
                               const ExactCentrality<Float64Mode>& oracle,
                               const std::vector<double>& errors) {
    c8.require(errors.front() == 1.0, name + ": error at phase 0 is not exactly 1.0");
    for (std::size_t p = 1; p <= 3 && p < run.centrality_by_phase.size(); ++p)
        for (double value : run.centrality_by_phase[p])
            if (value != 0.0) {
                c8.fail(name + ": nonzero centrality in the first 3 phases");
                break;
            }
    ++c8.checks;
    for (std::size_t p = 1; p < run.centrality_by_phase.size(); ++p)
        for (std::size_t v = 0; v < run.centrality_by_phase[p].size(); ++v) {
            const double before = run.centrality_by_phase[p - 1][v];
            if (run.centrality_by_phase[p][v] < before - 1e-12 * (1.0 + std::abs(before))) {
                c8.fail(name + ": centrality decreased at a node");
                p = run.centrality_by_phase.size();
                break;
            }
        }
    ++c8.checks;
    for (std::size_t p = 1; p < errors.size(); ++p)
        if (errors[p] > errors[p - 1] + 1e-12) {
            c8.fail(name + ": global error increased on a unit-weight graph");
            break;
        }
    ++c8.checks;
    for (NodeId v = 0; v < m.n; ++v) {
        if (run.last_distance_change[v] != m.ecc_hop[v]) {
            c8.fail(name + ": T_D of node " + std::to_string(v) + " is not its eccentricity");
            break;
        }
    }
    ++c8.checks;
    for (NodeId v = 0; v < m.n; ++v)
        if (oracle.bc_raw[v] == 0.0 && run.last_centrality_change[v] != 0) {
            c8.fail(name + ": a zero-centrality node has T_C != 0");
            break;
        }
    ++c8.checks;
}

SuiteOutcome run_suite(const std::vector<SuiteGraph>& suite) {
    SuiteOutcome out;
    const auto start = std::chrono::steady_clock::now();
    std::size_t runs = 0, bound_met = 0;
    std::size_t exact_graphs = 0;
    LemmaCounters lemmas;
    std::size_t unit_graphs_checked = 0;
    std::size_t weighted_runs = 0, weighted_late_increase = 0;

    for (const SuiteGraph& sg : suite) {
        const Graph& g = sg.graph;
        const std::size_t n = g.node_count();
        const GraphMetrics m = compute_metrics(g);
        const std::size_t bound = 2 * static_cast<std::size_t>(m.Diam) + 1;

        ExactCentrality<Float64Mode> oracle;
        const bool has_oracle = n >= 3;
        if (has_oracle) oracle = brandes<Float64Mode>(g);

        PhaseObserver<Float64Mode> observer =
            lemma_observer(g, m, has_oracle ? &oracle : nullptr, lemmas);
        const auto fast = run_simulation<Float64Mode>(g, Mode::fast, Schedule::canonical(), observer);
        const auto reference = run_simulation<Float64Mode>(g, Mode::reference, Schedule::canonical());
        for (const auto* run : {&fast, &reference}) {
            ++runs;
            out.c2.require(run->converged, sg.name + ": did not converge");
            if (run->converged && run->quiescence_phase <= bound)
                ++bound_met;
            else if (run->converged)
                out.c2.fail(sg.name + ": quiescence " + std::to_string(run->quiescence_phase) +
                            " > bound " + std::to_string(bound));
        }

        if (!has_oracle) continue;
        const double bc_max = *std::max_element(oracle.bc.begin(), oracle.bc.end());
        for (NodeId v = 0; v < n; ++v) {
            const double estimate = Float64Mode::to_double(normalized_centrality(fast.final_states[v], n));
            const bool ok = bc_max == 0.0
                                ? estimate == 0.0
                                : std::abs(estimate - oracle.bc[v]) <=
                                      1e-9 * std::max(bc_max, std::abs(oracle.bc[v]));
            if (!ok) {
                out.c3.fail(sg.name + ": node " + std::to_string(v) + " off the oracle value");
                break;
            }
        }
        ++out.c3.checks;

        std::vector<double> errors;
        if (bc_max > 0.0) {
            errors.reserve(fast.centrality_by_phase.size());
            for (const auto& estimate : fast.centrality_by_phase)
                errors.push_back(global_error(estimate, oracle.bc_raw));
            out.c3.require(errors.back() <= 1e-9, sg.name + ": final global error above 1e-9");
        }

        if (!sg.weighted && g.unit_weights() && m.diam >= 3 && bc_max > 0.0) {
            ++unit_graphs_checked;
            check_unweighted_dynamics(out.c8, sg.name, fast, m, oracle, errors);
        }
        if (sg.weighted) {
            ++weighted_runs;
            bool late = false;
            for (std::size_t p = 1; p < errors.size(); ++p)
                if (errors[p] > errors[p - 1] + 1e-12 && p >= m.Diam) late = true;
            if (late) ++weighted_late_increase;
            for (NodeId v = 0; v < n; ++v)
                if (oracle.bc_raw[v] == 0.0 && fast.last_centrality_change[v] >= m.diam) {
                    out.c9.fail(sg.name + ": zero-centrality node " + std::to_string(v) +
                                " has T_C >= diam");
                    break;
                }
            ++out.c9.checks;
        }

        if (n <= 50) {
            ++exact_graphs;
            const auto exact_run = run_simulation<ExactMode>(g, Mode::fast, Schedule::canonical());
            out.c3.require(exact_run.converged, sg.name + ": exact run did not converge");
            const auto exact_oracle = brandes<ExactMode>(g);
            for (NodeId v = 0; v < n; ++v)
                if (normalized_centrality(exact_run.final_states[v], n) != exact_oracle.bc[v]) {
                    out.c3.fail(sg.name + ": exact centrality mismatch at node " + std::to_string(v));
                    break;
                }
            ++out.c3.checks;
        }
    }

    const double elapsed = seconds_since(start);
    out.c2.require(elapsed < 300.0, "suite runtime exceeded 5 minutes");
    {
        std::ostringstream detail;
        detail << suite.size() << " graphs, " << runs << " runs, " << bound_met
               << " within 2*Diam+1, " << elapsed << " s";
        out.c2.detail = detail.str();
    }
    {
        std::ostringstream detail;
        detail << "float <= 1e-9 on " << suite.size() << " graphs, exact equality on " << exact_graphs
               << " graphs with n <= 50";
        out.c3.detail = detail.str();
    }
    out.c5.require(lemmas.next_hop == 0, std::to_string(lemmas.next_hop) + " next-hop violations");
    out.c5.require(lemmas.prev_hop == 0, std::to_string(lemmas.prev_hop) + " previous-hop violations");
    out.c5.require(lemmas.sigma == 0, std::to_string(lemmas.sigma) + " sigma violations");
    out.c5.require(lemmas.contribution == 0,
                   std::to_string(lemmas.contribution) + " contribution violations");
    {
        std::ostringstream detail;
        detail << lemmas.phases
               << " phase snapshots checked (NH from maxhop+1, PH from Diam+2, sigma from Diam+1, "
                  "contributions from 2*Diam+1; no phase shift)";
        out.c5.detail = detail.str();
    }
    {
        std::ostringstream detail;
        detail << unit_graphs_checked << " unit-weight graphs with diam >= 3";
        out.c8.detail = detail.str();
    }
    const double clean_fraction =
        weighted_runs ? 1.0 - static_cast<double>(weighted_late_increase) /
                                  static_cast<double>(weighted_runs)
                      : 1.0;
    out.c9.require(clean_fraction >= 0.95,
                   "only " + std::to_string(clean_fraction * 100) +
                       "% of weighted runs kept error increases before Diam");
    {
        std::ostringstream detail;
        detail << weighted_runs << " weighted runs, " << (clean_fraction * 100)
               << "% without error increases at or after Diam";
        out.c9.detail = detail.str();
    }
    return out;
}

// ---------------------------------------------------------------- criterion 4

Criterion oracle_self_check() {
    Criterion c{4, "centralized oracle self-check (exact)"};
    std::size_t graphs = 0;
    auto check_graph = [&](const std::string& name, const Graph& g) {
        ++graphs;
        const auto a = brandes<ExactMode>(g);
        GraphMetrics enumerated;
        const auto b = brute_force<ExactMode>(g, &enumerated);
        c.require(a.sigma == b.sigma, name + ": sigma differs");
        c.require(a.bc_contrib == b.bc_contrib, name + ": contributions differ");
        c.require(a.bc_raw == b.bc_raw && a.bc == b.bc, name + ": centralities differ");
        const GraphMetrics m = compute_metrics(g);
        c.require(m.dist == enumerated.dist && m.minhop == enumerated.minhop &&
                      m.maxhop == enumerated.maxhop,
                  name + ": metric matrices differ from enumeration");
        const auto report = check_identities(b, g, m);
        c.require(report.ok(), name + ": " + report.first_violation);
    };

    for (std::size_t n = 3; n <= 8; ++n)
        check_graph("path" + std::to_string(n), dvbc::testing::path_graph(n));
    for (std::size_t n = 3; n <= 8; ++n) check_graph("cycle" + std::to_string(n), generate_cycle(n));
    for (std::size_t k = 2; k <= 7; ++k)
        check_graph("star" + std::to_string(k), dvbc::testing::star_graph(k));
    for (std::size_t n = 3; n <= 5; ++n)
        check_graph("complete" + std::to_string(n), dvbc::testing::complete_graph(n));

    std::size_t random_samples = 0;
    for (std::uint64_t seed = 1; seed <= 17; ++seed)
        for (std::size_t n = 3; n <= 8; ++n) {
            check_graph("random(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")",
                        dvbc::testing::random_small_graph(n, seed * 31 + n, seed % 2 == 0));
            ++random_samples;
        }
    std::ostringstream detail;
    detail << graphs << " graphs (" << random_samples << " random samples), exact equality";
    c.detail = detail.str();
    return c;
}

// ---------------------------------------------------------------- criterion 6

Criterion equivalence(const std::vector<SuiteGraph>& suite) {
    Criterion c{6, "reference/fast equivalence under shuffled schedules (exact)"};
    const auto start = std::chrono::steady_clock::now();
    std::size_t graphs = 0, comparisons = 0;
    for (const SuiteGraph& sg : suite) {
        if (sg.graph.node_count() > 36) continue;
        ++graphs;
        const auto baseline = run_simulation<ExactMode>(sg.graph, Mode::reference, Schedule::canonical());
        c.require(baseline.converged, sg.name + ": reference run did not converge");
        auto compare = [&](const SimulationRun<ExactMode>& other, const std::string& label) {
            c.require(other.converged, sg.name + ": " + label + " did not converge");
            for (NodeId v = 0; v < sg.graph.node_count(); ++v)
                if (!baseline.final_states[v].observable_equal(other.final_states[v])) {
                    c.fail(sg.name + ": " + label + " differs at node " + std::to_string(v));
                    return;
                }
            ++comparisons;
        };
        compare(run_simulation<ExactMode>(sg.graph, Mode::fast, Schedule::canonical()), "fast canonical");
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            compare(run_simulation<ExactMode>(sg.graph, Mode::fast, Schedule::shuffled(seed)),
                    "fast shuffle " + std::to_string(seed));
            compare(run_simulation<ExactMode>(sg.graph, Mode::reference, Schedule::shuffled(seed)),
                    "reference shuffle " + std::to_string(seed));
        }
    }
    std::ostringstream detail;
    detail << graphs << " graphs x 41 runs, " << comparisons << " state comparisons, "
           << seconds_since(start) << " s";
    c.detail = detail.str();
    return c;
}

// ---------------------------------------------------------------- criterion 7

Criterion constant_work(Criterion& c3_float) {
    Criterion c{7, "constant work per message in the fast receive"};
    struct Point {
        double n, ops_per_msg;
    };
    std::vector<Point> points;
    const std::vector<std::pair<std::size_t, double>> sizes = {
        {50, 0.15}, {100, 0.08}, {200, 0.045}, {500, 0.02}};
    for (const auto& [n, p] : sizes)
        for (std::uint64_t seed = 1; seed <= 2; ++seed)
            for (bool weighted : {false, true}) {
                Graph g = generate_erdos_renyi(n, p, seed * 7 + n);
                if (weighted)
                    g = assign_weights(g, dvbc::testing::weighted_set_125(),
                                       derive_seed(seed, SeedStream::weights, n));
                const auto run = run_simulation<Float64Mode>(g, Mode::fast, Schedule::canonical());
                c.require(run.converged, "ops run did not converge");
                const double opm = static_cast<double>(run.ops.elementary) /
                                   static_cast<double>(run.ops.messages);
                c.require(opm <= 64.0, "ops/message exceeded the constant cap of 64");
                points.push_back({static_cast<double>(n), opm});

                const auto oracle = brandes<Float64Mode>(g);
                const double bc_max = *std::max_element(oracle.bc.begin(), oracle.bc.end());
                for (NodeId v = 0; v < n; ++v) {
                    const double estimate =
                        Float64Mode::to_double(normalized_centrality(run.final_states[v], n));
                    if (std::abs(estimate - oracle.bc[v]) >
                        1e-9 * std::max(bc_max, std::abs(oracle.bc[v]))) {
                        c3_float.fail("ops graph n=" + std::to_string(n) + ": oracle mismatch");
                        break;
                    }
                }
                ++c3_float.checks;
            }

    double mean_n = 0, mean_o = 0;
    for (const Point& pt : points) {
        mean_n += pt.n;
        mean_o += pt.ops_per_msg;
    }
    mean_n /= static_cast<double>(points.size());
    mean_o /= static_cast<double>(points.size());
    double cov = 0, var = 0;
    for (const Point& pt : points) {
        cov += (pt.n - mean_n) * (pt.ops_per_msg - mean_o);
        var += (pt.n - mean_n) * (pt.n - mean_n);
    }
    const double slope = cov / var;
    const double predicted_change = std::abs(slope) * (500.0 - 50.0);
    c.require(predicted_change <= 0.05 * mean_o,
              "ops/message drifts with n: predicted change " + std::to_string(predicted_change) +
                  " vs mean " + std::to_string(mean_o));
    std::ostringstream detail;
    detail << points.size() << " runs, mean " << mean_o << " ops/message, slope " << slope
           << " (predicted relative change over the range " << predicted_change / mean_o * 100
           << "%, allowed 5%)";
    c.detail = detail.str();
    return c;
}

// --------------------------------------------------------------- criterion 10

Criterion frequency_rule() {
    Criterion c{10, "optimal sensing frequency from the six-cycle"};
    const auto exact = brute_force<ExactMode>(generate_cycle(6));
    c.require(exact.bc[0] == mpq_class(1, 5), "six-cycle bc is not exactly 1/5");
    const double f = optimal_frequency(2, ExactMode::to_double(exact.bc[0]));
    c.require(std::abs(f - std::sqrt(10.0)) <= 1e-12, "frequency differs from sqrt(10)");
    c.require(std::isinf(optimal_frequency(3, 0.0)), "zero centrality must map to +infinity");
    c.detail = "sqrt(deg/bc) = sqrt(10) within 1e-12; +inf sentinel for bc = 0";
    return c;
}

}  // namespace

int main() {
    std::vector<Criterion> results;
    const auto suite = dvbc::testing::acceptance_suite();

    results.push_back(golden_trace());
    SuiteOutcome suite_outcome = run_suite(suite);
    results.push_back(oracle_self_check());
    Criterion c6 = equivalence(suite);
    Criterion c7 = constant_work(suite_outcome.c3);

    results.push_back(std::move(suite_outcome.c2));
    results.push_back(std::move(suite_outcome.c3));
    results.push_back(std::move(suite_outcome.c5));
    results.push_back(std::move(c6));
    results.push_back(std::move(c7));
    results.push_back(std::move(suite_outcome.c8));
    results.push_back(std::move(suite_outcome.c9));
    results.push_back(frequency_rule());

    std::sort(results.begin(), results.end(),
              [](const Criterion& a, const Criterion& b) { return a.id < b.id; });
    bool all_pass = true;
    for (const Criterion& c : results) {
        all_pass &= c.pass;
        std::printf("[%s] criterion %d: %s", c.pass ? "PASS" : "FAIL", c.id, c.title.c_str());
        if (!c.detail.empty()) std::printf(" -- %s", c.detail.c_str());
        std::printf("\n");
        for (const std::string& failure : c.failures) std::printf("        %s\n", failure.c_str());
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
    return all_pass ? 0 : 1;
}
