#include "dvbc/experiment.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "dvbc/analysis.hpp"
#include "dvbc/oracle.hpp"
#include "dvbc/trace.hpp"

namespace dvbc {

namespace fs = std::filesystem;
using json = nlohmann::json;

const char* arithmetic_name(Arithmetic a) {
    return a == Arithmetic::float64 ? "float64" : "exact";
}

Arithmetic parse_arithmetic(const std::string& name) {
    if (name == "float64" || name == "float") return Arithmetic::float64;
    if (name == "exact" || name == "rational") return Arithmetic::exact;
    throw ParseError("unknown arithmetic '" + name + "' (expected float64 or exact)");
}

WeightAssignment parse_weight_assignment(const std::string& values, const std::string& probs) {
    if (values.empty() || values == "unit") return WeightAssignment::unit();
    auto parse_list = [](const std::string& text) {
        std::vector<double> out;
        std::istringstream stream(text);
        std::string item;
        while (std::getline(stream, item, ',')) {
            if (item.empty()) continue;
            out.push_back(std::stod(item));
        }
        return out;
    };
    std::vector<double> vals = values == "set" ? std::vector<double>{1, 2, 5} : parse_list(values);
    std::vector<double> ps = parse_list(probs);
    if (ps.empty() && vals == std::vector<double>{1, 2, 5}) {
        // default distribution over {1,2,5}: mean 2.0
        WeightAssignment w;
        w.kind = WeightAssignment::Kind::random_from_set;
        return w;
    }
    return WeightAssignment::from_set(std::move(vals), std::move(ps));
}

Graph config_graph(const ExperimentConfig& config, std::size_t run_index) {
    const bool from_file = !config.graph_file.empty();
    if (from_file == !config.generator.empty())
        throw ParseError("exactly one of --graph and --gen must be given");
    if (from_file) return load_edge_list_file(config.graph_file, config.tick_digits);
    const GeneratorSpec spec = GeneratorSpec::parse(config.generator);
    const WeightAssignment weights = parse_weight_assignment(config.weights, config.weight_probs);
    const std::uint64_t run_seed =
        config.sweep > 1 ? derive_seed(config.seed, SeedStream::sweep, run_index) : config.seed;
    return generate(spec, weights, run_seed, config.tick_digits);
}

namespace {

Schedule config_schedule(const ExperimentConfig& config, std::size_t run_index) {
    Schedule schedule;
    if (config.schedule == "canonical") {
        schedule.order = Schedule::Order::canonical;
    } else if (config.schedule == "shuffled" || config.schedule == "shuffle") {
        schedule.order = Schedule::Order::shuffled;
        schedule.seed = derive_seed(config.seed, SeedStream::shuffle, run_index);
    } else {
        throw ParseError("unknown schedule '" + config.schedule + "'");
    }
    schedule.max_phases = config.max_phases;
    return schedule;
}

template <class M>
RunOutcome execute_with(const Graph& g, Mode mode, const Schedule& schedule) {
    SimulationRun<M> run = run_simulation<M>(g, mode, schedule);
    RunOutcome out;
    out.node_count = g.node_count();
    out.converged = run.converged;
    out.quiescence_phase = run.quiescence_phase;
    out.c_quiescence_phase = run.c_quiescence_phase;
    out.phases_executed = run.phases_executed;
    out.messages = run.messages_processed;
    out.elementary_ops = run.ops.elementary;
    out.centrality_by_phase = std::move(run.centrality_by_phase);
    out.t_d = std::move(run.last_distance_change);
    out.t_c = std::move(run.last_centrality_change);
    out.final_centrality.reserve(g.node_count());
    const std::size_t n = g.node_count();
    for (NodeId v = 0; v < n; ++v) {
        if (n >= 3)
            out.final_centrality.push_back(M::to_double(normalized_centrality(run.final_states[v], n)));
        else
            out.final_centrality.push_back(M::to_double(run.final_states[v].centrality()));
    }
    return out;
}

void write_json_file(const fs::path& path, const json& value) {
    std::ofstream out(path);
    out << value.dump(2) << "\n";
}

json error_json(const std::string& kind, const std::string& message) {
    return json{{"error", kind}, {"message", message}};
}

}  // namespace

RunOutcome execute_run(const Graph& g, Mode mode, Arithmetic arithmetic, const Schedule& schedule) {
    return arithmetic == Arithmetic::float64 ? execute_with<Float64Mode>(g, mode, schedule)
                                             : execute_with<ExactMode>(g, mode, schedule);
}

int cmd_run(const ExperimentConfig& config, std::ostream& diag) {
    fs::path out_dir;
    Mode mode{};
    Arithmetic arithmetic{};
    try {
        out_dir = config.out_dir;
        fs::create_directories(out_dir);
        mode = parse_mode(config.mode);
        arithmetic = parse_arithmetic(config.arithmetic);
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    int exit_code = kExitOk;
    std::vector<std::vector<double>> error_curves;
    json run_summaries = json::array();

    for (std::size_t i = 0; i < config.sweep; ++i) {
        const fs::path run_dir = config.sweep > 1 ? out_dir / ("run_" + std::to_string(i)) : out_dir;
        try {
            fs::create_directories(run_dir);
            const Graph g = config_graph(config, i);
            if (g.node_count() < 3)
                throw ValidationError("experiment runs need at least 3 nodes");
            const Schedule schedule = config_schedule(config, i);
            const GraphMetrics metrics = compute_metrics(g);
            const auto oracle = brandes<Float64Mode>(g);
            const RunOutcome outcome = execute_run(g, mode, arithmetic, schedule);

            if (!outcome.converged) {
                const json err = error_json("not_converged",
                                            "no quiescence within " +
                                                std::to_string(outcome.phases_executed) + " phases");
                write_json_file(run_dir / "error.json", err);
                diag << "error: run " << i << " did not converge\n";
                exit_code = std::max(exit_code, kExitNotConverged);
                continue;
            }

            ConvergenceRecord record;
            record.quiescence_phase = outcome.quiescence_phase;
            record.t_d = outcome.t_d;
            record.t_c = outcome.t_c;
            record.bc_raw = oracle.bc_raw;
            record.bc = oracle.bc;
            record.ecc_hop = metrics.ecc_hop;
            for (const auto& estimate : outcome.centrality_by_phase)
                record.global_error_by_phase.push_back(global_error(estimate, oracle.bc_raw));

            {
                std::ofstream csv(run_dir / "error.csv");
                write_phase_error_csv(record, csv);
            }
            {
                std::ofstream csv(run_dir / "nodes.csv");
                write_node_csv(record, csv);
            }
            {
                std::ofstream csv(run_dir / "histogram.csv");
                write_histogram_csv(record, csv);
            }

            const std::size_t bound = 2 * static_cast<std::size_t>(metrics.Diam) + 1;
            const bool bound_ok = outcome.quiescence_phase <= bound;
            const EccentricityReport ecc =
                eccentricity_report(record.bc, record.ecc_hop, config.top_k);
            json summary{
                {"nodes", g.node_count()},
                {"edges", g.edge_count()},
                {"diam", metrics.diam},
                {"Diam", metrics.Diam},
                {"bound", bound},
                {"bound_ok", bound_ok},
                {"mode", mode_name(mode)},
                {"arithmetic", arithmetic_name(arithmetic)},
                {"schedule", config.schedule},
                {"seed", config.seed},
                {"run_index", i},
                {"converged", true},
                {"quiescence_phase", outcome.quiescence_phase},
                {"c_quiescence_phase", outcome.c_quiescence_phase},
                {"phases_executed", outcome.phases_executed},
                {"messages", outcome.messages},
                {"elementary_ops", outcome.elementary_ops},
                {"ops_per_message",
                 outcome.messages ? static_cast<double>(outcome.elementary_ops) /
                                        static_cast<double>(outcome.messages)
                                  : 0.0},
                {"final_global_error", record.global_error_by_phase.back()},
                {"eccentricity_mean_all", ecc.mean_all},
                {"eccentricity_mean_top", ecc.mean_top},
                {"eccentricity_top_k", ecc.top_k},
            };
            write_json_file(run_dir / "summary.json", summary);
            run_summaries.push_back(summary);
            error_curves.push_back(record.global_error_by_phase);
            if (!bound_ok) {
                diag << "bound violation: run " << i << " quiesced at phase "
                     << outcome.quiescence_phase << " > " << bound << "\n";
                exit_code = std::max(exit_code, kExitBoundFailure);
            }
        } catch (const MetricUndefinedError& e) {
            diag << "error: " << e.what() << "\n";
            write_json_file(run_dir / "error.json", error_json("metric_undefined", e.what()));
            return kExitInputError;
        } catch (const NotConvergedError& e) {
            diag << "error: " << e.what() << "\n";
            write_json_file(run_dir / "error.json", error_json("not_converged", e.what()));
            exit_code = std::max(exit_code, kExitNotConverged);
        } catch (const OverflowError& e) {
            diag << "error: " << e.what() << "\n";
            write_json_file(run_dir / "error.json", error_json("overflow", e.what()));
            return kExitInputError;
        } catch (const std::exception& e) {
            diag << "error: " << e.what() << "\n";
            write_json_file(run_dir / "error.json", error_json("input", e.what()));
            return kExitInputError;
        }
    }

    if (config.sweep > 1) {
        std::size_t longest = 0;
        for (const auto& curve : error_curves) longest = std::max(longest, curve.size());
        std::ofstream csv(out_dir / "sweep_error_mean.csv");
        csv << "phase,mean_global_error\n";
        for (std::size_t p = 0; p < longest; ++p) {
            double total = 0;
            for (const auto& curve : error_curves)
                total += p < curve.size() ? curve[p] : curve.back();  // converged runs hold final value
            csv << p << ","
                << (error_curves.empty() ? 0.0 : total / static_cast<double>(error_curves.size()))
                << "\n";
        }
        write_json_file(out_dir / "sweep_summary.json",
                        json{{"runs", run_summaries}, {"sweep", config.sweep}});
    }
    return exit_code;
}

int cmd_gen(const ExperimentConfig& config, const std::string& out_path, std::ostream& diag) {
    try {
        if (config.generator.empty()) throw ParseError("gen needs a generator spec");
        const Graph g = config_graph(config);
        std::ostringstream header;
        header << config.generator << " weights=" << (config.weights.empty() ? "unit" : config.weights)
               << " seed=" << config.seed;
        if (out_path.empty() || out_path == "-") {
            save_edge_list(g, std::cout, header.str());
        } else {
            std::ofstream out(out_path);
            if (!out) throw ParseError("cannot open '" + out_path + "' for writing");
            save_edge_list(g, out, header.str());
        }
        return kExitOk;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_oracle(const ExperimentConfig& config, const std::string& out_path, std::ostream& diag) {
    try {
        const Graph g = config_graph(config);
        const GraphMetrics metrics = compute_metrics(g);
        const auto exact = brandes<Float64Mode>(g);
        if (out_path.empty() || out_path == "-") {
            write_oracle_csv(g, metrics, exact, std::cout);
        } else {
            std::ofstream out(out_path);
            if (!out) throw ParseError("cannot open '" + out_path + "' for writing");
            write_oracle_csv(g, metrics, exact, out);
        }
        return kExitOk;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_trace(const ExperimentConfig& config, std::size_t phases, std::ostream& out,
              std::ostream& diag) {
    try {
        const Graph g = config_graph(config);
        const Mode mode = parse_mode(config.mode);
        const Arithmetic arithmetic = parse_arithmetic(config.arithmetic);
        Schedule schedule = config_schedule(config, 0);
        if (phases) schedule.max_phases = phases;
        const int tick_digits = g.tick_digits();

        auto emit = [&](auto mode_tag) {
            using M = decltype(mode_tag);
            PhaseObserver<M> observer = [&](std::size_t phase, const std::vector<NodeState<M>>& states) {
                for (const auto& state : states) {
                    json line = node_state_json<M>(state, tick_digits, true);
                    line["phase"] = phase;
                    out << line.dump() << "\n";
                }
            };
            run_simulation<M>(g, mode, schedule, observer);
        };
        if (arithmetic == Arithmetic::float64)
            emit(Float64Mode{});
        else
            emit(ExactMode{});
        return kExitOk;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace dvbc
