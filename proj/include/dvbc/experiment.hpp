#ifndef DVBC_EXPERIMENT_HPP
#define DVBC_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dvbc/generate.hpp"
#include "dvbc/graph.hpp"
#include "dvbc/simulator.hpp"

namespace dvbc {

enum class Arithmetic { float64, exact };
const char* arithmetic_name(Arithmetic a);
Arithmetic parse_arithmetic(const std::string& name);

// CI-friendly exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBoundFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNotConverged = 3;

// A fully pinned experiment: config + binary version reproduce a run
// byte-exactly. One master seed derives the generator, weight and shuffle
// streams (see rng.hpp).
struct ExperimentConfig {
    std::string graph_file;        // exactly one of graph_file /
    std::string generator;         // generator must be set
    std::string weights = "unit";  // "unit" or a comma list of values
    std::string weight_probs;      // optional comma list, same length
    std::uint64_t seed = 1;
    int tick_digits = 3;
    std::string mode = "fast";
    std::string arithmetic = "float64";
    std::string schedule = "canonical";  // canonical | shuffled
    std::size_t max_phases = 0;          // 0 = automatic
    std::size_t sweep = 1;               // number of seeded runs
    std::size_t top_k = 10;              // eccentricity report size
    std::string out_dir = "out";
};

WeightAssignment parse_weight_assignment(const std::string& values, const std::string& probs);

// Materializes the configured graph; sweep runs re-derive the generator seed
// per run index, file-backed graphs are shared.
Graph config_graph(const ExperimentConfig& config, std::size_t run_index = 0);

// Mode-erased result of one simulation, enough for every CSV/JSON artifact.
struct RunOutcome {
    std::size_t node_count = 0;
    bool converged = false;
    std::size_t quiescence_phase = 0;
    std::size_t c_quiescence_phase = 0;
    std::size_t phases_executed = 0;
    std::uint64_t messages = 0;
    std::uint64_t elementary_ops = 0;
    std::vector<std::vector<double>> centrality_by_phase;
    std::vector<std::size_t> t_d;
    std::vector<std::size_t> t_c;
    std::vector<double> final_centrality;  // normalized
};

RunOutcome execute_run(const Graph& g, Mode mode, Arithmetic arithmetic, const Schedule& schedule);

// Subcommand bodies; they write artifacts and return an exit code, logging
// human-readable diagnostics to `diag` and machine-readable errors as JSON
// files in the output directory (run) or to `diag` (others).
int cmd_run(const ExperimentConfig& config, std::ostream& diag);
int cmd_gen(const ExperimentConfig& config, const std::string& out_path, std::ostream& diag);
int cmd_oracle(const ExperimentConfig& config, const std::string& out_path, std::ostream& diag);
int cmd_trace(const ExperimentConfig& config, std::size_t phases, std::ostream& out,
              std::ostream& diag);

}  // namespace dvbc

#endif
