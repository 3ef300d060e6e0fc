#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "dvbc/experiment.hpp"

namespace {

void add_graph_source(CLI::App* cmd, dvbc::ExperimentConfig& config) {
    cmd->add_option("--graph", config.graph_file, "edge-list file (lines `u v w`, # comments)");
    cmd->add_option("--gen", config.generator,
                    "generator spec: grid(w,h) hypercube(d) tree(h) cycle(n) er(n,p) ba(n,m) "
                    "geometric(n,r)");
    cmd->add_option("--weights", config.weights,
                    "edge weights: unit, set (= 1,2,5), or a comma list of values");
    cmd->add_option("--weight-probs", config.weight_probs,
                    "comma list of probabilities matching --weights");
    cmd->add_option("--seed", config.seed, "master seed; all randomness derives from it");
    cmd->add_option("--tick-digits", config.tick_digits,
                    "fractional digits of the fixed-point weight format")
        ->check(CLI::Range(0, 9));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance-vector betweenness centrality simulator"};
    app.require_subcommand(1);

    dvbc::ExperimentConfig config;
    std::string out_path;
    std::size_t trace_phases = 0;

    CLI::App* run = app.add_subcommand("run", "simulate, compare against the oracle, write CSVs");
    add_graph_source(run, config);
    run->add_option("--mode", config.mode, "bellman_ford | reference | fast");
    run->add_option("--arithmetic", config.arithmetic, "float64 | exact");
    run->add_option("--schedule", config.schedule, "canonical | shuffled");
    run->add_option("--max-phases", config.max_phases, "phase cap (0 = 4n)");
    run->add_option("--sweep", config.sweep, "number of seeded runs");
    run->add_option("--top-k", config.top_k, "eccentricity report size");
    run->add_option("--out", config.out_dir, "output directory");
    run->set_config("--config", "", "read options from an INI file");

    CLI::App* gen = app.add_subcommand("gen", "generate a graph and emit its edge list");
    add_graph_source(gen, config);
    gen->add_option("-o,--out", out_path, "output file (default stdout)");
    gen->set_config("--config");

    CLI::App* oracle = app.add_subcommand("oracle", "exact per-node centrality CSV");
    add_graph_source(oracle, config);
    oracle->add_option("-o,--out", out_path, "output file (default stdout)");
    oracle->set_config("--config");

    CLI::App* trace = app.add_subcommand("trace", "JSON-lines per-phase state dump");
    add_graph_source(trace, config);
    trace->add_option("--mode", config.mode, "bellman_ford | reference | fast");
    trace->add_option("--arithmetic", config.arithmetic, "float64 | exact");
    trace->add_option("--phases", trace_phases, "number of phases (0 = run to quiescence)");
    trace->set_config("--config");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : dvbc::kExitInputError;
    }

    if (run->parsed()) {
        const int code = dvbc::cmd_run(config, std::cerr);
        if (code == dvbc::kExitOk || code == dvbc::kExitBoundFailure) {
            // effective config, reusable via --config
            std::ofstream ini(std::filesystem::path(config.out_dir) / "config.ini");
            ini << run->config_to_str(true, true);
        }
        return code;
    }
    if (gen->parsed()) return dvbc::cmd_gen(config, out_path, std::cerr);
    if (oracle->parsed()) return dvbc::cmd_oracle(config, out_path, std::cerr);
    if (trace->parsed()) return dvbc::cmd_trace(config, trace_phases, std::cout, std::cerr);
    return dvbc::kExitInputError;
}
