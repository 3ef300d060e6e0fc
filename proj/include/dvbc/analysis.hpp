#ifndef DVBC_ANALYSIS_HPP
#define DVBC_ANALYSIS_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "dvbc/errors.hpp"
#include "dvbc/graph_metrics.hpp"
#include "dvbc/oracle.hpp"
#include "dvbc/simulator.hpp"

namespace dvbc {

// l2 distance between the running estimates and the true (unnormalized)
// centralities, relative to the true norm. Normalization cancels, so raw
// values are compared directly. Undefined when the reference is all zero
// (complete graphs).
double global_error(std::span<const double> estimate, std::span<const double> reference_raw);

// Everything the experiment CSVs are built from.
struct ConvergenceRecord {
    std::size_t quiescence_phase = 0;
    std::vector<double> global_error_by_phase;  // index 0 = initial state
    std::vector<std::size_t> t_d;
    std::vector<std::size_t> t_c;
    std::vector<double> bc_raw;  // oracle, unnormalized
    std::vector<double> bc;      // oracle, normalized
    std::vector<std::uint32_t> ecc_hop;
};

template <class M>
ConvergenceRecord make_convergence_record(const SimulationRun<M>& run,
                                          const ExactCentrality<Float64Mode>& oracle,
                                          const GraphMetrics& metrics) {
    LocalConvergence local = record_local_convergence(run);
    ConvergenceRecord record;
    record.quiescence_phase = run.quiescence_phase;
    record.t_d = std::move(local.t_d);
    record.t_c = std::move(local.t_c);
    record.bc_raw = oracle.bc_raw;
    record.bc = oracle.bc;
    record.ecc_hop = metrics.ecc_hop;
    record.global_error_by_phase.reserve(run.centrality_by_phase.size());
    for (const auto& estimate : run.centrality_by_phase)
        record.global_error_by_phase.push_back(global_error(estimate, oracle.bc_raw));
    return record;
}

// Counts per phase of nodes whose centrality settled exactly then
// (counts[p] = #{v : t_c(v) = p}); counts[0] holds the never-changed nodes.
std::vector<std::size_t> convergence_histogram(std::span<const std::size_t> t_c,
                                               std::size_t quiescence_phase);

struct EccentricityReport {
    double mean_all = 0;
    double mean_top = 0;
    std::size_t top_k = 0;
};

// Mean hop eccentricity over all nodes and over the top_k nodes by
// centrality (ties broken by node id).
EccentricityReport eccentricity_report(std::span<const double> bc,
                                       std::span<const std::uint32_t> ecc_hop, std::size_t top_k);

void write_phase_error_csv(const ConvergenceRecord& record, std::ostream& out);
void write_node_csv(const ConvergenceRecord& record, std::ostream& out);
void write_histogram_csv(const ConvergenceRecord& record, std::ostream& out);

// CSV for the oracle command: node_id, degree, ecc_hop, bc_raw, bc, f_v.
void write_oracle_csv(const Graph& g, const GraphMetrics& m, const ExactCentrality<Float64Mode>& e,
                      std::ostream& out);

}  // namespace dvbc

#endif
