#include "dvbc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "dvbc/oracle.hpp"

namespace dvbc {

namespace {

// Shortest round-trip decimal form.
std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double parsed = std::strtod(buf, nullptr);
    for (int precision = 1; precision < 17; ++precision) {
        char shorter[32];
        std::snprintf(shorter, sizeof(shorter), "%.*g", precision, v);
        if (std::strtod(shorter, nullptr) == parsed) return shorter;
    }
    return buf;
}

}  // namespace

double global_error(std::span<const double> estimate, std::span<const double> reference_raw) {
    if (estimate.size() != reference_raw.size())
        throw std::invalid_argument("estimate/reference size mismatch");
    double diff_sq = 0, ref_sq = 0;
    for (std::size_t v = 0; v < estimate.size(); ++v) {
        const double d = reference_raw[v] - estimate[v];
        diff_sq += d * d;
        ref_sq += reference_raw[v] * reference_raw[v];
    }
    if (ref_sq == 0.0)
        throw MetricUndefinedError("relative error undefined: reference centralities are all zero");
    return std::sqrt(diff_sq) / std::sqrt(ref_sq);
}

std::vector<std::size_t> convergence_histogram(std::span<const std::size_t> t_c,
                                               std::size_t quiescence_phase) {
    std::vector<std::size_t> counts(quiescence_phase + 1, 0);
    for (std::size_t phase : t_c) {
        if (phase >= counts.size()) counts.resize(phase + 1, 0);
        ++counts[phase];
    }
    return counts;
}

EccentricityReport eccentricity_report(std::span<const double> bc,
                                       std::span<const std::uint32_t> ecc_hop, std::size_t top_k) {
    if (bc.size() != ecc_hop.size()) throw std::invalid_argument("bc/eccentricity size mismatch");
    EccentricityReport report;
    report.top_k = std::min(top_k, bc.size());
    if (bc.empty()) return report;
    report.mean_all =
        std::accumulate(ecc_hop.begin(), ecc_hop.end(), 0.0) / static_cast<double>(ecc_hop.size());
    std::vector<std::size_t> by_bc(bc.size());
    std::iota(by_bc.begin(), by_bc.end(), 0);
    std::sort(by_bc.begin(), by_bc.end(), [&](std::size_t a, std::size_t b) {
        if (bc[a] != bc[b]) return bc[a] > bc[b];
        return a < b;
    });
    double total = 0;
    for (std::size_t i = 0; i < report.top_k; ++i) total += ecc_hop[by_bc[i]];
    report.mean_top = report.top_k ? total / static_cast<double>(report.top_k) : 0.0;
    return report;
}

void write_phase_error_csv(const ConvergenceRecord& record, std::ostream& out) {
    out << "phase,global_error\n";
    for (std::size_t p = 0; p < record.global_error_by_phase.size(); ++p)
        out << p << "," << format_double(record.global_error_by_phase[p]) << "\n";
}

void write_node_csv(const ConvergenceRecord& record, std::ostream& out) {
    out << "node,bc,ecc,T_D,T_C\n";
    for (std::size_t v = 0; v < record.bc.size(); ++v)
        out << v << "," << format_double(record.bc[v]) << "," << record.ecc_hop[v] << ","
            << record.t_d[v] << "," << record.t_c[v] << "\n";
}

void write_histogram_csv(const ConvergenceRecord& record, std::ostream& out) {
    out << "phase,count\n";
    const auto counts = convergence_histogram(record.t_c, record.quiescence_phase);
    for (std::size_t p = 0; p < counts.size(); ++p) out << p << "," << counts[p] << "\n";
}

void write_oracle_csv(const Graph& g, const GraphMetrics& m, const ExactCentrality<Float64Mode>& e,
                      std::ostream& out) {
    out << "node_id,degree,ecc_hop,bc_raw,bc,f_v\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const double f = optimal_frequency(g.degree(v), e.bc[v]);
        out << v << "," << g.degree(v) << "," << m.ecc_hop[v] << "," << format_double(e.bc_raw[v])
            << "," << format_double(e.bc[v]) << ","
            << (std::isinf(f) ? "inf" : format_double(f)) << "\n";
    }
}

}  // namespace dvbc
