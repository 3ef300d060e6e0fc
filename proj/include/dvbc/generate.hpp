#ifndef DVBC_GENERATE_HPP
#define DVBC_GENERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dvbc/graph.hpp"

namespace dvbc {

// Edge-weight assignment for generated graphs: every edge gets one unit, or
// a value drawn from a weighted set (default {1, 2, 5} with probabilities
// 5/12, 5/12, 2/12, mean 2.0).
struct WeightAssignment {
    enum class Kind { unit, random_from_set };
    Kind kind = Kind::unit;
    std::vector<double> values = {1, 2, 5};
    std::vector<double> probabilities = {5.0 / 12, 5.0 / 12, 2.0 / 12};

    static WeightAssignment unit() { return {}; }
    static WeightAssignment from_set(std::vector<double> values, std::vector<double> probabilities);
};

struct GeneratorSpec {
    enum class Family { grid, hypercube, binary_tree, cycle, erdos_renyi, barabasi_albert, geometric };
    Family family = Family::cycle;
    // grid: a=width, b=height; hypercube: a=dimension; binary_tree: a=height;
    // cycle: a=n; erdos_renyi: a=n, x=p; barabasi_albert: a=n, b=links per new
    // node; geometric: a=n, x=radius.
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    double x = 0;

    // Textual form used by the CLI and emitted into file headers:
    // grid(w,h) hypercube(d) tree(h) cycle(n) er(n,p) ba(n,m) geometric(n,r)
    static GeneratorSpec parse(const std::string& text);
    std::string to_string() const;
};

// Deterministic for a fixed seed (byte-identical edge lists across runs).
// Random families are redrawn until connected, up to 1000 attempts.
Graph generate(const GeneratorSpec& spec, const WeightAssignment& weights, std::uint64_t seed,
               int tick_digits = 3);

Graph generate_grid(std::size_t width, std::size_t height);
Graph generate_hypercube(std::size_t dimension);
Graph generate_binary_tree(std::size_t height);
Graph generate_cycle(std::size_t n);
Graph generate_erdos_renyi(std::size_t n, double p, std::uint64_t seed);
Graph generate_barabasi_albert(std::size_t n, std::size_t links_per_node, std::uint64_t seed);
Graph generate_geometric(std::size_t n, double radius, std::uint64_t seed);

// Replaces every weight with a draw from the assignment (seeded stream).
Graph assign_weights(const Graph& g, const WeightAssignment& weights, std::uint64_t seed);

}  // namespace dvbc

#endif
