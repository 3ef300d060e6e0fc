#ifndef DVBC_RNG_HPP
#define DVBC_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace dvbc {

// splitmix64 mixing step; used both as a seed deriver and inside Rng.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seed-splitting scheme: one master seed pins an entire experiment. Every
// consumer (graph generator, weight assignment, schedule shuffle, sweep run)
// draws its own seed as derive_seed(master, stream, index).
enum class SeedStream : std::uint64_t {
    graph = 1,
    weights = 2,
    shuffle = 3,
    sweep = 4,
};

constexpr std::uint64_t derive_seed(std::uint64_t master, SeedStream stream, std::uint64_t index = 0) {
    return splitmix64(splitmix64(master + static_cast<std::uint64_t>(stream) * 0x9e3779b97f4a7c15ULL) + index);
}

// Deterministic random source. All distributions are implemented explicitly
// on top of mt19937_64 output so that streams are reproducible independent of
// the standard library's distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    // In-place Fisher-Yates shuffle.
    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace dvbc

#endif
