#ifndef DVBC_WEIGHT_HPP
#define DVBC_WEIGHT_HPP

#include <cstdint>
#include <limits>
#include <string>

#include "dvbc/errors.hpp"

namespace dvbc {

// Exact fixed-point edge weight / path length. Finite values count ticks of
// 10^-k units (k is a property of the I/O layer, default 3); +infinity is a
// sentinel. Addition saturates at +infinity, equality is exact -- the
// protocol branches on equalities like d + w == D[t], which float arithmetic
// would corrupt.
class Weight {
public:
    static constexpr std::int64_t kInfinityRaw = std::numeric_limits<std::int64_t>::max();

    constexpr Weight() : raw_(kInfinityRaw) {}

    static constexpr Weight infinity() { return Weight(); }
    static constexpr Weight zero() { return from_raw(0); }
    static constexpr Weight from_raw(std::int64_t ticks) {
        Weight w;
        w.raw_ = ticks;
        return w;
    }

    constexpr std::int64_t raw() const { return raw_; }
    constexpr bool finite() const { return raw_ != kInfinityRaw; }

    friend constexpr Weight operator+(Weight a, Weight b) {
        if (!a.finite() || !b.finite()) return infinity();
        std::int64_t sum = 0;
        if (__builtin_add_overflow(a.raw_, b.raw_, &sum)) return infinity();
        return from_raw(sum);
    }
    Weight& operator+=(Weight other) { return *this = *this + other; }

    friend constexpr bool operator==(Weight a, Weight b) { return a.raw_ == b.raw_; }
    friend constexpr bool operator!=(Weight a, Weight b) { return a.raw_ != b.raw_; }
    friend constexpr bool operator<(Weight a, Weight b) { return a.raw_ < b.raw_; }
    friend constexpr bool operator<=(Weight a, Weight b) { return a.raw_ <= b.raw_; }
    friend constexpr bool operator>(Weight a, Weight b) { return a.raw_ > b.raw_; }
    friend constexpr bool operator>=(Weight a, Weight b) { return a.raw_ >= b.raw_; }

    // Value in units for display; +inf maps to the IEEE infinity.
    double to_double(int tick_digits) const;

private:
    std::int64_t raw_;
};

// Number of ticks in one unit for a given fractional precision.
std::int64_t ticks_per_unit(int tick_digits);

// Parses a non-negative decimal like "2", "2.5" or "0.001" into ticks.
// Rejects more fractional digits than tick_digits allows.
std::int64_t parse_ticks(const std::string& text, int tick_digits);

// Renders ticks as a minimal decimal ("2", "2.5"); inverse of parse_ticks.
std::string format_ticks(std::int64_t ticks, int tick_digits);

}  // namespace dvbc

#endif
