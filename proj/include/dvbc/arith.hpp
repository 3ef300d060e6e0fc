#ifndef DVBC_ARITH_HPP
#define DVBC_ARITH_HPP

#include <cstdint>
#include <functional>
#include <string>

#include <gmpxx.h>

#include "dvbc/errors.hpp"

namespace dvbc {

// Non-negative shortest-path count with checked arithmetic: wrap-around is a
// reported error, never silent.
class CheckedU64 {
public:
    constexpr CheckedU64() : value_(0) {}
    constexpr CheckedU64(std::uint64_t v) : value_(v) {}

    std::uint64_t value() const { return value_; }

    CheckedU64& operator+=(CheckedU64 other) {
        if (__builtin_add_overflow(value_, other.value_, &value_))
            throw OverflowError("path count exceeds 64 bits");
        return *this;
    }
    CheckedU64& operator-=(CheckedU64 other) {
        if (__builtin_sub_overflow(value_, other.value_, &value_))
            throw OverflowError("path count went negative");
        return *this;
    }
    friend CheckedU64 operator+(CheckedU64 a, CheckedU64 b) { return a += b; }
    friend CheckedU64 operator-(CheckedU64 a, CheckedU64 b) { return a -= b; }
    friend bool operator==(CheckedU64 a, CheckedU64 b) { return a.value_ == b.value_; }
    friend bool operator!=(CheckedU64 a, CheckedU64 b) { return a.value_ != b.value_; }

private:
    std::uint64_t value_;
};

// Arithmetic mode for the protocol, the simulator and the oracles.
//
// Float64Mode: 64-bit checked counts, double contributions. Fast; divisions
// round, so oracle comparisons carry a tolerance.
//
// ExactMode: arbitrary-precision counts and rational contributions (GMP).
// Bit-exact; used for fixed-point equivalence and exact oracle equality on
// small graphs.
struct Float64Mode {
    using Count = CheckedU64;
    using Real = double;
    static constexpr const char* name = "float64";

    static Real to_real(const Count& c) { return static_cast<Real>(c.value()); }
    static Real real_from_int(long v) { return static_cast<Real>(v); }
    static double to_double(const Real& r) { return r; }
    static bool count_is_zero(const Count& c) { return c.value() == 0; }
    static double count_to_double(const Count& c) { return static_cast<double>(c.value()); }
    static void hash_count(std::uint64_t& h, const Count& c) { hash_mix(h, c.value()); }
    static void hash_real(std::uint64_t& h, const Real& r) {
        std::uint64_t bits;
        static_assert(sizeof(bits) == sizeof(r));
        __builtin_memcpy(&bits, &r, sizeof(bits));
        hash_mix(h, bits);
    }
    static void hash_mix(std::uint64_t& h, std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
};

struct ExactMode {
    using Count = mpz_class;
    using Real = mpq_class;
    static constexpr const char* name = "exact";

    static Real to_real(const Count& c) { return mpq_class(c); }
    static Real real_from_int(long v) { return mpq_class(v); }
    static double to_double(const Real& r) { return r.get_d(); }
    static bool count_is_zero(const Count& c) { return sgn(c) == 0; }
    static double count_to_double(const Count& c) { return c.get_d(); }
    static void hash_count(std::uint64_t& h, const Count& c) { hash_string(h, c.get_str()); }
    static void hash_real(std::uint64_t& h, const Real& r) { hash_string(h, r.get_str()); }
    static void hash_string(std::uint64_t& h, const std::string& s) {
        for (char ch : s) Float64Mode::hash_mix(h, static_cast<unsigned char>(ch));
    }
};

}  // namespace dvbc

#endif
