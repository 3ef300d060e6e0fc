#include "dvbc/weight.hpp"

#include <cctype>
#include <cstdio>
#include <limits>

namespace dvbc {

std::int64_t ticks_per_unit(int tick_digits) {
    if (tick_digits < 0 || tick_digits > 9) throw ParseError("tick precision must be in [0, 9]");
    std::int64_t scale = 1;
    for (int i = 0; i < tick_digits; ++i) scale *= 10;
    return scale;
}

double Weight::to_double(int tick_digits) const {
    if (!finite()) return std::numeric_limits<double>::infinity();
    return static_cast<double>(raw_) / static_cast<double>(ticks_per_unit(tick_digits));
}

std::int64_t parse_ticks(const std::string& text, int tick_digits) {
    const std::int64_t scale = ticks_per_unit(tick_digits);
    if (text.empty()) throw ParseError("empty weight");
    std::size_t i = 0;
    std::int64_t integer_part = 0;
    bool any_digit = false;
    for (; i < text.size() && text[i] != '.'; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("invalid weight '" + text + "'");
        if (__builtin_mul_overflow(integer_part, 10, &integer_part) ||
            __builtin_add_overflow(integer_part, text[i] - '0', &integer_part))
            throw ParseError("weight out of range '" + text + "'");
        any_digit = true;
    }
    std::int64_t frac = 0;
    std::int64_t frac_scale = scale;
    if (i < text.size()) {  // fractional part
        ++i;
        if (i == text.size()) throw ParseError("invalid weight '" + text + "'");
        for (; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("invalid weight '" + text + "'");
            if (frac_scale == 1) {
                // more fractional digits than the tick precision holds
                if (text[i] != '0')
                    throw ParseError("weight '" + text + "' needs more than " +
                                     std::to_string(tick_digits) + " fractional digits");
                continue;
            }
            frac_scale /= 10;
            frac += (text[i] - '0') * frac_scale;
            any_digit = true;
        }
    }
    if (!any_digit) throw ParseError("invalid weight '" + text + "'");
    std::int64_t ticks = 0;
    if (__builtin_mul_overflow(integer_part, scale, &ticks) ||
        __builtin_add_overflow(ticks, frac, &ticks))
        throw ParseError("weight out of range '" + text + "'");
    return ticks;
}

std::string format_ticks(std::int64_t ticks, int tick_digits) {
    const std::int64_t scale = ticks_per_unit(tick_digits);
    std::string out = std::to_string(ticks / scale);
    std::int64_t frac = ticks % scale;
    if (frac != 0) {
        std::string digits;
        std::int64_t place = scale / 10;
        while (frac != 0) {
            digits.push_back(static_cast<char>('0' + frac / place));
            frac %= place;
            place /= 10;
        }
        out.push_back('.');
        out += digits;
    }
    return out;
}

}  // namespace dvbc
