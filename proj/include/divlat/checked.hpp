#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "divlat/errors.hpp"

namespace divlat {

/// Default upper bound on every plain integer the library produces.
inline constexpr std::uint64_t kDefaultIntegerBound = std::numeric_limits<std::int64_t>::max();

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, std::string_view what,
                                 std::uint64_t bound = kDefaultIntegerBound) {
    std::uint64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out) || out > bound) {
        throw RangeError(std::string(what) + " exceeds the integer bound");
    }
    return out;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, std::string_view what,
                                 std::uint64_t bound = kDefaultIntegerBound) {
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out) || out > bound) {
        throw RangeError(std::string(what) + " exceeds the integer bound");
    }
    return out;
}

}  // namespace divlat
