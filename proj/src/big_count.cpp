#include "divlat/big_count.hpp"

#include <limits>

namespace divlat {

std::optional<BigCount> parse_decimal(std::string_view text) {
    if (text.empty()) return std::nullopt;
    BigCount value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + (c - '0');
    }
    return value;
}

std::optional<std::uint64_t> to_u64(const BigCount& value) {
    if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return value.convert_to<std::uint64_t>();
}

BigCount multinomial(const std::vector<unsigned>& parts) {
    // Product of binomials C(running_total, part) keeps every step exact.
    BigCount result = 1;
    unsigned total = 0;
    for (unsigned part : parts) {
        for (unsigned j = 1; j <= part; ++j) {
            result *= total + j;
            result /= j;
        }
        total += part;
    }
    return result;
}

}  // namespace divlat
