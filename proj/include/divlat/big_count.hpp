#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace divlat {

/// Exact nonnegative counter for path counts, which outgrow 64 bits quickly.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

/// Parses an unsigned decimal literal; nullopt on anything else.
std::optional<BigCount> parse_decimal(std::string_view text);

/// The value as uint64 when it fits.
std::optional<std::uint64_t> to_u64(const BigCount& value);

/// n! / prod(k_i!) for the given parts.
BigCount multinomial(const std::vector<unsigned>& parts);

}  // namespace divlat
