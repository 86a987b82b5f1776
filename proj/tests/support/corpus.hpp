#pragma once

#include <algorithm>
#include <vector>

#include "divlat/invariants.hpp"
#include "divlat/signature.hpp"

namespace divlat::testing {

namespace detail {
inline void grow(std::vector<unsigned>& parts, unsigned max_part, std::uint64_t room, unsigned omega_left,
                 std::vector<PrimeSignature>& out) {
    out.emplace_back(parts);
    for (unsigned m = 1; m <= max_part && m <= omega_left && m + 1 <= room; ++m) {
        parts.push_back(m);
        grow(parts, m, room / (m + 1), omega_left - m, out);
        parts.pop_back();
    }
}
}  // namespace detail

/// Signatures whose lattice has at most max_order nodes and whose Omega stays
/// within the path DP budget, sorted by (Omega, parts descending).
inline std::vector<PrimeSignature> signatures_up_to_order(std::uint64_t max_order,
                                                          unsigned max_big_omega = kDefaultPathDpBudget) {
    std::vector<PrimeSignature> out;
    std::vector<unsigned> parts;
    detail::grow(parts, max_big_omega, max_order, max_big_omega, out);
    std::sort(out.begin(), out.end(), [](const PrimeSignature& a, const PrimeSignature& b) {
        if (a.big_omega() != b.big_omega()) return a.big_omega() < b.big_omega();
        return b < a;
    });
    return out;
}

}  // namespace divlat::testing
