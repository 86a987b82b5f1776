#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "divlat/big_count.hpp"
#include "divlat/divisor_graph.hpp"
#include "divlat/invariants.hpp"

namespace divlat::oracle {

/// Measures all fourteen invariants on explicit graphs. Nothing here uses the
/// closed formulas: levels come from longest-path depth, counts from the arc
/// lists, path counts from a DP over a Kahn topological order.
/// Throws InputError unless hasse is Hasse, closure is Closure and both share
/// the same signature.
InvariantRecord measure(const DivisorGraph& hasse, const DivisorGraph& closure);

/// Convenience: builds both graphs for s and measures them.
InvariantRecord measure(const PrimeSignature& s, GraphBudget budget = {});

/// Source-to-sink path count by DP over a topological order.
BigCount count_paths(const DivisorGraph& g);

/// Memo-free depth-first enumeration; exponential, for small self-checks.
BigCount count_paths_exhaustive(const DivisorGraph& g);

/// Longest-path depth of every node from the source.
std::vector<unsigned> depths(const DivisorGraph& g);

struct StructureReport {
    bool level_symmetry = false;        // |V_l| = |V_{Omega-l}|
    bool arc_level_symmetry = false;    // |E_l| = |E_{Omega-l-1}|
    bool special_levels = false;        // |V_1| = |V_{Omega-1}| = omega
    bool degree_bounds = false;         // in, out <= omega; in + out <= 2 omega
    bool bipartite_by_parity = false;   // every arc joins levels of opposite parity
    bool path_lengths = false;          // shortest = longest source-sink path = Omega
    bool level_is_coordinate_sum = false;
    bool single_source_sink = false;

    bool all() const {
        return level_symmetry && arc_level_symmetry && special_levels && degree_bounds &&
               bipartite_by_parity && path_lengths && level_is_coordinate_sum &&
               single_source_sink;
    }
    /// Names of the claims that failed.
    std::vector<std::string> failures() const;
};

/// Throws KindError for closure graphs.
StructureReport verify_structure(const DivisorGraph& hasse);

/// |E^T| as the literal sum over divisors v of (|V(v)| - 1).
std::uint64_t closure_size_by_divisor_sum(Exponents s);

}  // namespace divlat::oracle
