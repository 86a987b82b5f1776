#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "divlat/divisor_graph.hpp"
#include "divlat/parallel.hpp"
#include "divlat/signature.hpp"

namespace divlat {

enum class Disjointness { NodeDisjoint, ArcDisjoint };

std::string_view to_string(Disjointness mode);

/// Maximum number of pairwise internally disjoint source-to-sink paths in a
/// Hasse graph, by unit-capacity max flow (node splitting for NodeDisjoint).
/// Throws InputError for the one-node graph, KindError for closure graphs.
std::uint64_t max_disjoint_paths(const DivisorGraph& hasse, Disjointness mode);

/// W_v equals the node count of level ceil(Omega / 2).
bool check_middle_width(Exponents s);

/// Levels in 0..Omega-1 attaining the max node count (resp. arc count).
std::vector<unsigned> node_argmax_levels(Exponents s);
std::vector<unsigned> arc_argmax_levels(Exponents s);

/// The two argmax sets above intersect. Throws InputError when Omega = 0.
bool check_argmax_coincidence(Exponents s);

enum class ConjectureId { DisjointPaths = 1, MiddleWidth = 2, ArgmaxCoincidence = 3 };

struct Counterexample {
    PrimeSignature signature;
    std::string observed;
    std::string expected;
};

struct ScanIssue {
    PrimeSignature signature;
    std::string reason;
};

struct ConjectureReport {
    ConjectureId id = ConjectureId::DisjointPaths;
    std::string mode;   // "node" / "arc" for conjecture 1, empty otherwise
    std::string scope;  // human-readable description of the scanned range
    std::size_t checked = 0;
    std::vector<ScanIssue> skipped;  // precondition not met
    std::vector<ScanIssue> errors;   // budget violations and other failures
    std::vector<Counterexample> counterexamples;
    double elapsed_seconds = 0.0;

    bool held() const noexcept { return counterexamples.empty(); }
};

struct ScanOptions {
    Disjointness mode = Disjointness::NodeDisjoint;
    GraphBudget budget{};
    Execution exec = Execution::serial();
};

/// Checks one conjecture on every signature. Results are reported in input
/// order regardless of execution policy.
ConjectureReport scan(ConjectureId id, const std::vector<PrimeSignature>& signatures,
                      const ScanOptions& options = {}, std::string scope = {});

/// Distinct signatures of 1..max_n, in order of first appearance.
std::vector<PrimeSignature> signatures_of_range(std::uint64_t max_n);

/// JSON form of a report; elapsed time only when include_timing is set.
std::string to_json(const ConjectureReport& report, bool include_timing = false);

}  // namespace divlat
