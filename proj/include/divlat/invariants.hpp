#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "divlat/big_count.hpp"
#include "divlat/signature.hpp"

namespace divlat {

/// The fourteen graph invariants of one divisor lattice.
struct InvariantRecord {
    std::uint64_t order = 0;         // |V|
    std::uint64_t hasse_size = 0;    // |E^H|
    std::uint64_t big_omega = 0;     // Omega, also the height
    std::uint64_t small_omega = 0;   // omega
    std::uint64_t width_nodes = 0;   // W_v
    std::uint64_t width_arcs = 0;    // W_e
    std::uint64_t degree = 0;        // Delta
    BigCount hasse_paths;            // |P^H|
    std::uint64_t v_even = 0;        // |V_E|
    std::uint64_t v_odd = 0;         // |V_O|
    std::uint64_t e_even = 0;        // |E_E|
    std::uint64_t e_odd = 0;         // |E_O|
    std::uint64_t closure_size = 0;  // |E^T|
    BigCount closure_paths;          // |P^T|

    friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

/// Invariant identifiers, in the row order of the published tables. LI is
/// only meaningful for signature orderings.
enum class Invariant {
    Order,
    HasseSize,
    BigOmega,
    SmallOmega,
    WidthNodes,
    WidthArcs,
    Degree,
    HassePaths,
    VEven,
    VOdd,
    EEven,
    EOdd,
    ClosureSize,
    ClosurePaths,
    LeastInteger,
};

inline constexpr std::array<Invariant, 14> kGraphInvariants = {
    Invariant::Order,      Invariant::HasseSize,  Invariant::BigOmega,   Invariant::SmallOmega,
    Invariant::WidthNodes, Invariant::WidthArcs,  Invariant::Degree,     Invariant::HassePaths,
    Invariant::VEven,      Invariant::VOdd,       Invariant::EEven,      Invariant::EOdd,
    Invariant::ClosureSize, Invariant::ClosurePaths,
};

/// Short id ("V", "EH", "Omega", ...).
std::string_view invariant_id(Invariant inv);
/// Table symbol ("|V|", "|E^H|", "Ω", ...).
std::string_view invariant_symbol(Invariant inv);
/// Accepts either the short id or the table symbol (ASCII spellings too).
std::optional<Invariant> parse_invariant(std::string_view name);

/// Value of one graph invariant inside a record.
BigCount record_value(const InvariantRecord& r, Invariant inv);

// Every function below accepts exponents in any order; zero exponents are
// rejected with InputError.

std::uint64_t order(Exponents s);
/// Peels one exponent at a time: |E^H(M)| = |E^H(M-m)|(m+1) + m|V(M-m)|.
std::uint64_t hasse_size(Exponents s);
std::uint64_t height(Exponents s);
std::uint64_t small_omega(Exponents s);

/// Coefficients of prod_i (1 + x + ... + x^{m_i}).
std::vector<std::uint64_t> level_node_counts(Exponents s);
/// Arcs leaving each level l = 0..Omega-1.
std::vector<std::uint64_t> level_arc_counts(Exponents s);

std::uint64_t width_nodes(Exponents s);
/// 0 for the empty signature (maximum over no levels).
std::uint64_t width_arcs(Exponents s);

/// omega + #{m_i > 1}.
std::uint64_t degree(Exponents s);

/// Multinomial (sum m_i)! / prod m_i!.
BigCount hasse_paths(Exponents s);
/// Same count through the level recursion: sum of |P^H| over the nodes one
/// level below the sink. Kept as an independent cross-check.
BigCount hasse_paths_by_levels(Exponents s);

struct ParitySplit {
    std::uint64_t even = 0;
    std::uint64_t odd = 0;
    friend bool operator==(const ParitySplit&, const ParitySplit&) = default;
};

/// odd = floor(|V| / 2).
ParitySplit node_parity(Exponents s);
/// odd = floor(|E^H| / 2).
ParitySplit arc_parity(Exponents s);

/// prod (m_i+1)(m_i+2)/2 - prod (m_i+1).
std::uint64_t closure_size(Exponents s);

inline constexpr unsigned kDefaultPathDpBudget = 40;

/// Source-to-sink paths in G^T: f(0) = 1, f(v) = sum over proper divisors u
/// of f(u). Memoized on the sorted residual vector. Throws CapacityError when
/// Omega exceeds max_big_omega.
BigCount closure_paths(Exponents s, unsigned max_big_omega = kDefaultPathDpBudget);

InvariantRecord all_invariants(Exponents s, unsigned max_big_omega = kDefaultPathDpBudget);

/// One invariant without computing the rest (LeastInteger included).
BigCount invariant_value(Invariant inv, Exponents s, unsigned max_big_omega = kDefaultPathDpBudget);

}  // namespace divlat
