#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "divlat/parallel.hpp"
#include "divlat/signature.hpp"

namespace divlat {

enum class GraphKind { Hasse, Closure };

std::string_view to_string(GraphKind kind);

/// Owned exponent vector, used for lookups and as builder input.
using ExponentVector = std::vector<unsigned>;

struct Arc {
    std::uint32_t tail = 0;
    std::uint32_t head = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct GraphBudget {
    std::size_t max_nodes = 1'000'000;
    std::uint64_t max_arcs = 50'000'000;
};

/// Divisor lattice of one exponent shape, nodes stored as exponent vectors.
///
/// Node order is lexicographic on coordinates (last coordinate fastest), which
/// is also a topological order: every arc goes from a lower to a higher index.
/// Arcs are sorted by (tail, head).
class DivisorGraph {
public:
    const PrimeSignature& signature() const noexcept { return signature_; }
    /// Exponent bounds in coordinate order (prime order when built from a
    /// factorization, descending when built from a signature).
    const std::vector<unsigned>& shape() const noexcept { return shape_; }
    GraphKind kind() const noexcept { return kind_; }

    std::size_t node_count() const noexcept { return node_count_; }
    std::size_t dimension() const noexcept { return shape_.size(); }
    Exponents node(std::size_t index) const {
        return Exponents(coords_).subspan(index * dimension(), dimension());
    }
    /// Coordinate sum of a node.
    unsigned level(std::size_t index) const;
    std::size_t index_of(Exponents coords) const;

    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    std::size_t source() const noexcept { return 0; }
    std::size_t sink() const noexcept { return node_count_ - 1; }

private:
    friend DivisorGraph build_graph_from_shape(Exponents, GraphKind, GraphBudget, Execution);

    PrimeSignature signature_;
    std::vector<unsigned> shape_;
    std::vector<std::size_t> strides_;
    GraphKind kind_ = GraphKind::Hasse;
    std::size_t node_count_ = 1;
    std::vector<unsigned> coords_;
    std::vector<Arc> arcs_;
};

/// Builds G^H or G^T over the given exponent bounds (zeros not allowed).
/// Throws CapacityError when the node or arc budget would be exceeded.
DivisorGraph build_graph_from_shape(Exponents shape, GraphKind kind, GraphBudget budget = {},
                                    Execution exec = Execution::serial());

inline DivisorGraph build_graph(const PrimeSignature& s, GraphKind kind, GraphBudget budget = {},
                                Execution exec = Execution::serial()) {
    return build_graph_from_shape(s, kind, budget, exec);
}

/// Coordinates follow the factorization's prime order.
inline DivisorGraph build_graph(const Factorization& f, GraphKind kind, GraphBudget budget = {},
                                Execution exec = Execution::serial()) {
    const auto exps = f.exponents();
    return build_graph_from_shape(exps, kind, budget, exec);
}

namespace reference {
/// Closure arcs by the all-pairs dominance test, single-threaded.
std::vector<Arc> closure_arcs(const DivisorGraph& g);
/// Transitive reduction done the slow way: drop every closure arc (a, b) that has an
/// intermediate c with a < c < b.
std::vector<Arc> transitive_reduction(const DivisorGraph& closure);
}  // namespace reference

struct LevelProfile {
    std::vector<std::uint64_t> node_counts;  // l = 0..Omega
    std::vector<std::uint64_t> arc_counts;   // l = 0..Omega-1, by tail level
};

/// Throws KindError for closure graphs.
LevelProfile level_profile(const DivisorGraph& g);

/// prod p_i^{v_i}; throws InputError on dimension mismatch, RangeError on
/// overflow.
std::uint64_t divisor_value(Exponents v, const Factorization& f,
                            std::uint64_t bound = kDefaultIntegerBound);

/// DOT with node labels "v1 v2 ... vk".
std::string to_dot(const DivisorGraph& g);
/// {"signature", "shape", "kind", "nodes", "arcs"}.
std::string to_json(const DivisorGraph& g);

}  // namespace divlat
