#include "divlat/divisor_graph.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace divlat {

std::string_view to_string(GraphKind kind) {
    return kind == GraphKind::Hasse ? "hasse" : "closure";
}

unsigned DivisorGraph::level(std::size_t index) const {
    const auto v = node(index);
    return std::accumulate(v.begin(), v.end(), 0u);
}

std::size_t DivisorGraph::index_of(Exponents coords) const {
    if (coords.size() != dimension()) throw InputError("exponent vector has the wrong dimension");
    std::size_t index = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] > shape_[i]) throw InputError("exponent vector is not a divisor");
        index += coords[i] * strides_[i];
    }
    return index;
}

namespace {

bool dominates(Exponents hi, Exponents lo) {
    for (std::size_t i = 0; i < hi.size(); ++i) {
        if (hi[i] < lo[i]) return false;
    }
    return true;
}

std::vector<Arc> hasse_arcs(const DivisorGraph& g, const std::vector<std::size_t>& strides) {
    std::vector<Arc> arcs;
    const auto& shape = g.shape();
    for (std::size_t t = 0; t < g.node_count(); ++t) {
        const auto v = g.node(t);
        // Strides shrink with the coordinate index, so walking coordinates
        // backwards emits heads in increasing order.
        for (std::size_t i = shape.size(); i-- > 0;) {
            if (v[i] < shape[i]) {
                arcs.push_back({static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t + strides[i])});
            }
        }
    }
    return arcs;
}

std::vector<Arc> closure_arcs_parallel(const DivisorGraph& g, Execution exec) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<std::uint32_t>> heads(n);
    parallel_for(n, exec, [&](std::size_t t) {
        const auto a = g.node(t);
        for (std::size_t h = t + 1; h < n; ++h) {
            if (dominates(g.node(h), a)) heads[t].push_back(static_cast<std::uint32_t>(h));
        }
    });
    std::size_t total = 0;
    for (const auto& row : heads) total += row.size();
    std::vector<Arc> arcs;
    arcs.reserve(total);
    for (std::size_t t = 0; t < n; ++t) {
        for (auto h : heads[t]) arcs.push_back({static_cast<std::uint32_t>(t), h});
    }
    return arcs;
}

std::uint64_t closure_arc_count(Exponents shape) {
    std::uint64_t pairs = 1;
    std::uint64_t nodes = 1;
    for (unsigned m : shape) {
        pairs = checked_mul(pairs, std::uint64_t{m + 1} * (m + 2) / 2, "closure arc count");
        nodes = checked_mul(nodes, m + 1, "node count");
    }
    return pairs - nodes;
}

}  // namespace

namespace reference {

std::vector<Arc> closure_arcs(const DivisorGraph& g) {
    std::vector<Arc> arcs;
    for (std::size_t t = 0; t < g.node_count(); ++t) {
        for (std::size_t h = 0; h < g.node_count(); ++h) {
            if (h != t && dominates(g.node(h), g.node(t))) {
                arcs.push_back({static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(h)});
            }
        }
    }
    return arcs;
}

std::vector<Arc> transitive_reduction(const DivisorGraph& closure) {
    std::vector<Arc> kept;
    for (const Arc& arc : closure.arcs()) {
        const auto a = closure.node(arc.tail);
        const auto b = closure.node(arc.head);
        bool has_intermediate = false;
        for (std::size_t c = 0; c < closure.node_count() && !has_intermediate; ++c) {
            if (c == arc.tail || c == arc.head) continue;
            const auto mid = closure.node(c);
            has_intermediate = dominates(mid, a) && dominates(b, mid);
        }
        if (!has_intermediate) kept.push_back(arc);
    }
    return kept;
}

}  // namespace reference

DivisorGraph build_graph_from_shape(Exponents shape, GraphKind kind, GraphBudget budget, Execution exec) {
    DivisorGraph g;
    g.signature_ = PrimeSignature::from_exponents(shape);
    g.shape_.assign(shape.begin(), shape.end());
    g.kind_ = kind;

    std::uint64_t nodes = 1;
    for (unsigned m : shape) {
        nodes = checked_mul(nodes, m + 1, "node count");
        if (nodes > budget.max_nodes) {
            throw CapacityError("divisor graph needs more than " + std::to_string(budget.max_nodes) + " nodes");
        }
    }
    if (kind == GraphKind::Closure && closure_arc_count(shape) > budget.max_arcs) {
        throw CapacityError("closure graph needs more than " + std::to_string(budget.max_arcs) + " arcs");
    }
    g.node_count_ = static_cast<std::size_t>(nodes);

    const std::size_t dim = shape.size();
    g.strides_.assign(dim, 1);
    for (std::size_t i = dim; i-- > 1;) g.strides_[i - 1] = g.strides_[i] * (shape[i] + 1);

    g.coords_.resize(g.node_count_ * dim);
    std::vector<unsigned> v(dim, 0);
    for (std::size_t idx = 0; idx < g.node_count_; ++idx) {
        std::copy(v.begin(), v.end(), g.coords_.begin() + static_cast<std::ptrdiff_t>(idx * dim));
        for (std::size_t i = dim; i-- > 0;) {
            if (++v[i] <= shape[i]) break;
            v[i] = 0;
        }
    }

    g.arcs_ = kind == GraphKind::Hasse ? hasse_arcs(g, g.strides_) : closure_arcs_parallel(g, exec);
    return g;
}

LevelProfile level_profile(const DivisorGraph& g) {
    if (g.kind() != GraphKind::Hasse) throw KindError("level_profile needs a Hasse graph");
    const unsigned height = g.signature().big_omega();
    LevelProfile p;
    p.node_counts.assign(height + 1, 0);
    p.arc_counts.assign(height, 0);
    for (std::size_t i = 0; i < g.node_count(); ++i) ++p.node_counts[g.level(i)];
    for (const Arc& a : g.arcs()) ++p.arc_counts[g.level(a.tail)];
    return p;
}

std::uint64_t divisor_value(Exponents v, const Factorization& f, std::uint64_t bound) {
    if (v.size() != f.factors.size()) {
        throw InputError("exponent vector dimension does not match the factorization");
    }
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > f.factors[i].exponent) throw InputError("exponent vector is not a divisor");
        for (unsigned e = 0; e < v[i]; ++e) out = checked_mul(out, f.factors[i].prime, "divisor value", bound);
    }
    return out;
}

namespace {

std::string node_label(Exponents v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

std::string to_dot(const DivisorGraph& g) {
    std::string out = "digraph divisors {\n";
    out += "  // signature " + g.signature().to_string() + ", " + std::string(to_string(g.kind())) + "\n";
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        out += "  n" + std::to_string(i) + " [label=\"" + node_label(g.node(i)) + "\"];\n";
    }
    for (const Arc& a : g.arcs()) {
        out += "  n" + std::to_string(a.tail) + " -> n" + std::to_string(a.head) + ";\n";
    }
    out += "}\n";
    return out;
}

std::string to_json(const DivisorGraph& g) {
    nlohmann::ordered_json j;
    j["signature"] = g.signature().to_string();
    j["kind"] = to_string(g.kind());
    j["shape"] = g.shape();
    auto nodes = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        const auto v = g.node(i);
        nodes.push_back(std::vector<unsigned>(v.begin(), v.end()));
    }
    j["nodes"] = std::move(nodes);
    auto arcs = nlohmann::ordered_json::array();
    for (const Arc& a : g.arcs()) arcs.push_back({a.tail, a.head});
    j["arcs"] = std::move(arcs);
    return j.dump() + "\n";
}

}  // namespace divlat
