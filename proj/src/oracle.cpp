#include "divlat/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace divlat::oracle {

namespace {

struct Adjacency {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> in_degree;
};

Adjacency adjacency(const DivisorGraph& g) {
    Adjacency adj;
    adj.out.resize(g.node_count());
    adj.in_degree.assign(g.node_count(), 0);
    for (const Arc& a : g.arcs()) {
        adj.out[a.tail].push_back(a.head);
        ++adj.in_degree[a.head];
    }
    return adj;
}

// Kahn's algorithm; does not assume the node numbering is topological.
std::vector<std::uint32_t> topological_order(const Adjacency& adj) {
    auto remaining = adj.in_degree;
    std::deque<std::uint32_t> ready;
    for (std::uint32_t v = 0; v < remaining.size(); ++v) {
        if (remaining[v] == 0) ready.push_back(v);
    }
    std::vector<std::uint32_t> order;
    order.reserve(remaining.size());
    while (!ready.empty()) {
        const auto v = ready.front();
        ready.pop_front();
        order.push_back(v);
        for (auto h : adj.out[v]) {
            if (--remaining[h] == 0) ready.push_back(h);
        }
    }
    if (order.size() != remaining.size()) throw InputError("graph has a cycle");
    return order;
}

std::uint32_t unique_source(const Adjacency& adj) {
    for (std::uint32_t v = 0; v < adj.in_degree.size(); ++v) {
        if (adj.in_degree[v] == 0) return v;
    }
    throw InputError("graph has no source");
}

std::uint32_t unique_sink(const Adjacency& adj) {
    for (std::uint32_t v = 0; v < adj.out.size(); ++v) {
        if (adj.out[v].empty()) return v;
    }
    throw InputError("graph has no sink");
}

std::vector<unsigned> longest_depths(const Adjacency& adj) {
    std::vector<unsigned> depth(adj.out.size(), 0);
    for (auto v : topological_order(adj)) {
        for (auto h : adj.out[v]) depth[h] = std::max(depth[h], depth[v] + 1);
    }
    return depth;
}

unsigned coordinate_sum(Exponents v) {
    unsigned s = 0;
    for (unsigned x : v) s += x;
    return s;
}

}  // namespace

std::vector<unsigned> depths(const DivisorGraph& g) { return longest_depths(adjacency(g)); }

BigCount count_paths(const DivisorGraph& g) {
    const auto adj = adjacency(g);
    std::vector<BigCount> ways(g.node_count(), 0);
    ways[unique_source(adj)] = 1;
    for (auto v : topological_order(adj)) {
        for (auto h : adj.out[v]) ways[h] += ways[v];
    }
    return ways[unique_sink(adj)];
}

BigCount count_paths_exhaustive(const DivisorGraph& g) {
    const auto adj = adjacency(g);
    const auto sink = unique_sink(adj);
    std::uint64_t paths = 0;
    std::vector<std::uint32_t> stack{unique_source(adj)};
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        if (v == sink) {
            ++paths;
            continue;
        }
        stack.insert(stack.end(), adj.out[v].begin(), adj.out[v].end());
    }
    return paths;
}

InvariantRecord measure(const DivisorGraph& hasse, const DivisorGraph& closure) {
    if (hasse.kind() != GraphKind::Hasse || closure.kind() != GraphKind::Closure) {
        throw InputError("measure expects a Hasse graph and a closure graph");
    }
    if (hasse.signature() != closure.signature()) {
        throw InputError("measure: graphs have different signatures");
    }

    const auto adj = adjacency(hasse);
    const auto depth = longest_depths(adj);
    const unsigned height = depth[unique_sink(adj)];

    std::vector<std::uint64_t> nodes_at(height + 1, 0);
    for (auto d : depth) ++nodes_at[d];
    std::vector<std::uint64_t> arcs_at(height, 0);
    for (const Arc& a : hasse.arcs()) ++arcs_at[depth[a.tail]];

    std::uint64_t max_degree = 0;
    for (std::size_t v = 0; v < hasse.node_count(); ++v) {
        max_degree = std::max<std::uint64_t>(max_degree, adj.out[v].size() + adj.in_degree[v]);
    }

    InvariantRecord r;
    r.order = hasse.node_count();
    r.hasse_size = hasse.arcs().size();
    r.big_omega = height;
    r.small_omega = height >= 1 ? nodes_at[1] : 0;
    r.width_nodes = *std::max_element(nodes_at.begin(), nodes_at.end());
    r.width_arcs = arcs_at.empty() ? 0 : *std::max_element(arcs_at.begin(), arcs_at.end());
    r.degree = max_degree;
    r.hasse_paths = count_paths(hasse);
    for (std::size_t v = 0; v < hasse.node_count(); ++v) {
        (coordinate_sum(hasse.node(v)) % 2 == 0 ? r.v_even : r.v_odd) += 1;
    }
    for (const Arc& a : hasse.arcs()) {
        (coordinate_sum(hasse.node(a.tail)) % 2 == 0 ? r.e_even : r.e_odd) += 1;
    }
    r.closure_size = closure.arcs().size();
    r.closure_paths = count_paths(closure);
    return r;
}

InvariantRecord measure(const PrimeSignature& s, GraphBudget budget) {
    return measure(build_graph(s, GraphKind::Hasse, budget), build_graph(s, GraphKind::Closure, budget));
}

std::vector<std::string> StructureReport::failures() const {
    std::vector<std::string> out;
    if (!level_symmetry) out.emplace_back("level symmetry");
    if (!arc_level_symmetry) out.emplace_back("arc-level symmetry");
    if (!special_levels) out.emplace_back("|V_1| = |V_{Omega-1}| = omega");
    if (!degree_bounds) out.emplace_back("degree bounds");
    if (!bipartite_by_parity) out.emplace_back("bipartite by level parity");
    if (!path_lengths) out.emplace_back("shortest = longest path = Omega");
    if (!level_is_coordinate_sum) out.emplace_back("level equals coordinate sum");
    if (!single_source_sink) out.emplace_back("single source and sink");
    return out;
}

StructureReport verify_structure(const DivisorGraph& hasse) {
    if (hasse.kind() != GraphKind::Hasse) throw KindError("verify_structure needs a Hasse graph");
    const auto adj = adjacency(hasse);
    const std::size_t n = hasse.node_count();
    const std::uint64_t omega = hasse.dimension();
    StructureReport rep;

    const auto sources = std::count(adj.in_degree.begin(), adj.in_degree.end(), 0u);
    const auto sinks = std::count_if(adj.out.begin(), adj.out.end(), [](const auto& o) { return o.empty(); });
    rep.single_source_sink = sources == 1 && sinks == 1;

    const auto depth = longest_depths(adj);
    const auto source = unique_source(adj);
    const auto sink = unique_sink(adj);
    const unsigned height = depth[sink];

    // Shortest source-sink path by BFS.
    std::vector<unsigned> dist(n, std::numeric_limits<unsigned>::max());
    std::deque<std::uint32_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto h : adj.out[v]) {
            if (dist[h] == std::numeric_limits<unsigned>::max()) {
                dist[h] = dist[v] + 1;
                queue.push_back(h);
            }
        }
    }
    rep.path_lengths = dist[sink] == height && height == hasse.signature().big_omega();

    rep.level_is_coordinate_sum = true;
    for (std::size_t v = 0; v < n; ++v) {
        if (depth[v] != coordinate_sum(hasse.node(v))) rep.level_is_coordinate_sum = false;
    }

    std::vector<std::uint64_t> nodes_at(height + 1, 0);
    for (auto d : depth) ++nodes_at[d];
    std::vector<std::uint64_t> arcs_at(height, 0);
    for (const Arc& a : hasse.arcs()) ++arcs_at[depth[a.tail]];

    rep.level_symmetry = true;
    for (unsigned l = 0; l <= height; ++l) {
        if (nodes_at[l] != nodes_at[height - l]) rep.level_symmetry = false;
    }
    rep.arc_level_symmetry = true;
    for (unsigned l = 0; l < height; ++l) {
        if (arcs_at[l] != arcs_at[height - l - 1]) rep.arc_level_symmetry = false;
    }
    rep.special_levels = height == 0 || (nodes_at[1] == omega && nodes_at[height - 1] == omega);

    rep.degree_bounds = true;
    for (std::size_t v = 0; v < n; ++v) {
        const std::uint64_t in = adj.in_degree[v];
        const std::uint64_t out = adj.out[v].size();
        if (in > omega || out > omega || in + out > 2 * omega) rep.degree_bounds = false;
    }

    rep.bipartite_by_parity = true;
    for (const Arc& a : hasse.arcs()) {
        if (depth[a.tail] % 2 == depth[a.head] % 2) rep.bipartite_by_parity = false;
    }
    return rep;
}

std::uint64_t closure_size_by_divisor_sum(Exponents s) {
    // Walk every divisor v and add its number of proper divisors.
    std::vector<unsigned> v(s.size(), 0);
    std::uint64_t total = 0;
    while (true) {
        std::uint64_t divisors_of_v = 1;
        for (unsigned x : v) divisors_of_v = checked_mul(divisors_of_v, x + 1, "|V(v)|");
        total = checked_add(total, divisors_of_v - 1, "|E^T|");
        std::size_t i = 0;
        for (; i < v.size(); ++i) {
            if (++v[i] <= s[i]) break;
            v[i] = 0;
        }
        if (i == v.size()) break;
    }
    return total;
}

}  // namespace divlat::oracle
