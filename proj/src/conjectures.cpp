#include "divlat/conjectures.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <limits>
#include <optional>
#include <set>

#include <json.hpp>

#include "divlat/invariants.hpp"

namespace divlat {

std::string_view to_string(Disjointness mode) {
    return mode == Disjointness::NodeDisjoint ? "node" : "arc";
}

namespace {

// Residual network for unit-capacity max flow (Edmonds-Karp).
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t n) : adj_(n) {}

    void add_edge(std::size_t from, std::size_t to, std::uint32_t cap) {
        adj_[from].push_back({to, adj_[to].size(), cap});
        adj_[to].push_back({from, adj_[from].size() - 1, 0});
    }

    std::uint64_t max_flow(std::size_t source, std::size_t sink) {
        std::uint64_t flow = 0;
        while (augment(source, sink)) ++flow;
        return flow;
    }

private:
    struct Edge {
        std::size_t to;
        std::size_t rev;
        std::uint32_t cap;
    };

    // One shortest augmenting path; every path carries one unit because all
    // capacities on it are >= 1 and the bottleneck is a unit edge.
    bool augment(std::size_t source, std::size_t sink) {
        constexpr auto none = std::numeric_limits<std::size_t>::max();
        std::vector<std::pair<std::size_t, std::size_t>> parent(adj_.size(), {none, none});
        parent[source] = {source, none};
        std::deque<std::size_t> queue{source};
        while (!queue.empty() && parent[sink].first == none) {
            const auto v = queue.front();
            queue.pop_front();
            for (std::size_t e = 0; e < adj_[v].size(); ++e) {
                const auto& edge = adj_[v][e];
                if (edge.cap > 0 && parent[edge.to].first == none) {
                    parent[edge.to] = {v, e};
                    queue.push_back(edge.to);
                }
            }
        }
        if (parent[sink].first == none) return false;
        for (auto v = sink; v != source;) {
            const auto [u, e] = parent[v];
            auto& edge = adj_[u][e];
            --edge.cap;
            ++adj_[v][edge.rev].cap;
            v = u;
        }
        return true;
    }

    std::vector<std::vector<Edge>> adj_;
};

std::string level_set(const std::vector<unsigned>& levels) {
    std::string out = "{";
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(levels[i]);
    }
    return out + "}";
}

std::vector<unsigned> argmax_levels(const std::vector<std::uint64_t>& counts, std::size_t limit) {
    std::vector<unsigned> out;
    const auto end = counts.begin() + static_cast<std::ptrdiff_t>(std::min(limit, counts.size()));
    if (counts.begin() == end) return out;
    const auto best = *std::max_element(counts.begin(), end);
    for (auto it = counts.begin(); it != end; ++it) {
        if (*it == best) out.push_back(static_cast<unsigned>(it - counts.begin()));
    }
    return out;
}

}  // namespace

std::uint64_t max_disjoint_paths(const DivisorGraph& hasse, Disjointness mode) {
    if (hasse.kind() != GraphKind::Hasse) throw KindError("max_disjoint_paths needs a Hasse graph");
    if (hasse.node_count() < 2) throw InputError("max_disjoint_paths needs Omega >= 1");
    const std::size_t n = hasse.node_count();
    const std::uint32_t unbounded = static_cast<std::uint32_t>(n);

    if (mode == Disjointness::ArcDisjoint) {
        FlowNetwork net(n);
        for (const Arc& a : hasse.arcs()) net.add_edge(a.tail, a.head, 1);
        return net.max_flow(hasse.source(), hasse.sink());
    }
    // Node v becomes in = 2v -> out = 2v + 1; only inner nodes are capped.
    FlowNetwork net(2 * n);
    for (std::size_t v = 0; v < n; ++v) {
        const bool terminal = v == hasse.source() || v == hasse.sink();
        net.add_edge(2 * v, 2 * v + 1, terminal ? unbounded : 1);
    }
    for (const Arc& a : hasse.arcs()) net.add_edge(2 * std::size_t{a.tail} + 1, 2 * std::size_t{a.head}, 1);
    return net.max_flow(2 * hasse.source() + 1, 2 * hasse.sink());
}

bool check_middle_width(Exponents s) {
    const auto counts = level_node_counts(s);
    const auto middle = counts.size() / 2;  // ceil(Omega / 2), since size = Omega + 1
    return *std::max_element(counts.begin(), counts.end()) == counts[middle];
}

std::vector<unsigned> node_argmax_levels(Exponents s) {
    const auto counts = level_node_counts(s);
    return argmax_levels(counts, counts.size() - 1);
}

std::vector<unsigned> arc_argmax_levels(Exponents s) {
    const auto counts = level_arc_counts(s);
    return argmax_levels(counts, counts.size());
}

bool check_argmax_coincidence(Exponents s) {
    if (height(s) == 0) throw InputError("argmax coincidence needs Omega >= 1");
    const auto nodes = node_argmax_levels(s);
    const auto arcs = arc_argmax_levels(s);
    return std::find_first_of(nodes.begin(), nodes.end(), arcs.begin(), arcs.end()) != nodes.end();
}

namespace {

struct Outcome {
    enum Kind { Held, Counterexample, Skipped, Failed } kind = Held;
    std::string observed;
    std::string expected;
    std::string reason;
};

Outcome check_one(ConjectureId id, const PrimeSignature& s, const ScanOptions& options) {
    Outcome out;
    try {
        switch (id) {
            case ConjectureId::DisjointPaths: {
                if (s.empty()) return {Outcome::Skipped, {}, {}, "Omega = 0"};
                const auto g = build_graph(s, GraphKind::Hasse, options.budget);
                const auto flow = max_disjoint_paths(g, options.mode);
                out.observed = std::to_string(flow);
                out.expected = std::to_string(s.small_omega());
                out.kind = flow == s.small_omega() ? Outcome::Held : Outcome::Counterexample;
                break;
            }
            case ConjectureId::MiddleWidth: {
                const auto counts = level_node_counts(s);
                out.observed = std::to_string(width_nodes(s));
                out.expected = std::to_string(counts[(s.big_omega() + 1) / 2]);
                out.kind = check_middle_width(s) ? Outcome::Held : Outcome::Counterexample;
                break;
            }
            case ConjectureId::ArgmaxCoincidence: {
                if (s.empty()) return {Outcome::Skipped, {}, {}, "Omega = 0"};
                out.observed = level_set(node_argmax_levels(s));
                out.expected = level_set(arc_argmax_levels(s));
                out.kind = check_argmax_coincidence(s) ? Outcome::Held : Outcome::Counterexample;
                break;
            }
        }
    } catch (const Error& e) {
        return {Outcome::Failed, {}, {}, e.what()};
    }
    return out;
}

}  // namespace

ConjectureReport scan(ConjectureId id, const std::vector<PrimeSignature>& signatures,
                      const ScanOptions& options, std::string scope) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Outcome> outcomes(signatures.size());
    parallel_for(signatures.size(), options.exec,
                 [&](std::size_t i) { outcomes[i] = check_one(id, signatures[i], options); });

    ConjectureReport report;
    report.id = id;
    if (id == ConjectureId::DisjointPaths) report.mode = std::string(to_string(options.mode));
    report.scope = std::move(scope);
    for (std::size_t i = 0; i < signatures.size(); ++i) {
        auto& o = outcomes[i];
        switch (o.kind) {
            case Outcome::Held: ++report.checked; break;
            case Outcome::Counterexample:
                ++report.checked;
                report.counterexamples.push_back({signatures[i], std::move(o.observed), std::move(o.expected)});
                break;
            case Outcome::Skipped: report.skipped.push_back({signatures[i], std::move(o.reason)}); break;
            case Outcome::Failed: report.errors.push_back({signatures[i], std::move(o.reason)}); break;
        }
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<PrimeSignature> signatures_of_range(std::uint64_t max_n) {
    std::vector<PrimeSignature> out;
    std::set<PrimeSignature> seen;
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        auto s = signature_of(n);
        if (seen.insert(s).second) out.push_back(std::move(s));
    }
    return out;
}

std::string to_json(const ConjectureReport& report, bool include_timing) {
    auto issues = [](const std::vector<ScanIssue>& list) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& i : list) arr.push_back({{"signature", i.signature.to_string()}, {"reason", i.reason}});
        return arr;
    };
    nlohmann::ordered_json j;
    j["conjecture"] = static_cast<int>(report.id);
    if (!report.mode.empty()) j["mode"] = report.mode;
    j["scope"] = report.scope;
    j["checked"] = report.checked;
    j["held"] = report.held();
    auto counter = nlohmann::ordered_json::array();
    for (const auto& c : report.counterexamples) {
        counter.push_back({{"signature", c.signature.to_string()}, {"observed", c.observed}, {"expected", c.expected}});
    }
    j["counterexamples"] = std::move(counter);
    j["skipped"] = issues(report.skipped);
    j["errors"] = issues(report.errors);
    if (include_timing) j["elapsed_seconds"] = report.elapsed_seconds;
    return j.dump(2) + "\n";
}

}  // namespace divlat
