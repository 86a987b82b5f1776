#include "divlat/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace divlat {

namespace {

struct InvariantName {
    Invariant inv;
    std::string_view id;
    std::string_view symbol;
    std::string_view alias;
};

constexpr std::array<InvariantName, 15> kNames = {{
    {Invariant::Order, "V", "|V|", "order"},
    {Invariant::HasseSize, "EH", "|E^H|", "hasse_size"},
    {Invariant::BigOmega, "Omega", "Ω", "big_omega"},
    {Invariant::SmallOmega, "omega", "ω", "small_omega"},
    {Invariant::WidthNodes, "Wv", "W_v", "width_nodes"},
    {Invariant::WidthArcs, "We", "W_e", "width_arcs"},
    {Invariant::Degree, "Delta", "Δ", "degree"},
    {Invariant::HassePaths, "PH", "|P^H|", "hasse_paths"},
    {Invariant::VEven, "VE", "|V_E|", "v_even"},
    {Invariant::VOdd, "VO", "|V_O|", "v_odd"},
    {Invariant::EEven, "EE", "|E_E|", "e_even"},
    {Invariant::EOdd, "EO", "|E_O|", "e_odd"},
    {Invariant::ClosureSize, "ET", "|E^T|", "closure_size"},
    {Invariant::ClosurePaths, "PT", "|P^T|", "closure_paths"},
    {Invariant::LeastInteger, "LI", "LI(S)", "least_integer"},
}};

const InvariantName& name_of(Invariant inv) {
    return kNames[static_cast<std::size_t>(inv)];
}

void require_positive(Exponents s) {
    for (unsigned m : s) {
        if (m == 0) throw InputError("exponents must be positive");
    }
}

using Poly = std::vector<std::uint64_t>;

Poly multiply_by_run(const Poly& p, unsigned max_power) {
    // p(x) * (1 + x + ... + x^max_power); coefficients never exceed the
    // divisor count, which order() has already bounded.
    Poly out(p.size() + max_power, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (unsigned j = 0; j <= max_power; ++j) out[i + j] += p[i];
    }
    return out;
}

}  // namespace

std::string_view invariant_id(Invariant inv) { return name_of(inv).id; }
std::string_view invariant_symbol(Invariant inv) { return name_of(inv).symbol; }

std::optional<Invariant> parse_invariant(std::string_view name) {
    for (const auto& n : kNames) {
        if (name == n.id || name == n.symbol || name == n.alias) return n.inv;
    }
    return std::nullopt;
}

BigCount record_value(const InvariantRecord& r, Invariant inv) {
    switch (inv) {
        case Invariant::Order: return r.order;
        case Invariant::HasseSize: return r.hasse_size;
        case Invariant::BigOmega: return r.big_omega;
        case Invariant::SmallOmega: return r.small_omega;
        case Invariant::WidthNodes: return r.width_nodes;
        case Invariant::WidthArcs: return r.width_arcs;
        case Invariant::Degree: return r.degree;
        case Invariant::HassePaths: return r.hasse_paths;
        case Invariant::VEven: return r.v_even;
        case Invariant::VOdd: return r.v_odd;
        case Invariant::EEven: return r.e_even;
        case Invariant::EOdd: return r.e_odd;
        case Invariant::ClosureSize: return r.closure_size;
        case Invariant::ClosurePaths: return r.closure_paths;
        case Invariant::LeastInteger: break;
    }
    throw UsageError("LI is not part of an invariant record");
}

std::uint64_t order(Exponents s) {
    require_positive(s);
    std::uint64_t out = 1;
    for (unsigned m : s) out = checked_mul(out, std::uint64_t{m} + 1, "|V|");
    return out;
}

std::uint64_t hasse_size(Exponents s) {
    require_positive(s);
    if (s.empty()) return 0;
    if (s.size() == 1) return s[0];
    const unsigned peeled = s.back();
    const auto rest = s.first(s.size() - 1);
    const auto edges = checked_mul(hasse_size(rest), std::uint64_t{peeled} + 1, "|E^H|");
    return checked_add(edges, checked_mul(peeled, order(rest), "|E^H|"), "|E^H|");
}

std::uint64_t height(Exponents s) {
    require_positive(s);
    return std::accumulate(s.begin(), s.end(), std::uint64_t{0});
}

std::uint64_t small_omega(Exponents s) {
    require_positive(s);
    return s.size();
}

std::vector<std::uint64_t> level_node_counts(Exponents s) {
    order(s);  // validates and bounds every coefficient
    Poly p{1};
    for (unsigned m : s) p = multiply_by_run(p, m);
    return p;
}

std::vector<std::uint64_t> level_arc_counts(Exponents s) {
    order(s);
    const auto levels = height(s);
    std::vector<std::uint64_t> out(levels, 0);
    // Arcs raising coordinate i leave exactly the nodes with v_i < m_i.
    for (std::size_t i = 0; i < s.size(); ++i) {
        Poly p{1};
        for (std::size_t j = 0; j < s.size(); ++j) p = multiply_by_run(p, j == i ? s[j] - 1 : s[j]);
        for (std::size_t l = 0; l < p.size() && l < out.size(); ++l) out[l] += p[l];
    }
    return out;
}

std::uint64_t width_nodes(Exponents s) {
    const auto c = level_node_counts(s);
    return *std::max_element(c.begin(), c.end());
}

std::uint64_t width_arcs(Exponents s) {
    const auto c = level_arc_counts(s);
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end());
}

std::uint64_t degree(Exponents s) {
    require_positive(s);
    const auto repeated = std::count_if(s.begin(), s.end(), [](unsigned m) { return m > 1; });
    return s.size() + static_cast<std::uint64_t>(repeated);
}

BigCount hasse_paths(Exponents s) {
    require_positive(s);
    return multinomial(std::vector<unsigned>(s.begin(), s.end()));
}

namespace {

std::vector<unsigned> canonical(std::vector<unsigned> v) {
    std::erase(v, 0u);
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

using Memo = std::map<std::vector<unsigned>, BigCount>;

BigCount hasse_paths_rec(const std::vector<unsigned>& v, Memo& memo) {
    if (std::accumulate(v.begin(), v.end(), 0u) <= 1) return 1;
    if (auto it = memo.find(v); it != memo.end()) return it->second;
    // Every path crosses exactly one node one level below the sink: v with a
    // single coordinate lowered.
    BigCount total = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto lowered = v;
        --lowered[i];
        total += hasse_paths_rec(canonical(std::move(lowered)), memo);
    }
    memo.emplace(v, total);
    return total;
}

// f(v) = sum of f(u) over u < v. With g(v) = sum of f(u) over u <= v we get
// g = 2f away from the origin, and inclusion-exclusion over the coordinates
// lowered by one gives f(v) = sum over nonempty T of (-1)^{|T|+1} g(v - 1_T).
// Lowering t of the k equal coordinates of a run gives C(k, t) residuals that
// coincide after sorting, so each run contributes a binomial weight.
class ClosurePathCounter {
public:
    // v must be canonical (descending, no zeros).
    BigCount count(const std::vector<unsigned>& v) {
        if (v.empty()) return 1;
        if (auto it = memo_.find(v); it != memo_.end()) return it->second;

        std::vector<std::pair<unsigned, unsigned>> runs;  // (value, length)
        for (unsigned m : v) {
            if (!runs.empty() && runs.back().first == m) {
                ++runs.back().second;
            } else {
                runs.emplace_back(m, 1);
            }
        }
        BigCount total = 0;
        std::vector<unsigned> sub;
        sub.reserve(v.size());
        lower_runs(runs, 0, 1, 0, sub, total);
        memo_.emplace(v, total);
        return total;
    }

private:
    void lower_runs(const std::vector<std::pair<unsigned, unsigned>>& runs, std::size_t r, std::int64_t weight,
                    unsigned lowered, std::vector<unsigned>& sub, BigCount& total) {
        if (r == runs.size()) {
            if (lowered == 0) return;
            // sub is already descending; only trailing zeros need to go.
            auto u = sub;
            while (!u.empty() && u.back() == 0) u.pop_back();
            BigCount g = u.empty() ? BigCount(1) : 2 * count(u);
            g *= weight;
            if (lowered % 2 == 1) {
                total += g;
            } else {
                total -= g;
            }
            return;
        }
        const auto [value, length] = runs[r];
        std::int64_t binom = 1;  // C(length, t)
        for (unsigned t = 0; t <= length; ++t) {
            const auto mark = sub.size();
            sub.insert(sub.end(), length - t, value);
            sub.insert(sub.end(), t, value - 1);
            lower_runs(runs, r + 1, weight * binom, lowered + t, sub, total);
            sub.resize(mark);
            binom = binom * (length - t) / (t + 1);
        }
    }

    Memo memo_;
};

}  // namespace

BigCount hasse_paths_by_levels(Exponents s) {
    require_positive(s);
    Memo memo;
    return hasse_paths_rec(canonical({s.begin(), s.end()}), memo);
}

ParitySplit node_parity(Exponents s) {
    const auto v = order(s);
    return {v - v / 2, v / 2};
}

ParitySplit arc_parity(Exponents s) {
    const auto e = hasse_size(s);
    return {e - e / 2, e / 2};
}

std::uint64_t closure_size(Exponents s) {
    require_positive(s);
    std::uint64_t pairs = 1;
    for (unsigned m : s) {
        pairs = checked_mul(pairs, (std::uint64_t{m} + 1) * (std::uint64_t{m} + 2) / 2, "|E^T|");
    }
    return pairs - order(s);
}

BigCount closure_paths(Exponents s, unsigned max_big_omega) {
    const auto big_omega = height(s);
    if (big_omega > max_big_omega) {
        throw CapacityError("|P^T| needs Omega <= " + std::to_string(max_big_omega) + ", got " +
                            std::to_string(big_omega));
    }
    ClosurePathCounter counter;
    return counter.count(canonical({s.begin(), s.end()}));
}

InvariantRecord all_invariants(Exponents s, unsigned max_big_omega) {
    InvariantRecord r;
    r.order = order(s);
    r.hasse_size = hasse_size(s);
    r.big_omega = height(s);
    r.small_omega = small_omega(s);
    r.width_nodes = width_nodes(s);
    r.width_arcs = width_arcs(s);
    r.degree = degree(s);
    r.hasse_paths = hasse_paths(s);
    const auto vp = node_parity(s);
    r.v_even = vp.even;
    r.v_odd = vp.odd;
    const auto ep = arc_parity(s);
    r.e_even = ep.even;
    r.e_odd = ep.odd;
    r.closure_size = closure_size(s);
    r.closure_paths = closure_paths(s, max_big_omega);
    return r;
}

BigCount invariant_value(Invariant inv, Exponents s, unsigned max_big_omega) {
    switch (inv) {
        case Invariant::Order: return order(s);
        case Invariant::HasseSize: return hasse_size(s);
        case Invariant::BigOmega: return height(s);
        case Invariant::SmallOmega: return small_omega(s);
        case Invariant::WidthNodes: return width_nodes(s);
        case Invariant::WidthArcs: return width_arcs(s);
        case Invariant::Degree: return degree(s);
        case Invariant::HassePaths: return hasse_paths(s);
        case Invariant::VEven: return node_parity(s).even;
        case Invariant::VOdd: return node_parity(s).odd;
        case Invariant::EEven: return arc_parity(s).even;
        case Invariant::EOdd: return arc_parity(s).odd;
        case Invariant::ClosureSize: return closure_size(s);
        case Invariant::ClosurePaths: return closure_paths(s, max_big_omega);
        case Invariant::LeastInteger: return least_integer(PrimeSignature::from_exponents(s));
    }
    throw UsageError("unknown invariant");
}

}  // namespace divlat
