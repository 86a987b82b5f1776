// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "divlat/conjectures.hpp"
#include "divlat/oracle.hpp"
#include "divlat/sequences.hpp"
#include "fixtures/published_tables.hpp"
#include "support/corpus.hpp"

using namespace divlat;

namespace {

// Collects failure messages; a criterion passes when none were recorded.
struct Check {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

struct Criterion {
    int number;
    std::string title;
    double time_limit_seconds;  // 0 = none
    std::function<void(Check&)> body;
};

const std::vector<PrimeSignature>& corpus() {
    static const auto c = testing::signatures_up_to_order(5000, 16);
    return c;
}

void rows_match(Check& c, const std::vector<fixtures::PublishedRow>& rows, Ordering ordering,
                std::size_t min_entries) {
    for (const auto& row : rows) {
        const auto inv = parse_invariant(row.invariant);
        if (!inv) {
            c.expect(false, "unknown invariant id " + std::string(row.invariant));
            continue;
        }
        if (*inv != Invariant::ClosurePaths) {
            c.expect(row.values.size() >= min_entries,
                     std::string(row.invariant) + " has only " + std::to_string(row.values.size()) + " entries");
        }
        GenerateOptions opts;
        opts.exec = Execution::parallel();
        const auto table = generate(*inv, ordering, row.values.size(), opts);
        for (std::size_t i = 0; i < row.values.size(); ++i) {
            BigCount expected = row.values[i];
            if (ordering == Ordering::Natural && *inv == Invariant::WidthArcs && i == 0) {
                // Empty maximum: 0, although printed as kPrintedWidthArcsAtOne.
                c.expect(table.notes.size() == 1, "W_e table lacks its erratum note");
                expected = 0;
            }
            if (table.entries[i].value != expected) {
                c.expect(false, std::string(row.invariant) + " at key " + std::to_string(table.entries[i].key) +
                                    ": got " + to_decimal(table.entries[i].value) + ", printed " +
                                    to_decimal(expected));
            }
        }
    }
}

void natural_rows(Check& c) {
    c.expect(fixtures::kNaturalRows.size() == 14, "expected 14 natural-order rows");
    rows_match(c, fixtures::kNaturalRows, Ordering::Natural, 45);
}

void colex_rows(Check& c) {
    c.expect(fixtures::kColexRows.size() == 15, "expected 15 colex rows");
    rows_match(c, fixtures::kColexRows, Ordering::GradedColex, 45);
}

void canonical_rows(Check& c) {
    c.expect(fixtures::kCanonicalRows.size() == 15, "expected 15 canonical rows");
    rows_match(c, fixtures::kCanonicalRows, Ordering::Canonical, 45);
}

void listings(Check& c) {
    const auto colex = enumerate_signatures(SignatureOrder::GradedColex, 30);
    const auto canonical = enumerate_signatures(SignatureOrder::Canonical, 30);
    for (std::size_t i = 0; i < 30; ++i) {
        c.expect(colex[i].to_tuple_string() == fixtures::kColexListing[i],
                 "colex[" + std::to_string(i) + "] = " + colex[i].to_tuple_string());
        c.expect(canonical[i].to_tuple_string() == fixtures::kCanonicalListing[i],
                 "canonical[" + std::to_string(i) + "] = " + canonical[i].to_tuple_string());
    }
}

void oracle_equivalence(Check& c) {
    const auto& sigs = corpus();
    std::vector<char> equal(sigs.size(), 0);
    parallel_for(sigs.size(), Execution::parallel(),
                 [&](std::size_t i) { equal[i] = oracle::measure(sigs[i]) == all_invariants(sigs[i]); });
    for (std::size_t i = 0; i < sigs.size(); ++i) c.expect(equal[i], "oracle disagrees on " + sigs[i].to_string());
    c.expect(sigs.size() >= 300, "corpus too small");
}

void structure(Check& c) {
    for (const auto& s : corpus()) {
        const auto report = oracle::verify_structure(build_graph(s, GraphKind::Hasse));
        for (const auto& f : report.failures()) c.expect(false, s.to_string() + ": " + f);
    }
}

void cross_checks(Check& c) {
    for (unsigned k = 0; k <= 12; ++k) {
        for (const auto& s : partitions_of(k)) {
            c.expect(hasse_paths(s) == hasse_paths_by_levels(s), "path recursion differs on " + s.to_string());
        }
    }
    // Closure size over every signature with at most 5000 nodes, chains included.
    for (const auto& s : testing::signatures_up_to_order(5000, 4999)) {
        c.expect(closure_size(s) == oracle::closure_size_by_divisor_sum(s), "closure size differs on " + s.to_string());
    }
    for (const auto& s : corpus()) {
        const auto g = build_graph(s, GraphKind::Hasse);
        std::uint64_t odd_nodes = 0;
        std::uint64_t odd_arcs = 0;
        for (std::size_t v = 0; v < g.node_count(); ++v) odd_nodes += g.level(v) % 2;
        for (const Arc& a : g.arcs()) odd_arcs += g.level(a.tail) % 2;
        const auto np = node_parity(s);
        const auto ap = arc_parity(s);
        c.expect(odd_nodes == g.node_count() / 2 && np.odd == odd_nodes && np.even == g.node_count() - odd_nodes,
                 "node parity on " + s.to_string());
        c.expect(odd_arcs == g.arcs().size() / 2 && ap.odd == odd_arcs && ap.even == g.arcs().size() - odd_arcs,
                 "arc parity on " + s.to_string());
    }
}

void worked_examples(Check& c) {
    const auto f540 = factorize(540);
    const auto s540 = signature_of(540);
    const auto measured = oracle::measure(s540);
    c.expect(degree(s540) == 5 && measured.degree == 5, "degree of 540");
    c.expect(width_nodes(s540) == 6 && measured.width_nodes == 6, "node width of 540");
    c.expect(width_arcs(s540) == 12 && measured.width_arcs == 12, "arc width of 540");
    c.expect(oracle::count_paths(build_graph(factorize(20), GraphKind::Hasse)) == 3, "paths from 1 to 20");

    const auto g = build_graph(f540, GraphKind::Hasse);
    std::set<std::uint64_t> level5;
    for (std::size_t v = 0; v < g.node_count(); ++v)
        if (g.level(v) == 5) level5.insert(divisor_value(g.node(v), f540));
    c.expect(level5 == std::set<std::uint64_t>{108, 180, 270}, "level 5 of 540");
}

void conjecture_scans(Check& c) {
    ScanOptions opts;
    opts.exec = Execution::parallel();
    std::vector<ConjectureReport> reports;
    const auto small = signatures_up_to_big_omega(8);
    for (auto mode : {Disjointness::NodeDisjoint, Disjointness::ArcDisjoint}) {
        opts.mode = mode;
        reports.push_back(scan(ConjectureId::DisjointPaths, small, opts, "Omega <= 8"));
    }
    reports.push_back(scan(ConjectureId::MiddleWidth, signatures_of_range(100000), opts, "n <= 100000"));
    reports.push_back(scan(ConjectureId::ArgmaxCoincidence, enumerate_signatures(SignatureOrder::GradedColex, 200),
                           opts, "first 200 colex signatures"));
    for (const auto& r : reports) {
        const std::string tag = "conjecture " + std::to_string(static_cast<int>(r.id)) +
                                (r.mode.empty() ? "" : " (" + r.mode + ")");
        c.expect(r.checked > 0, tag + " checked nothing");
        c.expect(r.errors.empty(), tag + " had " + std::to_string(r.errors.size()) + " errors");
        for (const auto& ce : r.counterexamples)
            c.expect(false, tag + " counterexample " + ce.signature.to_string() + ": " + ce.observed + " vs " +
                                ce.expected);
    }
}

void bfile_round_trip(Check& c) {
    std::vector<SequenceTable> tables;
    for (auto ordering : {Ordering::Natural, Ordering::GradedColex, Ordering::Canonical}) {
        for (auto inv : kGraphInvariants) tables.push_back(generate(inv, ordering, 200));
        if (ordering != Ordering::Natural) tables.push_back(generate(Invariant::LeastInteger, ordering, 200));
    }
    for (const auto& t : tables) {
        const std::string name = std::string(invariant_id(t.invariant)) + "/" + std::string(to_string(t.ordering));
        const auto parsed = parse_bfile(emit(t, OutputFormat::BFile));
        bool same = parsed.size() == t.entries.size();
        for (std::size_t i = 0; same && i < parsed.size(); ++i) {
            same = parsed[i].index == static_cast<std::int64_t>(t.entries[i].key) && parsed[i].value == t.entries[i].value;
        }
        c.expect(same, "round trip changed " + name);
        c.expect(compare_bfile(t, emit(t, OutputFormat::BFile)).full_match(), "self comparison failed for " + name);

        const std::size_t bad = (t.entries.size() * 7) / 11;
        std::string corrupted;
        for (std::size_t i = 0; i < parsed.size(); ++i) {
            const BigCount v = i == bad ? parsed[i].value + 1 : parsed[i].value;
            corrupted += std::to_string(parsed[i].index) + " " + to_decimal(v) + "\n";
        }
        const auto r = compare_bfile(t, corrupted);
        c.expect(r.first_mismatch && r.first_mismatch->key == t.entries[bad].key && r.matched_prefix == bad,
                 "corruption not located for " + name);
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "natural-order rows, n = 1..50", 5, natural_rows},
        {2, "graded colex rows", 30, colex_rows},
        {3, "canonical rows", 30, canonical_rows},
        {4, "first 30 signatures in both orders", 0, listings},
        {5, "oracle equals formulas on the corpus", 120, oracle_equivalence},
        {6, "structural properties on the corpus", 0, structure},
        {7, "internal cross-checks", 0, cross_checks},
        {8, "worked examples for 20 and 540", 0, worked_examples},
        {9, "conjecture scans", 300, conjecture_scans},
        {10, "b-file round trip and corruption detection", 0, bfile_round_trip},
    };

    int failed = 0;
    for (const auto& cr : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.body(check);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (cr.time_limit_seconds > 0 && elapsed > cr.time_limit_seconds) {
            check.failures.push_back("took " + std::to_string(elapsed) + " s, limit " +
                                     std::to_string(cr.time_limit_seconds) + " s");
        }
        const bool pass = check.failures.empty();
        failed += pass ? 0 : 1;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", elapsed);
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << cr.number << ": " << cr.title << " (" << timing
                  << ")\n";
        const std::size_t shown = std::min<std::size_t>(check.failures.size(), 10);
        for (std::size_t i = 0; i < shown; ++i) std::cout << "      " << check.failures[i] << "\n";
        if (check.failures.size() > shown)
            std::cout << "      ... " << check.failures.size() - shown << " more\n";
        std::cout.flush();
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed;
}
