#include <doctest.h>

#include "divlat/oracle.hpp"
#include "support/corpus.hpp"

using namespace divlat;

namespace {

PrimeSignature sig(std::vector<unsigned> parts) { return PrimeSignature(std::move(parts)); }

}  // namespace

TEST_CASE("corpus size") {
    const auto corpus = testing::signatures_up_to_order(5000, 16);
    CHECK(corpus.size() == 846);
    std::size_t expected = 0;
    for (unsigned k = 0; k <= 16; ++k)
        for (const auto& s : partitions_of(k))
            if (order(s) <= 5000) ++expected;
    CHECK(corpus.size() == expected);
    CHECK(testing::signatures_up_to_order(5000, 12).size() == 272);
    CHECK(std::find(corpus.begin(), corpus.end(), sig({16})) != corpus.end());
    CHECK(std::find(corpus.begin(), corpus.end(), PrimeSignature()) != corpus.end());
}

TEST_CASE("measure agrees with the formulas") {
    for (const auto& s : testing::signatures_up_to_order(1200, 12)) {
        INFO("signature " << s.to_string());
        CHECK(oracle::measure(s) == all_invariants(s));
    }
}

TEST_CASE("measure small examples") {
    const auto r = oracle::measure(sig({2, 1}));
    CHECK(r.closure_size == 12);
    CHECK(r.width_arcs == 3);
    CHECK(oracle::measure(sig({1, 1})).hasse_paths == 2);
    const auto t = oracle::measure(PrimeSignature());
    CHECK(t.order == 1);
    CHECK(t.hasse_size == 0);
    CHECK(t.width_arcs == 0);
    CHECK(t.hasse_paths == 1);
    CHECK(t.closure_paths == 1);
}

TEST_CASE("measure rejects mismatched inputs") {
    const auto h = build_graph(sig({2, 1}), GraphKind::Hasse);
    const auto t = build_graph(sig({2, 1}), GraphKind::Closure);
    const auto other = build_graph(sig({1, 1}), GraphKind::Closure);
    CHECK_THROWS_AS(oracle::measure(h, other), InputError);
    CHECK_THROWS_AS(oracle::measure(t, h), InputError);
    CHECK_THROWS_AS(oracle::measure(h, h), InputError);
}

TEST_CASE("count_paths") {
    CHECK(oracle::count_paths(build_graph(factorize(20), GraphKind::Hasse)) == 3);
    CHECK(oracle::count_paths(build_graph(sig({2}), GraphKind::Closure)) == 2);
    CHECK(oracle::count_paths(build_graph(PrimeSignature(), GraphKind::Hasse)) == 1);
    for (const auto& s : testing::signatures_up_to_order(200, 12)) {
        for (auto kind : {GraphKind::Hasse, GraphKind::Closure}) {
            const auto g = build_graph(s, kind);
            if (kind == GraphKind::Closure && closure_paths(s) > 200000) continue;
            CHECK(oracle::count_paths(g) == oracle::count_paths_exhaustive(g));
        }
        CHECK(oracle::count_paths(build_graph(s, GraphKind::Closure)) == closure_paths(s));
    }
}

TEST_CASE("depths are coordinate sums") {
    const auto g = build_graph(sig({3, 2, 1}), GraphKind::Hasse);
    const auto d = oracle::depths(g);
    for (std::size_t i = 0; i < g.node_count(); ++i) CHECK(d[i] == g.level(i));
    const auto t = build_graph(sig({3, 2, 1}), GraphKind::Closure);
    CHECK(oracle::depths(t) == d);
}

TEST_CASE("verify_structure") {
    for (const auto& s : {sig({3, 2, 1}), sig({1}), sig({4, 2, 1}), PrimeSignature()}) {
        const auto report = oracle::verify_structure(build_graph(s, GraphKind::Hasse));
        INFO("signature " << s.to_string());
        CHECK(report.all());
        CHECK(report.failures().empty());
    }
    for (const auto& s : testing::signatures_up_to_order(2000, 12)) {
        CHECK(oracle::verify_structure(build_graph(s, GraphKind::Hasse)).all());
    }
    CHECK_THROWS_AS(oracle::verify_structure(build_graph(sig({2}), GraphKind::Closure)), KindError);
    oracle::StructureReport partial;
    partial.level_symmetry = true;
    CHECK_FALSE(partial.all());
    CHECK(partial.failures().size() == 7);
}

TEST_CASE("closure size by divisor sum") {
    for (const auto& s : testing::signatures_up_to_order(5000, 16)) CHECK(oracle::closure_size_by_divisor_sum(s) == closure_size(s));
}
