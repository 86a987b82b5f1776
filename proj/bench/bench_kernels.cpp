// Serial reference paths against their OpenMP counterparts. The first range
// argument is the thread count: 1 selects the serial path, 0 lets OpenMP pick.

#include <benchmark/benchmark.h>

#include "divlat/conjectures.hpp"
#include "divlat/divisor_graph.hpp"
#include "divlat/oracle.hpp"
#include "divlat/sequences.hpp"

using namespace divlat;

namespace {

Execution exec_from(const benchmark::State& state) { return Execution{static_cast<int>(state.range(0))}; }

void BM_ClosureBuild(benchmark::State& state) {
    const PrimeSignature s({4, 3, 2, 1});  // 120 nodes
    const PrimeSignature big({6, 5, 4, 3});  // 840 nodes
    const auto& sig = state.range(1) == 0 ? s : big;
    for (auto _ : state) {
        auto g = build_graph(sig, GraphKind::Closure, {}, exec_from(state));
        benchmark::DoNotOptimize(g.arcs().data());
    }
    state.counters["arcs"] = static_cast<double>(closure_size(sig));
}
BENCHMARK(BM_ClosureBuild)->ArgsProduct({{1, 0}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_ClosureReferenceAllPairs(benchmark::State& state) {
    const auto g = build_graph(PrimeSignature({6, 5, 4, 3}), GraphKind::Hasse);
    for (auto _ : state) {
        auto arcs = reference::closure_arcs(g);
        benchmark::DoNotOptimize(arcs.data());
    }
}
BENCHMARK(BM_ClosureReferenceAllPairs)->Unit(benchmark::kMillisecond);

void BM_GenerateNatural(benchmark::State& state) {
    GenerateOptions opts;
    opts.exec = exec_from(state);
    for (auto _ : state) {
        auto t = generate(Invariant::ClosurePaths, Ordering::Natural, 20000, opts);
        benchmark::DoNotOptimize(t.entries.data());
    }
}
BENCHMARK(BM_GenerateNatural)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_GenerateCanonical(benchmark::State& state) {
    GenerateOptions opts;
    opts.exec = exec_from(state);
    for (auto _ : state) {
        auto t = generate(Invariant::ClosurePaths, Ordering::Canonical, 2000, opts);
        benchmark::DoNotOptimize(t.entries.data());
    }
}
BENCHMARK(BM_GenerateCanonical)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_ScanDisjointPaths(benchmark::State& state) {
    const auto sigs = signatures_up_to_big_omega(8);
    ScanOptions opts;
    opts.exec = exec_from(state);
    for (auto _ : state) {
        auto r = scan(ConjectureId::DisjointPaths, sigs, opts);
        benchmark::DoNotOptimize(r.checked);
    }
}
BENCHMARK(BM_ScanDisjointPaths)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

// Memoized DP on the signature against the oracle's DP over explicit arcs.
void BM_ClosurePathsFormula(benchmark::State& state) {
    const PrimeSignature s({5, 4, 3, 2});
    for (auto _ : state) benchmark::DoNotOptimize(closure_paths(s));
}
BENCHMARK(BM_ClosurePathsFormula)->Unit(benchmark::kMicrosecond);

void BM_ClosurePathsOracle(benchmark::State& state) {
    const auto g = build_graph(PrimeSignature({5, 4, 3, 2}), GraphKind::Closure);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::count_paths(g));
}
BENCHMARK(BM_ClosurePathsOracle)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
