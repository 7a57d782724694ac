// Micro-benchmarks for the hot paths of the toolkit: canonical relation
// extraction, postulate sweeps, loop detection, weak-order enumeration,
// and the full preorder-transformation pipeline.  Run the binary directly;
// it is not registered with ctest.

#include <benchmark/benchmark.h>

#include "revkit/encoding.hpp"
#include "revkit/critical_loop.hpp"
#include "revkit/gallery.hpp"
#include "revkit/op.hpp"
#include "revkit/relation.hpp"
#include "revkit/tpo.hpp"

using namespace revkit;

static void BM_CanonicalRelLEx(benchmark::State& state) {
    auto entry = load_gallery("L_Ex");
    auto base = base_from_names(entry.logic, {"psi3"});
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_rel(entry.logic, *entry.op, base));
    }
}
BENCHMARK(BM_CanonicalRelLEx);

static void BM_PostulateReportLEx(benchmark::State& state) {
    auto entry = load_gallery("L_Ex");
    for (auto _ : state) {
        benchmark::DoNotOptimize(postulate_report(entry.logic, *entry.op));
    }
}
BENCHMARK(BM_PostulateReportLEx);

static void BM_DetectLoopLEx(benchmark::State& state) {
    auto entry = load_gallery("L_Ex");
    for (auto _ : state) {
        benchmark::DoNotOptimize(detect_critical_loop(entry.logic));
    }
}
BENCHMARK(BM_DetectLoopLEx);

static void BM_WeakOrders6(benchmark::State& state) {
    for (auto _ : state) {
        std::size_t count = 0;
        for_each_weak_order(6, [&](const PreferenceRelation&) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_WeakOrders6);

static void BM_PipelineEx1012(benchmark::State& state) {
    auto entry = load_gallery("ex10_12");
    auto base = base_from_names(entry.logic, {"gamma4"});
    for (auto _ : state) {
        benchmark::DoNotOptimize(to_total_preorder(entry.logic, *entry.op, base));
    }
}
BENCHMARK(BM_PipelineEx1012);

BENCHMARK_MAIN();
