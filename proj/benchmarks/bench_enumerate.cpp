#include <benchmark/benchmark.h>

#include "cartcode/codes.hpp"
#include "cartcode/counting.hpp"
#include "cartcode/groups.hpp"

using namespace cartcode;

namespace {

void BM_OrbitEnumerate(benchmark::State& state) {
    FieldCtx f4(2, 2);
    NestedProduct prod(f4, {{2, 2}, {4, 1}});
    const std::int64_t u = state.range(0);
    for (auto _ : state) {
        auto mw = enumerate_min_weight(prod, u);
        benchmark::DoNotOptimize(mw.codewords.size());
    }
}
BENCHMARK(BM_OrbitEnumerate)->Arg(1)->Arg(3)->Arg(4);

void BM_OrbitEnumerateLarge(benchmark::State& state) {
    FieldCtx f9(3, 2);
    NestedProduct prod(f9, {{3, 1}, {9, 1}});
    const std::int64_t u = state.range(0);
    for (auto _ : state) {
        auto mw = enumerate_min_weight(prod, u);
        benchmark::DoNotOptimize(mw.codewords.size());
    }
}
BENCHMARK(BM_OrbitEnumerateLarge)->Arg(6)->Arg(8);

void BM_ExhaustiveScan(benchmark::State& state) {
    FieldCtx f4(2, 2);
    NestedProduct prod(f4, {{2, 2}, {4, 1}});
    const std::int64_t u = state.range(0);
    for (auto _ : state) {
        auto r = exhaustive_min_weight(prod, u, std::uint64_t{1} << 24, 1);
        benchmark::DoNotOptimize(r.min_count);
    }
}
BENCHMARK(BM_ExhaustiveScan)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CountFormula(benchmark::State& state) {
    FieldCtx f9(3, 2);
    NestedProduct prod(f9, {{3, 1}, {9, 1}});
    for (auto _ : state) {
        BigUint total(0);
        for (std::int64_t u = 1; u <= prod.max_degree(); ++u)
            total += count_minwt(prod, u).total;
        benchmark::DoNotOptimize(total.str().size());
    }
}
BENCHMARK(BM_CountFormula);

void BM_GroupEnumeration(benchmark::State& state) {
    FieldCtx f4(2, 2);
    NestedProduct prod(f4, {{2, 2}, {4, 1}});
    for (auto _ : state) {
        std::uint64_t count =
            for_each_matrix_in_G(prod, std::uint64_t{1} << 24, [](const BlockMatrix&) {});
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_GroupEnumeration);

} // namespace
