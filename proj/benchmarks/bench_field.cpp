#include <benchmark/benchmark.h>

#include <random>

#include "cartcode/codes.hpp"

using namespace cartcode;

namespace {

void BM_FieldMul(benchmark::State& state) {
    FieldCtx f(2, static_cast<int>(state.range(0)));
    std::mt19937_64 rng(1);
    std::vector<FieldElem> xs, ys;
    for (int i = 0; i < 1024; ++i) {
        xs.push_back(f.element(rng() % f.size()));
        ys.push_back(f.element(rng() % f.size()));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.mul(xs[i & 1023], ys[(i + 7) & 1023]));
        ++i;
    }
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(10)->Arg(16);

void BM_FieldAdd(benchmark::State& state) {
    FieldCtx f(3, static_cast<int>(state.range(0)));
    std::mt19937_64 rng(2);
    std::vector<FieldElem> xs, ys;
    for (int i = 0; i < 1024; ++i) {
        xs.push_back(f.element(rng() % f.size()));
        ys.push_back(f.element(rng() % f.size()));
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.add(xs[i & 1023], ys[(i + 3) & 1023]));
        ++i;
    }
}
BENCHMARK(BM_FieldAdd)->Arg(2)->Arg(6);

void BM_FieldConstruction(benchmark::State& state) {
    for (auto _ : state) {
        FieldCtx f(2, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(f.size());
    }
}
BENCHMARK(BM_FieldConstruction)->Arg(8)->Arg(12)->Arg(16);

void BM_Evaluate(benchmark::State& state) {
    FieldCtx f4(2, 2);
    NestedProduct prod(f4, {{2, 2}, {4, 1}});
    std::mt19937_64 rng(3);
    std::vector<std::pair<std::vector<std::int64_t>, FieldElem>> raw;
    for (int t = 0; t < 8; ++t) {
        std::vector<std::int64_t> e(3);
        for (auto& x : e) x = rng() % 4;
        raw.push_back({e, f4.element(rng() % 4)});
    }
    ReducedPoly p = ReducedPoly::from_terms(prod, raw);
    for (auto _ : state) benchmark::DoNotOptimize(p.evaluate().weight());
}
BENCHMARK(BM_Evaluate);

} // namespace
