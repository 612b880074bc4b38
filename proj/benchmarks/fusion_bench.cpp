#include "fusion/characters.hpp"
#include "fusion/fusion.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace fusion;

struct Case {
    const char* type;
    int level;
};
constexpr Case kCases[] = {{"A1~1", 4}, {"A1~1", 8}, {"A2~1", 2}, {"A2~1", 4}, {"B2~1", 2}, {"G2~1", 2}, {"A3~2", 2}};

AlgebraElement random_element(const ContextPtr& ctx, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n;
    AlgebraElement f(ctx, AlgebraSide::group);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = Complex(n(rng), n(rng));
    return f;
}

void set_label(benchmark::State& state, const ContextPtr& ctx) {
    const Case& c = kCases[state.range(0)];
    state.SetLabel(std::string(c.type) + " l" + std::to_string(c.level) + " |G|=" + std::to_string(ctx->g()));
}

ContextPtr context(benchmark::State& state) {
    const Case& c = kCases[state.range(0)];
    return Context::make(c.type, c.level);
}

void BM_context(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(context(state));
    set_label(state, context(state));
}

void BM_convolve(benchmark::State& state) {
    const auto ctx = context(state);
    const auto f = random_element(ctx, 1), g = random_element(ctx, 2);
    for (auto _ : state) benchmark::DoNotOptimize(convolve(f, g));
    set_label(state, ctx);
}

void BM_fourier(benchmark::State& state) {
    const auto ctx = context(state);
    const auto f = random_element(ctx, 3);
    for (auto _ : state) benchmark::DoNotOptimize(fourier(f));
    set_label(state, ctx);
}

void BM_verlinde(benchmark::State& state) {
    const auto ctx = context(state);
    for (auto _ : state) benchmark::DoNotOptimize(verlinde_fusion(modular_matrices(ctx)));
    set_label(state, ctx);
}

void BM_ideal(benchmark::State& state) {
    const auto ctx = context(state);
    for (auto _ : state) benchmark::DoNotOptimize(ideal_fusion(ctx));
    set_label(state, ctx);
}

void BM_kac_walton(benchmark::State& state) {
    const auto ctx = context(state);
    for (auto _ : state) benchmark::DoNotOptimize(kac_walton_fusion(ctx));
    set_label(state, ctx);
}

void cases(benchmark::internal::Benchmark* b) {
    for (int i = 0; i < static_cast<int>(std::size(kCases)); ++i) b->Arg(i);
}

}  // namespace

BENCHMARK(BM_context)->Apply(cases)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_convolve)->Apply(cases)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_fourier)->Apply(cases)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_verlinde)->Apply(cases)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ideal)->Apply(cases)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kac_walton)->Apply(cases)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
