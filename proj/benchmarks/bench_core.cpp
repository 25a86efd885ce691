#include <benchmark/benchmark.h>

#include <vector>

#include "benfgg/analysis.hpp"
#include "benfgg/benford.hpp"
#include "benfgg/gengamma.hpp"
#include "benfgg/wrapped_pdf.hpp"

namespace {

const benfgg::GenGammaParams kParams{1.0, 0.5, 0.5, 10};

void BM_DirectPdf(benchmark::State& state) {
    double u = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(benfgg::direct_pdf(u, kParams).value);
        u += 1e-4;
        if (u >= 1.0) u = 0.0;
    }
}
BENCHMARK(BM_DirectPdf);

void BM_FourierBuild(benchmark::State& state) {
    const auto terms = std::int64_t(state.range(0));
    for (auto _ : state) {
        benfgg::FourierSeries series(kParams, terms);
        benchmark::DoNotOptimize(series.error_bound());
    }
}
BENCHMARK(BM_FourierBuild)->Arg(26)->Arg(256)->Arg(2685);

void BM_FourierEval(benchmark::State& state) {
    const benfgg::FourierSeries series(kParams, std::int64_t(state.range(0)));
    double u = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(series.eval(u));
        u += 1e-4;
        if (u >= 1.0) u = 0.0;
    }
}
BENCHMARK(BM_FourierEval)->Arg(26)->Arg(256)->Arg(2685);

void BM_SupResidual(benchmark::State& state) {
    const benfgg::FourierSeries series(kParams, 26);
    for (auto _ : state)
        benchmark::DoNotOptimize(benfgg::sup_residual(series, int(state.range(0))).sup);
}
BENCHMARK(BM_SupResidual)->Arg(1024)->Arg(8192);

void BM_Sample(benchmark::State& state) {
    const auto n = std::size_t(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(benfgg::sample(n, kParams, seed++).values.size());
    state.SetItemsProcessed(std::int64_t(state.iterations()) * std::int64_t(n));
}
BENCHMARK(BM_Sample)->Arg(1000)->Arg(100000);

void BM_KsStatistic(benchmark::State& state) {
    const auto n = std::size_t(state.range(0));
    const auto batch = benfgg::sample(n, kParams, 7);
    std::vector<double> unit(n);
    for (std::size_t i = 0; i < n; ++i)
        unit[i] = benfgg::mantissa(batch.values[i], 10);
    for (auto _ : state)
        benchmark::DoNotOptimize(benfgg::ks_statistic(unit));
    state.SetItemsProcessed(std::int64_t(state.iterations()) * std::int64_t(n));
}
BENCHMARK(BM_KsStatistic)->Arg(1000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
