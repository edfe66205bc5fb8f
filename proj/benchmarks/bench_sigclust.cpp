#include <benchmark/benchmark.h>

#include <wsigclust/kmeans.hpp>
#include <wsigclust/sigclust.hpp>
#include <wsigclust/synthdata.hpp>

using namespace wsigclust;

namespace {

void BM_SimulateNull(benchmark::State& state) {
    RngStream rng(4);
    const auto ds = gen_gaussian(200, std::vector<double>(50, 1.0), rng);
    const auto lambdas = estimate_null_eigenvalues(ds.data, EigenMethod::kSample);
    SigClustConfig cfg;
    cfg.n_sims = 100;
    cfg.threads = static_cast<unsigned>(state.range(1));
    const double g = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_null(200, lambdas, g, cfg, RngStream(5)));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.n_sims));
}
BENCHMARK(BM_SimulateNull)->Args({0, 1})->Args({50, 1})->Args({50, 0})->Unit(benchmark::kMillisecond);

void BM_TwoMeans(benchmark::State& state) {
    RngStream rng(6);
    const auto ds = gen_hotdog_plus_outliers(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(two_means(ds.data, static_cast<std::size_t>(state.range(0)), 300, RngStream(7)));
    }
}
BENCHMARK(BM_TwoMeans)->Arg(1)->Arg(20);

} // namespace

BENCHMARK_MAIN();
