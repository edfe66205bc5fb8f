#include <benchmark/benchmark.h>

#include <wsigclust/linalg.hpp>
#include <wsigclust/wci_opt.hpp>

using namespace wsigclust;

namespace {

DataMatrix gaussian(std::size_t n, std::size_t d, std::uint64_t seed) {
    RngStream rng(seed);
    Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            m(i, j) = rng.normal();
        }
    }
    return DataMatrix(std::move(m));
}

void BM_DistanceMatrix(benchmark::State& state) {
    const auto data = gaussian(static_cast<std::size_t>(state.range(0)), 50, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pairwise_sq_distances(data));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DistanceMatrix)->RangeMultiplier(2)->Range(128, 2048)->Complexity(benchmark::oNSquared);

void BM_ScanFast(benchmark::State& state) {
    const auto data = gaussian(static_cast<std::size_t>(state.range(0)), 10, 2);
    const auto dist = pairwise_sq_distances(data);
    const auto r = distances_to_mean(data);
    const auto order = pc_ordering(pca(data, 1), 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_pc_fast(dist, r, order, 0.5));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ScanFast)->RangeMultiplier(2)->Range(128, 4096)->Complexity(benchmark::oNSquared);

void BM_ScanReference(benchmark::State& state) {
    const auto data = gaussian(static_cast<std::size_t>(state.range(0)), 10, 2);
    const auto scores = pca(data, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_pc_reference(data, scores, 0, 0.5));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ScanReference)->RangeMultiplier(2)->Range(128, 1024)->Complexity(benchmark::oNSquared);

void BM_MinimizeWci(benchmark::State& state) {
    const auto data = gaussian(200, 50, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimize_wci(data, 0.5, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_MinimizeWci)->Arg(1)->Arg(3)->Arg(10);

} // namespace
