#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include <wsigclust/kmeans.hpp>
#include <wsigclust/synthdata.hpp>

#include "oracles.hpp"

using namespace wsigclust;

TEST(TwoMeans, RecoversTwoPointMasses) {
    const auto data = DataMatrix::from_rows({{0.0}, {0.0}, {0.0}, {0.0}, {0.0}, {1.0}, {1.0}, {1.0}, {1.0}, {1.0}});
    const auto res = two_means(data, 20, 300, RngStream(1));
    EXPECT_EQ(res.ci.value, 0.0);
    EXPECT_TRUE(res.partition.same_split(Partition({0, 0, 0, 0, 0, 1, 1, 1, 1, 1})));
}

TEST(TwoMeans, MatchesExhaustiveMinimumOnSmallData) {
    RngStream rng(2);
    const auto data = oracle::random_data(10, 2, rng);
    const auto res = two_means(data, 50, 300, RngStream(3));
    const auto best = oracle::exhaustive_min(oracle::rows_of(data), 0.0);
    EXPECT_NEAR(res.ci.value, best.value, 1e-12);
}

TEST(TwoMeans, BestOfRestartsMatchesExhaustiveInAlmostAllTrials) {
    RngStream rng(4);
    int matched = 0;
    constexpr int kTrials = 100;
    for (int t = 0; t < kTrials; ++t) {
        const std::size_t n = 4 + rng.uniform_index(9);
        const auto data = oracle::random_data(n, 1 + rng.uniform_index(3), rng);
        const auto res = two_means(data, 50, 300, rng.substream(1000 + t));
        const auto best = oracle::exhaustive_min(oracle::rows_of(data), 0.0);
        matched += res.ci.value <= best.value * (1.0 + 1e-10) ? 1 : 0;
    }
    EXPECT_GE(matched, 99);
}

TEST(TwoMeans, WithinSsIsMonotoneAndResultIsBestRestart) {
    RngStream rng(5);
    const auto data = oracle::random_data(80, 3, rng);
    const auto res = two_means(data, KMeansOptions{15, 300, 1}, RngStream(6));
    ASSERT_EQ(res.ss_history.size(), 15u);
    ASSERT_EQ(res.restart_ci.size(), 15u);
    for (const auto& hist : res.ss_history) {
        ASSERT_FALSE(hist.empty());
        for (std::size_t i = 1; i < hist.size(); ++i) {
            EXPECT_LE(hist[i], hist[i - 1] * (1.0 + 1e-12));
        }
    }
    for (double ci : res.restart_ci) {
        EXPECT_LE(res.ci.value, ci);
    }
    EXPECT_EQ(res.restart_ci[res.best_restart], res.ci.value);
}

TEST(TwoMeans, DeterministicAndThreadIndependent) {
    RngStream rng(7);
    const auto data = oracle::random_data(60, 4, rng);
    const auto a = two_means(data, KMeansOptions{10, 300, 1}, RngStream(8));
    const auto b = two_means(data, KMeansOptions{10, 300, 4}, RngStream(8));
    EXPECT_EQ(a.partition, b.partition);
    EXPECT_EQ(a.ci.value, b.ci.value);
    EXPECT_EQ(a.restart_ci, b.restart_ci);
}

TEST(TwoMeans, SplitsTheHotdogInsteadOfIsolatingOutliers) {
    RngStream rng(10);
    const auto ds = gen_hotdog_plus_outliers(rng);
    const auto res = two_means(ds.data, 20, 300, RngStream(11));
    EXPECT_FALSE(res.partition.same_split(ds.true_labels));
    EXPECT_LT(res.ci.value, cluster_index(ds.data, ds.true_labels).value);
    EXPECT_GT(std::min(res.partition.size1(), res.partition.size2()), 10u);
}
