#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include <wsigclust/sigclust.hpp>
#include <wsigclust/synthdata.hpp>
#include <wsigclust/wci_opt.hpp>

#include "oracles.hpp"

using namespace wsigclust;

namespace {

const std::vector<double> kNull{0.30, 0.32, 0.35, 0.36, 0.40, 0.41, 0.45, 0.47, 0.50, 0.54};

SigClustConfig quick(std::size_t sims, std::uint64_t seed = 0) {
    SigClustConfig c;
    c.n_sims = sims;
    c.seed = seed;
    c.threads = 1;
    return c;
}

DataMatrix point_masses() {
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 6; ++i) {
        rows.push_back({0.0, 0.0});
        rows.push_back({10.0, 5.0});
    }
    return DataMatrix::from_rows(rows);
}

} // namespace

TEST(TestArithmetic, EmpiricalPValueOnFixedNull) {
    EXPECT_DOUBLE_EQ(empirical_p_value(0.37, kNull), 5.0 / 11.0);
    EXPECT_DOUBLE_EQ(empirical_p_value(0.10, kNull), 1.0 / 11.0);
    EXPECT_DOUBLE_EQ(empirical_p_value(0.36, kNull), 5.0 / 11.0);
    EXPECT_DOUBLE_EQ(empirical_p_value(0.99, kNull), 1.0);
}

TEST(TestArithmetic, ZScoreOnFixedNull) {
    // Mean 0.41; squared deviations sum to 0.0566; divisor N - 1 = 9.
    const double sd = std::sqrt(0.0566 / 9.0);
    const ZScore z = z_score(0.37, kNull);
    EXPECT_FALSE(z.degenerate);
    EXPECT_NEAR(z.value, (0.37 - 0.41) / sd, 1e-12);
    EXPECT_NEAR(z.value, -0.504398, 1e-6);
}

TEST(TestArithmetic, DegenerateNullGivesSignedInfinity) {
    const std::vector<double> flat(5, 0.4);
    const ZScore below = z_score(0.3, flat);
    EXPECT_TRUE(below.degenerate);
    EXPECT_EQ(below.value, -std::numeric_limits<double>::infinity());
    EXPECT_EQ(z_score(0.5, flat).value, std::numeric_limits<double>::infinity());
    EXPECT_EQ(z_score(0.4, flat).value, 0.0);
}

TEST(SigClust, MinimumPValueIsOneOverNPlusOne) {
    const auto res = test_exploratory(point_masses(), 0.5, quick(100));
    EXPECT_EQ(res.statistic.value, 0.0);
    EXPECT_EQ(res.p_empirical, 1.0 / 101.0);
    EXPECT_LT(res.z_score, -3.0);
    EXPECT_EQ(res.mode, TestMode::kExploratory);
}

TEST(SigClust, RightTailStatisticNeverRejects) {
    RngStream rng(1);
    const auto data = oracle::random_data(40, 2, rng);
    // Labels that interleave along PC1 have a CI near 1.
    const auto scores = pca(data, 1);
    const auto order = pc_ordering(scores, 0);
    std::vector<std::uint8_t> labels(40, 0);
    for (std::size_t i = 0; i < 40; i += 2) {
        labels[order[i]] = 1;
    }
    const auto res = test_confirmatory(data, Partition(labels), 0.0, quick(100));
    ASSERT_GT(res.statistic.value, *std::max_element(res.null->values.begin(), res.null->values.end()));
    EXPECT_EQ(res.p_empirical, 1.0);
    EXPECT_FALSE(res.rejects(0.05));
}

TEST(SigClust, NullIsDeterministicAndThreadIndependent) {
    RngStream rng(2);
    const auto data = oracle::random_data(30, 3, rng);
    auto one = quick(60, 9);
    auto four = one;
    four.threads = 4;
    for (double g : {0.0, 0.5}) {
        const auto a = test_exploratory(data, g, one);
        const auto b = test_exploratory(data, g, one);
        const auto c = test_exploratory(data, g, four);
        EXPECT_EQ(a.null->values, b.null->values);
        EXPECT_EQ(a.null->values, c.null->values);
        EXPECT_EQ(a.null->cluster_sizes, c.null->cluster_sizes);
        EXPECT_EQ(a.statistic.value, c.statistic.value);
    }
}

TEST(SigClust, NullInvariantToRotationAndTranslation) {
    RngStream rng(3);
    const auto data = oracle::random_data(30, 3, rng);
    const double t = 0.7;
    Eigen::Matrix3d rot;
    rot << std::cos(t), -std::sin(t), 0.0, std::sin(t), std::cos(t), 0.0, 0.0, 0.0, 1.0;
    Eigen::MatrixXd moved = data.values() * rot.transpose();
    moved.rowwise() += Eigen::RowVector3d(5.0, -2.0, 1.0);
    const auto a = test_exploratory(data, 0.5, quick(50, 4));
    const auto b = test_exploratory(DataMatrix(moved), 0.5, quick(50, 4));
    for (Eigen::Index k = 0; k < 3; ++k) {
        EXPECT_NEAR(a.null->eigenvalues(k), b.null->eigenvalues(k), 1e-8 * a.null->eigenvalues(0));
    }
    for (std::size_t i = 0; i < a.null->values.size(); ++i) {
        EXPECT_NEAR(a.null->values[i], b.null->values[i], 1e-6);
    }
    EXPECT_NEAR(a.statistic.value, b.statistic.value, 1e-10);
}

TEST(SigClust, ExploratoryNeverAboveConfirmatoryForScannedSplit) {
    RngStream rng(5);
    const auto data = oracle::random_data(50, 4, rng);
    const auto scores = pca(data, 3);
    for (std::size_t p = 0; p < 3; ++p) {
        const auto order = pc_ordering(scores, p);
        for (std::size_t k : {1u, 7u, 25u, 49u}) {
            const Partition candidate = Partition::from_split(order, k);
            const auto conf = test_confirmatory(data, candidate, 0.5, quick(10));
            const auto expl = test_exploratory(data, 0.5, quick(10));
            EXPECT_LE(expl.statistic.value, conf.statistic.value + 1e-15);
        }
    }
}

TEST(SigClust, NullCountsAndSizesAreConsistent) {
    RngStream rng(6);
    const auto data = oracle::random_data(25, 2, rng);
    const auto res = test_exploratory(data, 1.0, quick(40));
    ASSERT_EQ(res.null->values.size(), 40u);
    ASSERT_EQ(res.null->cluster_sizes.size(), 40u);
    for (auto s : res.null->cluster_sizes) {
        EXPECT_GE(s, 1u);
        EXPECT_LE(s, 24u);
    }
    EXPECT_DOUBLE_EQ(res.p_empirical, empirical_p_value(res.statistic.value, res.null->values));
    EXPECT_DOUBLE_EQ(res.z_score, z_score(res.statistic.value, res.null->values).value);
}

TEST(SigClust, RoundClustersSignificantForBothCriteria) {
    RngStream rng(7);
    const auto ds = gen_round_clusters(rng);
    for (double g : {0.0, 0.5}) {
        const auto res = test_confirmatory(ds.data, ds.true_labels, g, quick(100));
        EXPECT_LT(res.z_score, -3.0) << "g=" << g;
        EXPECT_LT(res.statistic.value, *std::min_element(res.null->values.begin(), res.null->values.end()));
    }
}

TEST(SigClust, HotdogNeedsWeighting) {
    RngStream rng(8);
    const auto ds = gen_hotdog_plus_outliers(rng);
    const auto conventional = test_confirmatory(ds.data, ds.true_labels, 0.0, quick(200, 1));
    const auto weighted = test_confirmatory(ds.data, ds.true_labels, 0.5, quick(200, 1));
    EXPECT_EQ(conventional.optimizer, Optimizer::kTwoMeans);
    EXPECT_EQ(weighted.optimizer, Optimizer::kHyperplaneScan);
    EXPECT_GT(conventional.z_score, -2.0);
    EXPECT_LT(weighted.z_score, -3.0);
    EXPECT_EQ(conventional.mode, TestMode::kConfirmatory);
    EXPECT_EQ(conventional.label_source, "user-supplied labels");
}

TEST(RecommendG, FlagsWeightedValueOnHotdog) {
    RngStream rng(8);
    const auto ds = gen_hotdog_plus_outliers(rng);
    const auto rec = recommend_g(ds.data, ds.true_labels, quick(200, 1));
    ASSERT_EQ(rec.results.size(), 3u);
    const double best_g = rec.results[rec.best].statistic.g;
    EXPECT_TRUE(best_g == 0.25 || best_g == 0.5);
}

TEST(RecommendG, PointMassesGiveZeroAtEveryG) {
    const auto rec = recommend_g(point_masses(), std::nullopt, quick(30));
    for (const auto& r : rec.results) {
        EXPECT_EQ(r.statistic.value, 0.0);
    }
}

TEST(SigClust, OptimizerNamesAndResolution) {
    EXPECT_EQ(parse_optimizer("auto"), Optimizer::kAuto);
    EXPECT_EQ(parse_optimizer("two-means"), Optimizer::kTwoMeans);
    EXPECT_EQ(parse_optimizer("hyperplane-scan"), Optimizer::kHyperplaneScan);
    EXPECT_THROW(parse_optimizer("spectral"), std::invalid_argument);
    EXPECT_EQ(resolve_optimizer(Optimizer::kAuto, 0.0), Optimizer::kTwoMeans);
    EXPECT_EQ(resolve_optimizer(Optimizer::kAuto, 0.25), Optimizer::kHyperplaneScan);
    EXPECT_EQ(resolve_optimizer(Optimizer::kTwoMeans, 0.5), Optimizer::kTwoMeans);
}

TEST(SigClust, InputErrors) {
    RngStream rng(9);
    const auto data = oracle::random_data(10, 2, rng);
    EXPECT_THROW(test_confirmatory(data, Partition({0, 1, 1}), 0.5, quick(5)), std::invalid_argument);
    const auto same = DataMatrix::from_rows({{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}});
    EXPECT_THROW(test_exploratory(same, 0.5, quick(5)), DegenerateDataError);
    EigenvalueEstimate zero;
    zero.lambdas = Eigen::VectorXd::Zero(3);
    EXPECT_THROW(simulate_null(10, zero, 0.5, quick(5), RngStream(0)), std::invalid_argument);
}
