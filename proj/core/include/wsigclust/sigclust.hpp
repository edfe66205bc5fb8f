#ifndef WSIGCLUST_SIGCLUST_HPP
#define WSIGCLUST_SIGCLUST_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsigclust/core.hpp"
#include "wsigclust/criteria.hpp"
#include "wsigclust/kmeans.hpp"
#include "wsigclust/linalg.hpp"

/**
 * @file sigclust.hpp
 *
 * @brief Parametric-bootstrap significance test for two-cluster structure.
 *
 * The null hypothesis is a single Gaussian. Synthetic datasets are drawn
 * from N(0, diag(lambda)) with lambda estimated from the data, each is
 * clustered by the configured optimizer, and the minimized criterion values
 * form the null sample. The observed criterion is compared against the left
 * tail of that sample.
 *
 * In exploratory mode the observed criterion comes from running the same
 * optimizer on the data, which makes the test exact. In confirmatory mode the
 * candidate labels come from elsewhere; the test still runs but the labels'
 * provenance is recorded because the null no longer matches how they were
 * produced.
 */

namespace wsigclust {

enum class TestMode { kExploratory, kConfirmatory };

/// Criterion minimizer used for the null sample and, in exploratory mode, for the data.
enum class Optimizer {
    kAuto,          ///< 2-means when g == 0, hyperplane scan otherwise
    kTwoMeans,      ///< best-of-restarts 2-means (conventional test; criterion is the CI)
    kHyperplaneScan ///< WCI minimization over principal-component splits
};

std::string_view to_string(TestMode mode);
std::string_view to_string(Optimizer optimizer);
Optimizer parse_optimizer(std::string_view name);

/// kAuto resolved against g; other values pass through.
Optimizer resolve_optimizer(Optimizer requested, double g);

struct SigClustConfig {
    std::size_t n_sims = 1000;
    std::size_t num_pcs = 3;
    EigenMethod eigen_method = EigenMethod::kSample;
    Optimizer optimizer = Optimizer::kAuto;
    KMeansOptions kmeans{};
    std::uint64_t seed = 0;
    /// Worker threads for the null simulation; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

/**
 * @brief Monte Carlo sample of minimized criterion values under the null.
 */
struct NullDistribution {
    std::vector<double> values;
    /// One uniformly chosen cluster size per simulation.
    std::vector<std::size_t> cluster_sizes;
    double g = 0.0;
    Eigen::VectorXd eigenvalues;
    EigenMethod eigen_method = EigenMethod::kSample;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    Optimizer optimizer = Optimizer::kHyperplaneScan;
    std::size_t num_pcs = 0;

    [[nodiscard]] double mean() const;
    /// Sample standard deviation (divisor N - 1).
    [[nodiscard]] double sd() const;
};

/// (1 + #{null <= statistic}) / (1 + N).
double empirical_p_value(double statistic, std::span<const double> null_values);

struct ZScore {
    double value = 0.0;
    /// Null standard deviation was zero; value is a signed infinity (or 0 when statistic == mean).
    bool degenerate = false;
};

/// (statistic - mean) / sd with the N - 1 divisor.
ZScore z_score(double statistic, std::span<const double> null_values);

struct TestResult {
    CriterionValue statistic;
    double p_empirical = 1.0;
    double z_score = 0.0;
    bool z_degenerate = false;
    TestMode mode = TestMode::kExploratory;
    std::shared_ptr<const NullDistribution> null;
    std::string label_source;
    /// Labels whose criterion is the statistic (the optimizer's split in exploratory mode).
    std::optional<Partition> labels;
    Optimizer optimizer = Optimizer::kHyperplaneScan;

    [[nodiscard]] bool rejects(double alpha) const { return p_empirical <= alpha; }
};

/**
 * Draw `config.n_sims` Gaussian datasets of size `n` from N(0, diag(lambda)),
 * minimize the criterion on each, and record the minimum and one randomly
 * chosen cluster size. Simulation i draws only from `rng.substream(i)`.
 *
 * Throws std::invalid_argument when every eigenvalue is zero.
 */
NullDistribution simulate_null(std::size_t n, const EigenvalueEstimate& eigenvalues, double g,
                               const SigClustConfig& config, const RngStream& rng);

/// Test externally supplied labels against the optimizer-minimized null.
TestResult test_confirmatory(const DataMatrix& data, const Partition& labels, double g, const SigClustConfig& config,
                             std::string label_source = "user-supplied labels");

/// Test the split the optimizer finds on the data itself.
TestResult test_exploratory(const DataMatrix& data, double g, const SigClustConfig& config);

struct GRecommendation {
    std::vector<TestResult> results;
    /// Index into `results` with the most negative z-score (first on ties).
    std::size_t best = 0;
};

inline const std::vector<double>& recommended_g_grid() {
    static const std::vector<double> grid{0.0, 0.25, 0.5};
    return grid;
}

/// Run the test at each g (confirmatory when labels are given) and flag the strongest z-score.
GRecommendation recommend_g(const DataMatrix& data, const std::optional<Partition>& labels, const SigClustConfig& config,
                            const std::vector<double>& g_grid = recommended_g_grid());

} // namespace wsigclust

#endif
