#ifndef WSIGCLUST_LINALG_HPP
#define WSIGCLUST_LINALG_HPP

#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "wsigclust/core.hpp"

/**
 * @file linalg.hpp
 *
 * @brief Pairwise distances, sums of squares, principal components, and
 * covariance-eigenvalue estimates for the Gaussian null model.
 */

namespace wsigclust {

/**
 * @brief Symmetric n x n matrix of squared Euclidean distances.
 *
 * Stored in full (column-major) so that any row or column is contiguous.
 */
class DistanceMatrix {
  public:
    explicit DistanceMatrix(Eigen::MatrixXd squared);

    [[nodiscard]] std::size_t n() const noexcept { return static_cast<std::size_t>(d_.rows()); }
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const {
        return d_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    [[nodiscard]] const Eigen::MatrixXd& matrix() const noexcept { return d_; }

  private:
    Eigen::MatrixXd d_;
};

/// Exact squared distances between every pair of rows.
DistanceMatrix pairwise_sq_distances(const DataMatrix& data);

/// Sum over `indices` of the squared distance to `center`.
double total_ss_about(const DataMatrix& data, std::span<const std::size_t> indices, const Eigen::VectorXd& center);

/// Squared distance of every observation to the overall mean.
std::vector<double> distances_to_mean(const DataMatrix& data);

struct WithinSsForms {
    double direct = 0.0;   ///< within-group SS about the group mean
    double pairwise = 0.0; ///< (1/2k) times the full double sum of squared distances
};

/// Evaluates the within-group sum of squares both directly and through pairwise distances.
WithinSsForms within_ss_forms(const DataMatrix& data, std::span<const std::size_t> indices);

/**
 * @brief Principal component scores of mean-centered data.
 *
 * `scores` is n x P, `loadings` is d x P with orthonormal columns, and
 * `explained` holds the P leading covariance eigenvalues (divisor n - 1) in
 * descending order. Each loading column is signed so that its largest
 * absolute entry is positive.
 */
struct PcaResult {
    Eigen::MatrixXd scores;
    Eigen::MatrixXd loadings;
    Eigen::VectorXd explained;

    [[nodiscard]] std::size_t num_components() const noexcept { return static_cast<std::size_t>(scores.cols()); }
};

/// Requires 1 <= num_components <= min(n - 1, d).
PcaResult pca(const DataMatrix& data, std::size_t num_components);

enum class EigenMethod { kSample, kHard, kSoft };

std::string_view to_string(EigenMethod method);

/// Accepts "sample", "hard" or "soft".
EigenMethod parse_eigen_method(std::string_view name);

struct EigenvalueEstimate {
    Eigen::VectorXd lambdas; ///< length d, descending
    EigenMethod method = EigenMethod::kSample;
    double noise_variance = 0.0;
};

/// Robust background noise variance: (1.4826 * MAD of all column-centered entries)^2.
double mad_noise_variance(const DataMatrix& data);

/**
 * @brief Covariance eigenvalues for the null model.
 *
 * - `kSample`: raw sample covariance eigenvalues, zero-padded to length d.
 * - `kHard`: each eigenvalue floored at the noise variance.
 * - `kSoft`: shifted down by the smallest tau >= 0 that keeps the floored
 *   total at or below the raw total, then floored at the noise variance.
 */
EigenvalueEstimate estimate_null_eigenvalues(const DataMatrix& data, EigenMethod method);

} // namespace wsigclust

#endif
