#ifndef WSIGCLUST_WCI_OPT_HPP
#define WSIGCLUST_WCI_OPT_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wsigclust/core.hpp"
#include "wsigclust/criteria.hpp"
#include "wsigclust/linalg.hpp"

/**
 * @file wci_opt.hpp
 *
 * @brief Minimization of the weighted cluster index over hyperplane splits.
 *
 * Observations are sorted by their score on one principal component and the
 * sorted sequence is cut at every position k = 1, ..., n - 1, giving the
 * partition (first k, remaining n - k). Two evaluators are provided:
 *
 * - `scan_pc_reference()` evaluates each split directly from the data, at
 *   O(n d) per split.
 * - `scan_pc_fast()` rewrites the within-cluster sums of squares as pairwise
 *   distance sums,
 *
 *       sum_{i in C} ||x_i - mean(C)||^2 = (1 / 2|C|) sum_{i,j in C} d_ij,
 *
 *   and carries four running totals from one split to the next:
 *
 *       alpha_k = sum_{i,j <= k} d_ij         (block of the first k, both orderings)
 *       beta_k  = sum_{i,j > k}  d_ij         (block of the rest)
 *       gamma_k = sum_{i <= k} r_i            (r_i = squared distance to the overall mean)
 *       delta_k = sum_{i > k}  r_i
 *
 *   so that
 *
 *       WCI_g(k) = [ k^-(g+1) alpha_k / 2 + (n-k)^-(g+1) beta_k / 2 ]
 *                / [ k^-g gamma_k + (n-k)^-g delta_k ].
 *
 *   Moving the cut from k to k + 1 adds twice the row sum of the entering
 *   observation against the first block to alpha, removes twice its row sum
 *   against the rest from beta, and transfers its r from delta to gamma.
 *   Given the distance matrix, one component costs O(n^2).
 */

namespace wsigclust {

/// Running totals at split position k (k observations in the first block).
struct ScanState {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    std::size_t k = 0;
};

/**
 * @brief Result of minimizing the WCI over all scanned hyperplane splits.
 */
struct ScanResult {
    Partition best_partition;
    CriterionValue best_wci;
    /// 0-based principal component whose scan produced the minimum.
    std::size_t best_pc = 0;
    /// Size of the first block at the minimum, in 1..n-1.
    std::size_t best_split = 0;
    /// P x (n - 1); entry (p, k - 1) is the WCI of split k along component p.
    Eigen::MatrixXd per_split_values;
};

/// Observation indices sorted by score on component `p` (stable, so ties keep index order).
std::vector<std::size_t> pc_ordering(const PcaResult& scores, std::size_t p);

/// Direct WCI of every split along component `p`; entry k - 1 holds split k.
std::vector<CriterionValue> scan_pc_reference(const DataMatrix& data, const PcaResult& scores, std::size_t p, double g);

/// alpha/beta/gamma/delta for k = 1..n-1 under `ordering`.
std::vector<ScanState> scan_trajectory(const DistanceMatrix& dist, std::span<const double> r,
                                       std::span<const std::size_t> ordering);

/// WCI of every split under `ordering` via the incremental totals; entry k - 1 holds split k.
std::vector<CriterionValue> scan_pc_fast(const DistanceMatrix& dist, std::span<const double> r,
                                         std::span<const std::size_t> ordering, double g);

/**
 * Scan the leading `num_pcs` components and return the overall minimum.
 * Ties go to the lower component, then the lower split position.
 *
 * `num_pcs` is capped at min(n - 1, d), the number of components the data
 * supports. Throws DegenerateDataError when all observations coincide.
 */
ScanResult minimize_wci(const DataMatrix& data, double g, std::size_t num_pcs, bool use_fast = true);

/// Same as `minimize_wci` for callers that already hold the distance matrix.
ScanResult minimize_wci(const DataMatrix& data, const DistanceMatrix& dist, double g, std::size_t num_pcs);

} // namespace wsigclust

#endif
