#ifndef WSIGCLUST_CRITERIA_HPP
#define WSIGCLUST_CRITERIA_HPP

#include <functional>

#include "wsigclust/core.hpp"

namespace wsigclust {

/// A cluster index (g = 0) or weighted cluster index evaluation.
struct CriterionValue {
    double value = 0.0;
    double g = 0.0;
    double numerator = 0.0;
    double denominator = 0.0;
};

/**
 * Within-cluster sum of squares over total sum of squares.
 *
 * Throws DegenerateDataError when all observations coincide.
 */
CriterionValue cluster_index(const DataMatrix& data, const Partition& part);

/**
 * Cluster index with each cluster's sums of squares weighted by |C_k|^-g.
 *
 * The numerator weights each within-cluster SS, the denominator weights each
 * cluster's SS about the overall mean. g = 0 reproduces cluster_index, and
 * equal cluster sizes make the weights cancel.
 */
CriterionValue weighted_cluster_index(const DataMatrix& data, const Partition& part, double g);

using CriterionFn = std::function<CriterionValue(const DataMatrix&, const Partition&)>;

struct CiPropertyReport {
    double value = 0.0;
    bool within_ss_zero = false;    ///< both clusters are point masses
    bool centroids_coincide = false; ///< cluster means equal, total SS positive
    bool zero_branch = false;        ///< (value == 0) iff within_ss_zero
    bool one_branch = false;         ///< (value == 1) iff centroids_coincide

    [[nodiscard]] bool holds() const noexcept { return zero_branch && one_branch; }
};

/// Checks both branches of the CI property for one (data, partition) pair, up to `tol` relative.
CiPropertyReport check_ci_property(const CriterionFn& criterion, const DataMatrix& data, const Partition& part,
                                   double tol = 1e-12);

} // namespace wsigclust

#endif
