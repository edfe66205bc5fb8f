#include "wsigclust/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wsigclust/linalg.hpp"

namespace wsigclust {

namespace {

struct ClusterSums {
    double within = 0.0; // about the cluster's own centroid
    double about_mean = 0.0;
    Eigen::VectorXd center;
};

ClusterSums cluster_sums(const DataMatrix& data, const std::vector<std::size_t>& idx, const Eigen::VectorXd& mean) {
    ClusterSums s;
    s.center = centroid(data, idx);
    s.within = total_ss_about(data, idx, s.center);
    s.about_mean = total_ss_about(data, idx, mean);
    return s;
}

void require_matching(const DataMatrix& data, const Partition& part) {
    if (part.n() != data.n()) {
        throw std::invalid_argument("partition has " + std::to_string(part.n()) + " labels but data has " +
                                    std::to_string(data.n()) + " observations");
    }
}

} // namespace

CriterionValue weighted_cluster_index(const DataMatrix& data, const Partition& part, double g) {
    require_matching(data, part);
    if (!(g >= 0.0) || !std::isfinite(g)) {
        throw std::invalid_argument("weighted_cluster_index: g must be a finite nonnegative number");
    }
    if (data.all_rows_identical()) {
        throw DegenerateDataError("all observations are identical; the cluster index is undefined");
    }
    const Eigen::VectorXd mean = data.mean();
    const ClusterSums c1 = cluster_sums(data, part.indices(0), mean);
    const ClusterSums c2 = cluster_sums(data, part.indices(1), mean);

    const double w1 = g == 0.0 ? 1.0 : std::pow(static_cast<double>(part.size1()), -g);
    const double w2 = g == 0.0 ? 1.0 : std::pow(static_cast<double>(part.size2()), -g);

    CriterionValue out;
    out.g = g;
    out.numerator = w1 * c1.within + w2 * c2.within;
    out.denominator = w1 * c1.about_mean + w2 * c2.about_mean;
    if (!(out.denominator > 0.0)) {
        throw DegenerateDataError("zero total sum of squares; the cluster index is undefined");
    }
    out.value = std::min(1.0, out.numerator / out.denominator);
    return out;
}

CriterionValue cluster_index(const DataMatrix& data, const Partition& part) {
    return weighted_cluster_index(data, part, 0.0);
}

CiPropertyReport check_ci_property(const CriterionFn& criterion, const DataMatrix& data, const Partition& part,
                                   double tol) {
    require_matching(data, part);
    const Eigen::VectorXd mean = data.mean();
    const ClusterSums c1 = cluster_sums(data, part.indices(0), mean);
    const ClusterSums c2 = cluster_sums(data, part.indices(1), mean);
    const double total = c1.about_mean + c2.about_mean;
    const double scale = total / static_cast<double>(data.n());

    CiPropertyReport r;
    r.value = criterion(data, part).value;
    r.within_ss_zero = c1.within <= tol * total && c2.within <= tol * total;
    r.centroids_coincide = total > 0.0 && (c1.center - c2.center).squaredNorm() <= tol * scale;

    const bool is_zero = r.value <= tol;
    const bool is_one = r.value >= 1.0 - tol;
    r.zero_branch = is_zero == r.within_ss_zero;
    r.one_branch = is_one == r.centroids_coincide;
    return r;
}

} // namespace wsigclust
