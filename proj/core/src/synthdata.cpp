#include "wsigclust/synthdata.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wsigclust {

SyntheticDataset gen_hotdog_plus_outliers(RngStream& rng, const HotdogParams& params) {
    if (params.hotdog_points < 1 || params.outliers < 1) {
        throw std::invalid_argument("hotdog generator needs at least one point in each group");
    }
    const Recipe recipe{"hotdog-plus-outliers",
                        {{"hotdog_points", params.hotdog_points},
                         {"major_sd", params.major_sd},
                         {"minor_sd", params.minor_sd},
                         {"rotation_deg", params.rotation_deg},
                         {"outliers", params.outliers},
                         {"outlier_along_sd", params.outlier_along_sd},
                         {"outlier_offset_sd", params.outlier_offset_sd},
                         {"outlier_jitter_sd", params.outlier_jitter_sd}},
                        rng.seed(),
                        rng.stream_id()};

    const std::size_t n = params.hotdog_points + params.outliers;
    const double theta = params.rotation_deg * std::numbers::pi / 180.0;
    Eigen::Matrix2d rot;
    rot << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);

    Eigen::MatrixXd x(static_cast<Eigen::Index>(n), 2);
    std::vector<std::uint8_t> labels(n, 0);
    Eigen::MatrixXd axes(static_cast<Eigen::Index>(params.hotdog_points), 2);
    for (std::size_t i = 0; i < params.hotdog_points; ++i) {
        const auto r = static_cast<Eigen::Index>(i);
        axes(r, 0) = params.major_sd * rng.normal();
        axes(r, 1) = params.minor_sd * rng.normal();
        x.row(r) = (rot * axes.row(r).transpose()).transpose();
    }
    // Outlier position is measured from the realized hotdog (its centroid and per-axis sample SDs).
    const Eigen::RowVector2d axis_mean = axes.colwise().mean();
    Eigen::Vector2d axis_sd = Eigen::Vector2d(params.major_sd, params.minor_sd);
    if (params.hotdog_points > 1) {
        const Eigen::MatrixXd centred = axes.rowwise() - axis_mean;
        axis_sd = (centred.colwise().squaredNorm() / static_cast<double>(params.hotdog_points - 1)).cwiseSqrt();
    }
    const Eigen::Vector2d centre = axis_mean.transpose() + Eigen::Vector2d(params.outlier_along_sd * axis_sd(0),
                                                                           params.outlier_offset_sd * axis_sd(1));
    for (std::size_t i = params.hotdog_points; i < n; ++i) {
        const Eigen::Vector2d jitter(params.outlier_jitter_sd * params.minor_sd * rng.normal(),
                                     params.outlier_jitter_sd * params.minor_sd * rng.normal());
        x.row(static_cast<Eigen::Index>(i)) = (rot * (centre + jitter)).transpose();
        labels[i] = 1;
    }
    return SyntheticDataset{DataMatrix(std::move(x)), Partition(std::move(labels)), true, recipe};
}

SyntheticDataset gen_round_clusters(RngStream& rng, const RoundClustersParams& params) {
    if (params.per_cluster < 1) {
        throw std::invalid_argument("round clusters generator needs at least one point per cluster");
    }
    const Recipe recipe{"round-clusters",
                        {{"per_cluster", params.per_cluster},
                         {"sd", params.sd},
                         {"separation_sd", params.separation_sd}},
                        rng.seed(),
                        rng.stream_id()};

    const std::size_t n = 2 * params.per_cluster;
    const double half_gap = 0.5 * params.separation_sd * params.sd;
    Eigen::MatrixXd x(static_cast<Eigen::Index>(n), 2);
    std::vector<std::uint8_t> labels(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const bool second = i >= params.per_cluster;
        const auto r = static_cast<Eigen::Index>(i);
        x(r, 0) = (second ? half_gap : -half_gap) + params.sd * rng.normal();
        x(r, 1) = params.sd * rng.normal();
        labels[i] = second ? 1 : 0;
    }
    return SyntheticDataset{DataMatrix(std::move(x)), Partition(std::move(labels)), true, recipe};
}

SyntheticDataset gen_gaussian(std::size_t n, const std::vector<double>& eigenvalues, RngStream& rng) {
    if (n < 2) {
        throw std::invalid_argument("gen_gaussian: n must be at least 2");
    }
    if (eigenvalues.empty()) {
        throw std::invalid_argument("gen_gaussian: at least one eigenvalue is required");
    }
    for (double l : eigenvalues) {
        if (!(l >= 0.0) || !std::isfinite(l)) {
            throw std::invalid_argument("gen_gaussian: eigenvalues must be finite and nonnegative");
        }
    }
    const Recipe recipe{"gaussian", {{"n", n}, {"eigenvalues", eigenvalues}}, rng.seed(), rng.stream_id()};

    Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(eigenvalues.size()));
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
        const double scale = std::sqrt(eigenvalues[static_cast<std::size_t>(j)]);
        for (Eigen::Index i = 0; i < x.rows(); ++i) {
            x(i, j) = scale * rng.normal();
        }
    }
    std::vector<std::uint8_t> labels(n, 0);
    labels.back() = 1;
    return SyntheticDataset{DataMatrix(std::move(x)), Partition(std::move(labels)), false, recipe};
}

} // namespace wsigclust
