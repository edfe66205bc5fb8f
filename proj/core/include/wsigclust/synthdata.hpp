#ifndef WSIGCLUST_SYNTHDATA_HPP
#define WSIGCLUST_SYNTHDATA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wsigclust/core.hpp"
#include "wsigclust/rng.hpp"

namespace wsigclust {

/// Generator name, its parameters, and the seed that reproduces the dataset.
struct Recipe {
    std::string name;
    nlohmann::json params;
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

struct SyntheticDataset {
    DataMatrix data;
    Partition true_labels;
    /// False for single-population data, whose stored labels are a placeholder split.
    bool labels_informative = true;
    Recipe recipe;
};

/**
 * A stretched 2-D Gaussian "hotdog" plus a small group of outliers beyond
 * one end of it. Labels: 0 = hotdog, 1 = outliers.
 */
struct HotdogParams {
    std::size_t hotdog_points = 60;
    double major_sd = 4.0;
    double minor_sd = 0.5;
    double rotation_deg = 30.0;
    std::size_t outliers = 2;
    /// Outlier centre along the long axis, in sample major-axis SDs from the hotdog centroid.
    double outlier_along_sd = 3.5;
    /// Perpendicular offset of the outlier centre, in sample minor-axis SDs.
    double outlier_offset_sd = 21.0;
    /// Jitter of each outlier about the outlier centre, in minor-axis SDs.
    double outlier_jitter_sd = 0.5;
};

SyntheticDataset gen_hotdog_plus_outliers(RngStream& rng, const HotdogParams& params = {});

/// Two isotropic 2-D Gaussians separated along the first axis. Labels split the two groups.
struct RoundClustersParams {
    std::size_t per_cluster = 30;
    double sd = 1.0;
    /// Distance between the two centres, in SDs.
    double separation_sd = 8.0;
};

SyntheticDataset gen_round_clusters(RngStream& rng, const RoundClustersParams& params = {});

/**
 * iid draws from N(0, diag(eigenvalues)). The data carry no cluster structure,
 * so `true_labels` is the all-but-last split and `labels_informative` is false.
 */
SyntheticDataset gen_gaussian(std::size_t n, const std::vector<double>& eigenvalues, RngStream& rng);

} // namespace wsigclust

#endif
