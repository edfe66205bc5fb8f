#ifndef WSIGCLUST_EXPERIMENTS_HPP
#define WSIGCLUST_EXPERIMENTS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "wsigclust/core.hpp"
#include "wsigclust/sigclust.hpp"
#include "wsigclust/synthdata.hpp"

/**
 * @file experiments.hpp
 *
 * @brief Simulation studies: cluster sizes chosen by WCI clustering of pure
 * Gaussian samples across g ("wishbone" runs), per-g power runs on a labelled
 * dataset, and a uniformity check on cluster-size distributions.
 */

namespace wsigclust {

/// 21 points on [0, 1], step 0.05.
std::vector<double> default_wishbone_g_grid();

/// Dimensions covered by the default wishbone reproduction.
inline constexpr std::size_t kDefaultWishboneDims[] = {1, 4, 32, 100, 150};

struct WishboneRun {
    std::size_t d = 0;
    std::size_t n = 0;
    std::vector<double> g_grid;
    std::size_t reps = 0;
    std::size_t num_pcs = 0;
    std::uint64_t seed = 0;
    /// sizes[rep][gi]: one randomly chosen cluster size, in [1, n - 1].
    std::vector<std::vector<std::size_t>> sizes;

    /// All recorded sizes for grid point `gi`, in rep order.
    [[nodiscard]] std::vector<std::size_t> sizes_at(std::size_t gi) const;
};

/// Replicate `rep`'s standard Gaussian sample. Every g on the grid clusters this same sample.
DataMatrix wishbone_sample(std::size_t d, std::size_t n, std::size_t rep, const RngStream& rng);

/// Recompute one (g, rep) cell from scratch.
std::size_t wishbone_cell(std::size_t d, std::size_t n, const std::vector<double>& g_grid, std::size_t gi,
                          std::size_t rep, std::size_t num_pcs, const RngStream& rng);

/**
 * For each replicate draw n points from N_d(0, I); for each g cluster it with
 * `minimize_wci` and record the size of one cluster picked by a fair coin.
 */
WishboneRun run_wishbone(std::size_t d, std::size_t n, const std::vector<double>& g_grid, std::size_t reps,
                         std::size_t num_pcs, const RngStream& rng, unsigned threads = 0);

/// Interquartile range (type-7 quantiles) of a sample of sizes.
double interquartile_range(std::span<const std::size_t> sizes);

/// Grid index with the largest size IQR; the lowest g wins ties.
std::size_t widest_spread_index(const WishboneRun& run);

struct ImpartialityReport {
    double chi_square = 0.0;
    std::size_t dof = 0;
    double p_value = 1.0;
    /// Total variation distance between the empirical size distribution and uniform on {1, ..., n-1}.
    double tv_distance = 0.0;
    std::size_t bins = 0;
};

/**
 * Chi-square goodness of fit against the discrete uniform on {1, ..., n - 1}.
 * Adjacent sizes are pooled into equal-width bins so every bin expects at
 * least five counts; the last bin absorbs any remainder.
 */
ImpartialityReport impartiality_test(std::span<const std::size_t> sizes, std::size_t n);

struct PowerRun {
    std::vector<double> g_grid;
    std::vector<TestResult> results;
    /// histograms[gi][s - 1] counts null simulations whose chosen cluster had size s.
    std::vector<std::vector<std::size_t>> histograms;
    std::vector<ImpartialityReport> impartiality;
    /// Pearson correlation across g between TV distance and |z|. Reported, never asserted.
    double tv_abs_z_correlation = 0.0;
};

/// Confirmatory test of `labels` at every g, with the null cluster-size histogram for each.
PowerRun run_power_analysis(const DataMatrix& data, const Partition& labels, const std::vector<double>& g_grid,
                            const SigClustConfig& config);

inline PowerRun run_power_analysis(const SyntheticDataset& dataset, const Partition& labels,
                                   const std::vector<double>& g_grid, const SigClustConfig& config) {
    return run_power_analysis(dataset.data, labels, g_grid, config);
}

/// Fraction of sizes in [lo, hi].
double fraction_in_range(std::span<const std::size_t> sizes, double lo, double hi);

/// Fraction with min(size, n - size) <= limit.
double fraction_extreme(std::span<const std::size_t> sizes, std::size_t n, double limit);

} // namespace wsigclust

#endif
