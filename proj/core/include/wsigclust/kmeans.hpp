#ifndef WSIGCLUST_KMEANS_HPP
#define WSIGCLUST_KMEANS_HPP

#include <cstddef>
#include <vector>

#include "wsigclust/core.hpp"
#include "wsigclust/criteria.hpp"
#include "wsigclust/rng.hpp"

namespace wsigclust {

struct KMeansOptions {
    std::size_t restarts = 20;
    std::size_t max_iter = 300;
    /// Worker threads for the restarts; 0 picks the hardware concurrency.
    unsigned threads = 1;
};

/**
 * @brief Outcome of best-of-restarts 2-means clustering.
 */
struct KMeansResult {
    Partition partition;
    CriterionValue ci;
    /// Lloyd iterations performed by the winning restart.
    std::size_t iterations = 0;
    std::size_t restarts_used = 0;
    /// Index of the winning restart.
    std::size_t best_restart = 0;
    /// Converged cluster index of every restart, in restart order.
    std::vector<double> restart_ci;
    /// Within-cluster SS after each centroid update, per restart.
    std::vector<std::vector<double>> ss_history;
};

/**
 * Lloyd's algorithm for k = 2 with distance-weighted seeding, repeated
 * `restarts` times. Restart r draws from `rng.substream(r)`, and the
 * reduction keeps the lowest cluster index (earliest restart on ties), so the
 * result does not depend on how restarts are scheduled.
 *
 * Throws DegenerateDataError when all observations coincide.
 */
KMeansResult two_means(const DataMatrix& data, const KMeansOptions& options, const RngStream& rng);

inline KMeansResult two_means(const DataMatrix& data, std::size_t restarts, std::size_t max_iter, const RngStream& rng) {
    return two_means(data, KMeansOptions{restarts, max_iter, 1}, rng);
}

} // namespace wsigclust

#endif
