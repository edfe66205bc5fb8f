#ifndef WSIGCLUST_CORE_HPP
#define WSIGCLUST_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wsigclust/rng.hpp"

/**
 * @file core.hpp
 *
 * @brief Shared domain types: the data matrix, two-way partitions, and the
 * error types used throughout the library.
 */

namespace wsigclust {

/// Raised when a criterion is undefined because every observation coincides.
class DegenerateDataError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/**
 * @brief n observations (rows) by d features (columns).
 *
 * Immutable after construction. Construction enforces n >= 2, d >= 1 and
 * finite entries.
 */
class DataMatrix {
  public:
    explicit DataMatrix(Eigen::MatrixXd values);

    /// Convenience for small literal datasets, one inner vector per row.
    static DataMatrix from_rows(const std::vector<std::vector<double>>& rows);

    [[nodiscard]] const Eigen::MatrixXd& values() const noexcept { return values_; }
    [[nodiscard]] std::size_t n() const noexcept { return static_cast<std::size_t>(values_.rows()); }
    [[nodiscard]] std::size_t d() const noexcept { return static_cast<std::size_t>(values_.cols()); }

    [[nodiscard]] auto row(std::size_t i) const { return values_.row(static_cast<Eigen::Index>(i)); }

    /// Column means.
    [[nodiscard]] Eigen::VectorXd mean() const;

    /// True when every row equals the first one.
    [[nodiscard]] bool all_rows_identical() const;

  private:
    Eigen::MatrixXd values_;
};

/**
 * @brief A split of observation indices into two nonempty clusters.
 *
 * Label 0 marks membership in the first cluster, label 1 in the second.
 */
class Partition {
  public:
    /// Throws std::invalid_argument unless every label is 0 or 1 and both occur.
    explicit Partition(std::vector<std::uint8_t> labels);

    /// The first `k` entries of `order` form cluster 0, the rest cluster 1.
    static Partition from_split(std::span<const std::size_t> order, std::size_t k);

    [[nodiscard]] std::size_t n() const noexcept { return labels_.size(); }
    [[nodiscard]] std::size_t size1() const noexcept { return size1_; }
    [[nodiscard]] std::size_t size2() const noexcept { return labels_.size() - size1_; }
    [[nodiscard]] std::size_t size(std::uint8_t cluster) const noexcept { return cluster == 0 ? size1() : size2(); }

    [[nodiscard]] std::uint8_t label(std::size_t i) const { return labels_.at(i); }
    [[nodiscard]] const std::vector<std::uint8_t>& labels() const noexcept { return labels_; }

    /// Observation indices belonging to `cluster`, ascending.
    [[nodiscard]] std::vector<std::size_t> indices(std::uint8_t cluster) const;

    /// Same split with the cluster labels exchanged.
    [[nodiscard]] Partition swapped() const;

    /// Same sets regardless of which one is labelled first.
    [[nodiscard]] bool same_split(const Partition& other) const;

    friend bool operator==(const Partition&, const Partition&) = default;

  private:
    std::vector<std::uint8_t> labels_;
    std::size_t size1_ = 0;
};

/// Arithmetic mean of the selected rows. Throws std::invalid_argument on an empty selection.
Eigen::VectorXd centroid(const DataMatrix& data, std::span<const std::size_t> indices);

/// Independent fair labels, redrawn wholesale until both clusters are nonempty.
Partition coin_flip_partition(std::size_t n, RngStream& rng);

} // namespace wsigclust

#endif
