#include "wsigclust/core.hpp"

#include <algorithm>
#include <string>

namespace wsigclust {

DataMatrix::DataMatrix(Eigen::MatrixXd values) : values_(std::move(values)) {
    if (values_.rows() < 2) {
        throw std::invalid_argument("DataMatrix requires at least 2 observations, got " + std::to_string(values_.rows()));
    }
    if (values_.cols() < 1) {
        throw std::invalid_argument("DataMatrix requires at least 1 feature");
    }
    if (!values_.allFinite()) {
        throw std::invalid_argument("DataMatrix entries must be finite");
    }
}

DataMatrix DataMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) {
        throw std::invalid_argument("DataMatrix requires at least 2 observations, got 0");
    }
    const std::size_t d = rows.front().size();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != d) {
            throw std::invalid_argument("DataMatrix rows must all have the same length");
        }
        for (std::size_t j = 0; j < d; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return DataMatrix(std::move(m));
}

Eigen::VectorXd DataMatrix::mean() const {
    return values_.colwise().mean().transpose();
}

bool DataMatrix::all_rows_identical() const {
    for (Eigen::Index i = 1; i < values_.rows(); ++i) {
        if (values_.row(i) != values_.row(0)) {
            return false;
        }
    }
    return true;
}

Partition::Partition(std::vector<std::uint8_t> labels) : labels_(std::move(labels)) {
    std::size_t ones = 0;
    for (auto l : labels_) {
        if (l > 1) {
            throw std::invalid_argument("Partition labels must be 0 or 1");
        }
        ones += l;
    }
    size1_ = labels_.size() - ones;
    if (size1_ == 0 || ones == 0) {
        throw std::invalid_argument("Partition requires both clusters to be nonempty");
    }
}

Partition Partition::from_split(std::span<const std::size_t> order, std::size_t k) {
    std::vector<std::uint8_t> labels(order.size(), 1);
    if (k > order.size()) {
        throw std::invalid_argument("Partition::from_split: split position exceeds n");
    }
    for (std::size_t i = 0; i < k; ++i) {
        labels.at(order[i]) = 0;
    }
    return Partition(std::move(labels));
}

std::vector<std::size_t> Partition::indices(std::uint8_t cluster) const {
    std::vector<std::size_t> out;
    out.reserve(size(cluster));
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == cluster) {
            out.push_back(i);
        }
    }
    return out;
}

Partition Partition::swapped() const {
    std::vector<std::uint8_t> flipped(labels_.size());
    std::transform(labels_.begin(), labels_.end(), flipped.begin(), [](std::uint8_t l) {
        return static_cast<std::uint8_t>(1 - l);
    });
    return Partition(std::move(flipped));
}

bool Partition::same_split(const Partition& other) const {
    if (other.n() != n()) {
        return false;
    }
    return *this == other || *this == other.swapped();
}

Eigen::VectorXd centroid(const DataMatrix& data, std::span<const std::size_t> indices) {
    if (indices.empty()) {
        throw std::invalid_argument("centroid: empty index set");
    }
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(data.d()));
    for (auto i : indices) {
        if (i >= data.n()) {
            throw std::invalid_argument("centroid: index out of range");
        }
        sum += data.row(i).transpose();
    }
    return sum / static_cast<double>(indices.size());
}

Partition coin_flip_partition(std::size_t n, RngStream& rng) {
    if (n < 2) {
        throw std::invalid_argument("coin_flip_partition requires n >= 2");
    }
    std::vector<std::uint8_t> labels(n);
    while (true) {
        std::size_t ones = 0;
        for (auto& l : labels) {
            l = rng.coin() ? 1 : 0;
            ones += l;
        }
        if (ones != 0 && ones != n) {
            return Partition(std::move(labels));
        }
    }
}

} // namespace wsigclust
