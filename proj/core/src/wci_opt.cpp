#include "wsigclust/wci_opt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wsigclust {

namespace {

CriterionValue wci_from_state(const ScanState& s, std::size_t n, double g) {
    const auto k1 = static_cast<double>(s.k);
    const auto k2 = static_cast<double>(n - s.k);
    CriterionValue out;
    out.g = g;
    out.numerator = 0.5 * std::pow(k1, -(g + 1.0)) * s.alpha + 0.5 * std::pow(k2, -(g + 1.0)) * s.beta;
    out.denominator = std::pow(k1, -g) * s.gamma + std::pow(k2, -g) * s.delta;
    if (!(out.denominator > 0.0)) {
        throw DegenerateDataError("zero total sum of squares; the cluster index is undefined");
    }
    out.value = std::min(1.0, out.numerator / out.denominator);
    return out;
}

void check_ordering(std::span<const std::size_t> ordering, std::size_t n) {
    if (ordering.size() != n) {
        throw std::invalid_argument("scan ordering has " + std::to_string(ordering.size()) + " entries, expected " +
                                    std::to_string(n));
    }
    std::vector<bool> seen(n, false);
    for (auto i : ordering) {
        if (i >= n || seen[i]) {
            throw std::invalid_argument("scan ordering is not a permutation of 0..n-1");
        }
        seen[i] = true;
    }
}

std::size_t effective_pcs(const DataMatrix& data, std::size_t num_pcs) {
    if (num_pcs < 1) {
        throw std::invalid_argument("minimize_wci: at least one principal component is required");
    }
    return std::min(num_pcs, std::min(data.n() - 1, data.d()));
}

} // namespace

std::vector<std::size_t> pc_ordering(const PcaResult& scores, std::size_t p) {
    if (p >= scores.num_components()) {
        throw std::invalid_argument("pc_ordering: component " + std::to_string(p) + " not available");
    }
    const auto col = scores.scores.col(static_cast<Eigen::Index>(p));
    std::vector<std::size_t> order(static_cast<std::size_t>(col.size()));
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return col(static_cast<Eigen::Index>(a)) < col(static_cast<Eigen::Index>(b));
    });
    return order;
}

std::vector<CriterionValue> scan_pc_reference(const DataMatrix& data, const PcaResult& scores, std::size_t p, double g) {
    if (g < 0.0) {
        throw std::invalid_argument("scan_pc_reference: g must be nonnegative");
    }
    const std::vector<std::size_t> order = pc_ordering(scores, p);
    if (order.size() != data.n()) {
        throw std::invalid_argument("scan_pc_reference: scores do not match the data");
    }
    std::vector<CriterionValue> out;
    out.reserve(data.n() - 1);
    for (std::size_t k = 1; k < data.n(); ++k) {
        out.push_back(weighted_cluster_index(data, Partition::from_split(order, k), g));
    }
    return out;
}

std::vector<ScanState> scan_trajectory(const DistanceMatrix& dist, std::span<const double> r,
                                       std::span<const std::size_t> ordering) {
    const std::size_t n = dist.n();
    if (n < 2) {
        throw std::invalid_argument("scan_trajectory: at least two observations are required");
    }
    if (r.size() != n) {
        throw std::invalid_argument("scan_trajectory: r has the wrong length");
    }
    check_ordering(ordering, n);

    // Row sums of the permuted distance matrix to the left and right of the diagonal.
    std::vector<double> left(n, 0.0);
    std::vector<double> right(n, 0.0);
    const Eigen::MatrixXd& d = dist.matrix();
    for (std::size_t m = 0; m < n; ++m) {
        const double* column = d.col(static_cast<Eigen::Index>(ordering[m])).data();
        double l = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            l += column[ordering[j]];
        }
        double rt = 0.0;
        for (std::size_t j = m + 1; j < n; ++j) {
            rt += column[ordering[j]];
        }
        left[m] = l;
        right[m] = rt;
    }

    std::vector<ScanState> states(n - 1);
    double alpha = 0.0;
    double gamma = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        alpha += 2.0 * left[k - 1];
        gamma += r[ordering[k - 1]];
        states[k - 1].alpha = alpha;
        states[k - 1].gamma = gamma;
        states[k - 1].k = k;
    }
    // beta and delta shrink as the cut advances; accumulating them from the far
    // end keeps every partial sum free of cancellation.
    double beta = 0.0;
    double delta = r[ordering[n - 1]];
    for (std::size_t k = n - 1; k >= 1; --k) {
        beta += 2.0 * right[k];
        states[k - 1].beta = beta;
        states[k - 1].delta = delta;
        delta += r[ordering[k - 1]];
    }
    return states;
}

std::vector<CriterionValue> scan_pc_fast(const DistanceMatrix& dist, std::span<const double> r,
                                         std::span<const std::size_t> ordering, double g) {
    if (g < 0.0) {
        throw std::invalid_argument("scan_pc_fast: g must be nonnegative");
    }
    const std::vector<ScanState> states = scan_trajectory(dist, r, ordering);
    std::vector<CriterionValue> out;
    out.reserve(states.size());
    for (const auto& s : states) {
        out.push_back(wci_from_state(s, dist.n(), g));
    }
    return out;
}

ScanResult minimize_wci(const DataMatrix& data, const DistanceMatrix& dist, double g, std::size_t num_pcs) {
    if (data.all_rows_identical()) {
        throw DegenerateDataError("all observations are identical; the cluster index is undefined");
    }
    if (dist.n() != data.n()) {
        throw std::invalid_argument("minimize_wci: distance matrix does not match the data");
    }
    const std::size_t pcs = effective_pcs(data, num_pcs);
    const PcaResult scores = pca(data, pcs);
    const std::vector<double> r = distances_to_mean(data);
    const std::size_t n = data.n();

    Eigen::MatrixXd table(static_cast<Eigen::Index>(pcs), static_cast<Eigen::Index>(n - 1));
    std::size_t best_pc = 0;
    std::size_t best_k = 1;
    CriterionValue best{};
    std::vector<std::size_t> best_order;
    bool have = false;
    for (std::size_t p = 0; p < pcs; ++p) {
        std::vector<std::size_t> order = pc_ordering(scores, p);
        const std::vector<CriterionValue> values = scan_pc_fast(dist, r, order, g);
        for (std::size_t k = 1; k < n; ++k) {
            const CriterionValue& v = values[k - 1];
            table(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(k - 1)) = v.value;
            if (!have || v.value < best.value) {
                have = true;
                best = v;
                best_pc = p;
                best_k = k;
                best_order = order;
            }
        }
    }
    return ScanResult{Partition::from_split(best_order, best_k), best, best_pc, best_k, std::move(table)};
}

ScanResult minimize_wci(const DataMatrix& data, double g, std::size_t num_pcs, bool use_fast) {
    if (use_fast) {
        if (data.all_rows_identical()) {
            throw DegenerateDataError("all observations are identical; the cluster index is undefined");
        }
        return minimize_wci(data, pairwise_sq_distances(data), g, num_pcs);
    }

    const std::size_t pcs = effective_pcs(data, num_pcs);
    const PcaResult scores = pca(data, pcs);
    const std::size_t n = data.n();
    Eigen::MatrixXd table(static_cast<Eigen::Index>(pcs), static_cast<Eigen::Index>(n - 1));
    std::size_t best_pc = 0;
    std::size_t best_k = 1;
    CriterionValue best{};
    bool have = false;
    for (std::size_t p = 0; p < pcs; ++p) {
        const std::vector<CriterionValue> values = scan_pc_reference(data, scores, p, g);
        for (std::size_t k = 1; k < n; ++k) {
            const CriterionValue& v = values[k - 1];
            table(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(k - 1)) = v.value;
            if (!have || v.value < best.value) {
                have = true;
                best = v;
                best_pc = p;
                best_k = k;
            }
        }
    }
    const std::vector<std::size_t> order = pc_ordering(scores, best_pc);
    return ScanResult{Partition::from_split(order, best_k), best, best_pc, best_k, std::move(table)};
}

} // namespace wsigclust
