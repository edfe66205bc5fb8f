#include "wsigclust/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wsigclust {

namespace {

constexpr double kMadScale = 1.4826;

double median_inplace(std::vector<double>& v) {
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    const double upper = v[mid];
    if (v.size() % 2 == 1) {
        return upper;
    }
    const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

Eigen::MatrixXd centered(const DataMatrix& data) {
    return data.values().rowwise() - data.values().colwise().mean();
}

} // namespace

DistanceMatrix::DistanceMatrix(Eigen::MatrixXd squared) : d_(std::move(squared)) {
    if (d_.rows() != d_.cols()) {
        throw std::invalid_argument("DistanceMatrix must be square");
    }
}

DistanceMatrix pairwise_sq_distances(const DataMatrix& data) {
    const auto n = static_cast<Eigen::Index>(data.n());
    // Observations as contiguous columns.
    const Eigen::MatrixXd xt = data.values().transpose();
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = j + 1; i < n; ++i) {
            const double v = (xt.col(i) - xt.col(j)).squaredNorm();
            d(i, j) = v;
            d(j, i) = v;
        }
    }
    return DistanceMatrix(std::move(d));
}

double total_ss_about(const DataMatrix& data, std::span<const std::size_t> indices, const Eigen::VectorXd& center) {
    if (static_cast<std::size_t>(center.size()) != data.d()) {
        throw std::invalid_argument("total_ss_about: center has dimension " + std::to_string(center.size()) +
                                    ", data has " + std::to_string(data.d()));
    }
    if (indices.empty()) {
        throw std::invalid_argument("total_ss_about: empty index set");
    }
    double ss = 0.0;
    for (auto i : indices) {
        ss += (data.row(i).transpose() - center).squaredNorm();
    }
    return ss;
}

std::vector<double> distances_to_mean(const DataMatrix& data) {
    const Eigen::MatrixXd c = centered(data);
    std::vector<double> r(data.n());
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = c.row(static_cast<Eigen::Index>(i)).squaredNorm();
    }
    return r;
}

WithinSsForms within_ss_forms(const DataMatrix& data, std::span<const std::size_t> indices) {
    const Eigen::VectorXd mean = centroid(data, indices);
    WithinSsForms out;
    out.direct = total_ss_about(data, indices, mean);
    double double_sum = 0.0;
    for (auto i : indices) {
        for (auto j : indices) {
            double_sum += (data.row(i) - data.row(j)).squaredNorm();
        }
    }
    out.pairwise = double_sum / (2.0 * static_cast<double>(indices.size()));
    return out;
}

PcaResult pca(const DataMatrix& data, std::size_t num_components) {
    const std::size_t max_components = std::min(data.n() - 1, data.d());
    if (num_components < 1 || num_components > max_components) {
        throw std::invalid_argument("pca: number of components must be in [1, " + std::to_string(max_components) +
                                    "], got " + std::to_string(num_components));
    }
    const Eigen::MatrixXd xc = centered(data);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(xc, Eigen::ComputeThinV);
    const auto p = static_cast<Eigen::Index>(num_components);

    PcaResult out;
    out.loadings = svd.matrixV().leftCols(p);
    for (Eigen::Index c = 0; c < p; ++c) {
        Eigen::Index arg = 0;
        out.loadings.col(c).cwiseAbs().maxCoeff(&arg);
        if (out.loadings(arg, c) < 0) {
            out.loadings.col(c) *= -1.0;
        }
    }
    out.scores = xc * out.loadings;
    out.explained = svd.singularValues().head(p).array().square() / static_cast<double>(data.n() - 1);
    return out;
}

std::string_view to_string(EigenMethod method) {
    switch (method) {
        case EigenMethod::kSample:
            return "sample";
        case EigenMethod::kHard:
            return "hard";
        case EigenMethod::kSoft:
            return "soft";
    }
    return "unknown";
}

EigenMethod parse_eigen_method(std::string_view name) {
    if (name == "sample") {
        return EigenMethod::kSample;
    }
    if (name == "hard") {
        return EigenMethod::kHard;
    }
    if (name == "soft") {
        return EigenMethod::kSoft;
    }
    throw std::invalid_argument("unknown eigenvalue method '" + std::string(name) + "' (expected sample, hard or soft)");
}

double mad_noise_variance(const DataMatrix& data) {
    const Eigen::MatrixXd xc = centered(data);
    std::vector<double> entries(xc.data(), xc.data() + xc.size());
    const double med = median_inplace(entries);
    for (auto& e : entries) {
        e = std::abs(e - med);
    }
    const double sigma = kMadScale * median_inplace(entries);
    return sigma * sigma;
}

EigenvalueEstimate estimate_null_eigenvalues(const DataMatrix& data, EigenMethod method) {
    const auto d = static_cast<Eigen::Index>(data.d());
    Eigen::BDCSVD<Eigen::MatrixXd> svd(centered(data));
    const Eigen::VectorXd& s = svd.singularValues();

    EigenvalueEstimate out;
    out.method = method;
    out.lambdas = Eigen::VectorXd::Zero(d);
    // Centering leaves rank at most n - 1; anything past that is rounding noise.
    const Eigen::Index rank = std::min<Eigen::Index>(s.size(), static_cast<Eigen::Index>(data.n()) - 1);
    out.lambdas.head(rank) = s.head(rank).array().square() / static_cast<double>(data.n() - 1);
    out.noise_variance = mad_noise_variance(data);

    if (method == EigenMethod::kSample) {
        return out;
    }

    const double floor = out.noise_variance;
    if (method == EigenMethod::kHard) {
        out.lambdas = out.lambdas.cwiseMax(floor);
        return out;
    }

    const Eigen::VectorXd raw = out.lambdas;
    const double budget = raw.sum();
    auto shifted_total = [&](double tau) { return (raw.array() - tau).max(floor).sum(); };

    double tau = 0.0;
    if (shifted_total(0.0) > budget) {
        double lo = 0.0;
        double hi = raw.maxCoeff();
        if (shifted_total(hi) <= budget) {
            for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
                const double mid = 0.5 * (lo + hi);
                if (shifted_total(mid) <= budget) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
        }
        // When even full shrinkage overshoots, everything sits at the floor.
        tau = hi;
    }
    out.lambdas = (raw.array() - tau).max(floor).matrix();
    return out;
}

} // namespace wsigclust
