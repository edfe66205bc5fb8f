#include "wsigclust/sigclust.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "wsigclust/parallel.hpp"
#include "wsigclust/wci_opt.hpp"

namespace wsigclust {

namespace {

// Substream ids under the root stream of a test.
constexpr std::uint64_t kNullStream = 1;
constexpr std::uint64_t kSampleStream = 2;

// Ids under each simulation's stream.
constexpr std::uint64_t kDrawStream = 0;
constexpr std::uint64_t kOptimizerStream = 1;
constexpr std::uint64_t kSizeStream = 2;

struct Minimized {
    Partition partition;
    CriterionValue value;
};

Minimized minimize(const DataMatrix& data, double g, Optimizer optimizer, const SigClustConfig& config,
                   const RngStream& rng) {
    if (optimizer == Optimizer::kTwoMeans) {
        KMeansOptions opts = config.kmeans;
        opts.threads = 1;
        KMeansResult km = two_means(data, opts, rng);
        CriterionValue v = g == 0.0 ? km.ci : weighted_cluster_index(data, km.partition, g);
        return {std::move(km.partition), v};
    }
    ScanResult scan = minimize_wci(data, g, config.num_pcs);
    return {std::move(scan.best_partition), scan.best_wci};
}

void validate_g(double g) {
    if (!(g >= 0.0) || !std::isfinite(g)) {
        throw std::invalid_argument("g must be a finite nonnegative number");
    }
}

TestResult finish(CriterionValue statistic, std::shared_ptr<const NullDistribution> null, TestMode mode,
                  Optimizer optimizer) {
    TestResult out;
    out.statistic = statistic;
    out.p_empirical = empirical_p_value(statistic.value, null->values);
    const ZScore z = z_score(statistic.value, null->values);
    out.z_score = z.value;
    out.z_degenerate = z.degenerate;
    out.mode = mode;
    out.null = std::move(null);
    out.optimizer = optimizer;
    return out;
}

} // namespace

std::string_view to_string(TestMode mode) {
    return mode == TestMode::kExploratory ? "exploratory" : "confirmatory";
}

std::string_view to_string(Optimizer optimizer) {
    switch (optimizer) {
        case Optimizer::kAuto:
            return "auto";
        case Optimizer::kTwoMeans:
            return "two-means";
        case Optimizer::kHyperplaneScan:
            return "hyperplane-scan";
    }
    return "unknown";
}

Optimizer parse_optimizer(std::string_view name) {
    if (name == "auto") {
        return Optimizer::kAuto;
    }
    if (name == "two-means" || name == "2means") {
        return Optimizer::kTwoMeans;
    }
    if (name == "hyperplane-scan" || name == "scan" || name == "wci") {
        return Optimizer::kHyperplaneScan;
    }
    throw std::invalid_argument("unknown optimizer '" + std::string(name) + "' (expected auto, two-means or scan)");
}

Optimizer resolve_optimizer(Optimizer requested, double g) {
    if (requested != Optimizer::kAuto) {
        return requested;
    }
    return g == 0.0 ? Optimizer::kTwoMeans : Optimizer::kHyperplaneScan;
}

double NullDistribution::mean() const {
    if (values.empty()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double NullDistribution::sd() const {
    if (values.size() < 2) {
        return 0.0;
    }
    const double m = mean();
    double ss = 0.0;
    for (double v : values) {
        ss += (v - m) * (v - m);
    }
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

double empirical_p_value(double statistic, std::span<const double> null_values) {
    std::size_t at_or_below = 0;
    for (double v : null_values) {
        if (v <= statistic) {
            ++at_or_below;
        }
    }
    return static_cast<double>(1 + at_or_below) / static_cast<double>(1 + null_values.size());
}

ZScore z_score(double statistic, std::span<const double> null_values) {
    if (null_values.empty()) {
        throw std::invalid_argument("z_score: empty null sample");
    }
    NullDistribution tmp;
    tmp.values.assign(null_values.begin(), null_values.end());
    const double mean = tmp.mean();
    const double sd = tmp.sd();
    if (sd > 0.0) {
        return {(statistic - mean) / sd, false};
    }
    const double diff = statistic - mean;
    if (diff == 0.0) {
        return {0.0, true};
    }
    return {std::copysign(std::numeric_limits<double>::infinity(), diff), true};
}

NullDistribution simulate_null(std::size_t n, const EigenvalueEstimate& eigenvalues, double g,
                               const SigClustConfig& config, const RngStream& rng) {
    if (n < 2) {
        throw std::invalid_argument("simulate_null: n must be at least 2");
    }
    if (config.n_sims < 1) {
        throw std::invalid_argument("simulate_null: at least one simulation is required");
    }
    validate_g(g);
    const Eigen::VectorXd& lambdas = eigenvalues.lambdas;
    if (lambdas.size() == 0 || !(lambdas.maxCoeff() > 0.0)) {
        throw std::invalid_argument("simulate_null: all eigenvalues are zero");
    }
    if ((lambdas.array() < 0.0).any() || !lambdas.allFinite()) {
        throw std::invalid_argument("simulate_null: eigenvalues must be finite and nonnegative");
    }

    // Coordinates with (numerically) zero variance contribute nothing to any criterion.
    const double cutoff = lambdas.maxCoeff() * 1e-12;
    std::vector<double> scales;
    for (Eigen::Index j = 0; j < lambdas.size(); ++j) {
        if (lambdas(j) > cutoff) {
            scales.push_back(std::sqrt(lambdas(j)));
        }
    }

    const Optimizer optimizer = resolve_optimizer(config.optimizer, g);
    NullDistribution out;
    out.values.resize(config.n_sims);
    out.cluster_sizes.resize(config.n_sims);
    out.g = g;
    out.eigenvalues = lambdas;
    out.eigen_method = eigenvalues.method;
    out.n = n;
    out.seed = rng.seed();
    out.optimizer = optimizer;
    out.num_pcs = config.num_pcs;

    parallel_for(config.n_sims, config.threads, [&](std::size_t i) {
        const RngStream sim = rng.substream(i);
        RngStream draw = sim.substream(kDrawStream);
        Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(scales.size()));
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            for (Eigen::Index r = 0; r < x.rows(); ++r) {
                x(r, j) = scales[static_cast<std::size_t>(j)] * draw.normal();
            }
        }
        const DataMatrix data(std::move(x));
        const Minimized m = minimize(data, g, optimizer, config, sim.substream(kOptimizerStream));
        RngStream pick = sim.substream(kSizeStream);
        out.values[i] = m.value.value;
        out.cluster_sizes[i] = pick.coin() ? m.partition.size1() : m.partition.size2();
    });
    return out;
}

TestResult test_confirmatory(const DataMatrix& data, const Partition& labels, double g, const SigClustConfig& config,
                             std::string label_source) {
    validate_g(g);
    if (labels.n() != data.n()) {
        throw std::invalid_argument("labels have " + std::to_string(labels.n()) + " entries but data has " +
                                    std::to_string(data.n()) + " observations");
    }
    const CriterionValue statistic = weighted_cluster_index(data, labels, g);
    const EigenvalueEstimate eig = estimate_null_eigenvalues(data, config.eigen_method);
    const RngStream root(config.seed);
    auto null = std::make_shared<const NullDistribution>(
        simulate_null(data.n(), eig, g, config, root.substream(kNullStream)));
    const Optimizer optimizer = null->optimizer;
    TestResult out = finish(statistic, std::move(null), TestMode::kConfirmatory, optimizer);
    out.label_source = std::move(label_source);
    out.labels = labels;
    return out;
}

TestResult test_exploratory(const DataMatrix& data, double g, const SigClustConfig& config) {
    validate_g(g);
    if (data.all_rows_identical()) {
        throw DegenerateDataError("all observations are identical; the cluster index is undefined");
    }
    const Optimizer optimizer = resolve_optimizer(config.optimizer, g);
    const RngStream root(config.seed);
    Minimized sample = minimize(data, g, optimizer, config, root.substream(kSampleStream));
    const EigenvalueEstimate eig = estimate_null_eigenvalues(data, config.eigen_method);
    auto null = std::make_shared<const NullDistribution>(
        simulate_null(data.n(), eig, g, config, root.substream(kNullStream)));
    TestResult out = finish(sample.value, std::move(null), TestMode::kExploratory, optimizer);
    out.label_source = std::string("exploratory: ") + std::string(to_string(optimizer)) + " on the sample";
    out.labels = std::move(sample.partition);
    return out;
}

GRecommendation recommend_g(const DataMatrix& data, const std::optional<Partition>& labels, const SigClustConfig& config,
                            const std::vector<double>& g_grid) {
    if (g_grid.empty()) {
        throw std::invalid_argument("recommend_g: empty g grid");
    }
    GRecommendation out;
    out.results.reserve(g_grid.size());
    for (double g : g_grid) {
        out.results.push_back(labels ? test_confirmatory(data, *labels, g, config) : test_exploratory(data, g, config));
    }
    for (std::size_t i = 1; i < out.results.size(); ++i) {
        if (out.results[i].z_score < out.results[out.best].z_score) {
            out.best = i;
        }
    }
    return out;
}

} // namespace wsigclust
