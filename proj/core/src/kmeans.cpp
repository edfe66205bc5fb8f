#include "wsigclust/kmeans.hpp"

#include <array>
#include <optional>

#include "wsigclust/parallel.hpp"

namespace wsigclust {

namespace {

struct RestartOutcome {
    std::vector<std::uint8_t> labels;
    std::vector<double> history;
    std::size_t iterations = 0;
    double ci = 0.0;
};

class Lloyd {
  public:
    explicit Lloyd(const DataMatrix& data) : xt_(data.values().transpose()), n_(data.n()) {}

    RestartOutcome run(RngStream rng, std::size_t max_iter) const {
        std::array<Eigen::VectorXd, 2> centers = seed(rng);
        RestartOutcome out;
        out.labels = assign(centers);
        repair_empty(out.labels, centers);

        while (true) {
            centers = means(out.labels);
            out.history.push_back(within_ss(out.labels, centers));
            if (out.iterations >= max_iter) {
                break;
            }
            std::vector<std::uint8_t> next = assign(centers);
            repair_empty(next, centers);
            ++out.iterations;
            if (next == out.labels) {
                break;
            }
            out.labels = std::move(next);
        }
        return out;
    }

  private:
    [[nodiscard]] auto col(std::size_t i) const { return xt_.col(static_cast<Eigen::Index>(i)); }

    std::array<Eigen::VectorXd, 2> seed(RngStream& rng) const {
        std::array<Eigen::VectorXd, 2> c;
        c[0] = col(rng.uniform_index(n_));
        std::vector<double> w(n_);
        double total = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            w[i] = (col(i) - c[0]).squaredNorm();
            total += w[i];
        }
        const double target = rng.uniform() * total;
        double acc = 0.0;
        std::optional<std::size_t> pick;
        std::size_t last_positive = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            acc += w[i];
            if (w[i] > 0.0) {
                last_positive = i;
                if (acc > target) {
                    pick = i;
                    break;
                }
            }
        }
        c[1] = col(pick.value_or(last_positive));
        return c;
    }

    std::vector<std::uint8_t> assign(const std::array<Eigen::VectorXd, 2>& c) const {
        std::vector<std::uint8_t> labels(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            const double d0 = (col(i) - c[0]).squaredNorm();
            const double d1 = (col(i) - c[1]).squaredNorm();
            labels[i] = d1 < d0 ? 1 : 0;
        }
        return labels;
    }

    // An empty cluster is reseeded at the point farthest from the surviving centroid.
    void repair_empty(std::vector<std::uint8_t>& labels, std::array<Eigen::VectorXd, 2>& c) const {
        std::size_t ones = 0;
        for (auto l : labels) {
            ones += l;
        }
        if (ones != 0 && ones != n_) {
            return;
        }
        const std::uint8_t survivor = ones == 0 ? 0 : 1;
        std::size_t far = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < n_; ++i) {
            const double d = (col(i) - c[survivor]).squaredNorm();
            if (d > best) {
                best = d;
                far = i;
            }
        }
        c[1 - survivor] = col(far);
        labels = assign(c);
    }

    std::array<Eigen::VectorXd, 2> means(const std::vector<std::uint8_t>& labels) const {
        std::array<Eigen::VectorXd, 2> c{Eigen::VectorXd::Zero(xt_.rows()), Eigen::VectorXd::Zero(xt_.rows())};
        std::array<std::size_t, 2> counts{0, 0};
        for (std::size_t i = 0; i < n_; ++i) {
            c[labels[i]] += col(i);
            ++counts[labels[i]];
        }
        for (int k = 0; k < 2; ++k) {
            c[k] /= static_cast<double>(counts[k]);
        }
        return c;
    }

    double within_ss(const std::vector<std::uint8_t>& labels, const std::array<Eigen::VectorXd, 2>& c) const {
        double ss = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            ss += (col(i) - c[labels[i]]).squaredNorm();
        }
        return ss;
    }

    Eigen::MatrixXd xt_;
    std::size_t n_;
};

} // namespace

KMeansResult two_means(const DataMatrix& data, const KMeansOptions& options, const RngStream& rng) {
    if (options.restarts < 1) {
        throw std::invalid_argument("two_means: restarts must be at least 1");
    }
    if (data.all_rows_identical()) {
        throw DegenerateDataError("all observations are identical; 2-means is undefined");
    }

    const Lloyd lloyd(data);
    std::vector<RestartOutcome> outcomes(options.restarts);
    parallel_for(options.restarts, options.threads, [&](std::size_t r) {
        outcomes[r] = lloyd.run(rng.substream(r), options.max_iter);
        outcomes[r].ci = cluster_index(data, Partition(outcomes[r].labels)).value;
    });

    std::size_t best = 0;
    for (std::size_t r = 1; r < outcomes.size(); ++r) {
        if (outcomes[r].ci < outcomes[best].ci) {
            best = r;
        }
    }

    Partition part(outcomes[best].labels);
    const CriterionValue ci = cluster_index(data, part);
    KMeansResult result{std::move(part), ci, outcomes[best].iterations, options.restarts, best, {}, {}};
    result.restart_ci.reserve(outcomes.size());
    result.ss_history.reserve(outcomes.size());
    for (auto& o : outcomes) {
        result.restart_ci.push_back(o.ci);
        result.ss_history.push_back(std::move(o.history));
    }
    return result;
}

} // namespace wsigclust
