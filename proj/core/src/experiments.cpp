#include "wsigclust/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "wsigclust/linalg.hpp"
#include "wsigclust/parallel.hpp"
#include "wsigclust/wci_opt.hpp"

namespace wsigclust {

namespace {

constexpr std::uint64_t kSampleStream = 0;
constexpr std::uint64_t kChoiceStream = 1;

std::size_t pick_size(const Partition& part, const RngStream& rng, std::size_t gi, std::size_t rep) {
    RngStream coin = rng.substream(kChoiceStream).substream(gi).substream(rep);
    return coin.coin() ? part.size1() : part.size2();
}

double quantile7(std::vector<double> v, double q) {
    std::sort(v.begin(), v.end());
    const double h = (static_cast<double>(v.size()) - 1.0) * q;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() < 2) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const double ma = std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(a.size());
    const double mb = std::accumulate(b.begin(), b.end(), 0.0) / static_cast<double>(b.size());
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    if (saa == 0.0 || sbb == 0.0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return sab / std::sqrt(saa * sbb);
}

} // namespace

std::vector<double> default_wishbone_g_grid() {
    std::vector<double> grid(21);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid[i] = static_cast<double>(i) / 20.0;
    }
    return grid;
}

std::vector<std::size_t> WishboneRun::sizes_at(std::size_t gi) const {
    std::vector<std::size_t> out;
    out.reserve(sizes.size());
    for (const auto& row : sizes) {
        out.push_back(row.at(gi));
    }
    return out;
}

DataMatrix wishbone_sample(std::size_t d, std::size_t n, std::size_t rep, const RngStream& rng) {
    RngStream draw = rng.substream(kSampleStream).substream(rep);
    return gen_gaussian(n, std::vector<double>(d, 1.0), draw).data;
}

std::size_t wishbone_cell(std::size_t d, std::size_t n, const std::vector<double>& g_grid, std::size_t gi,
                          std::size_t rep, std::size_t num_pcs, const RngStream& rng) {
    const DataMatrix data = wishbone_sample(d, n, rep, rng);
    const ScanResult scan = minimize_wci(data, g_grid.at(gi), num_pcs);
    return pick_size(scan.best_partition, rng, gi, rep);
}

WishboneRun run_wishbone(std::size_t d, std::size_t n, const std::vector<double>& g_grid, std::size_t reps,
                         std::size_t num_pcs, const RngStream& rng, unsigned threads) {
    if (reps < 1) {
        throw std::invalid_argument("run_wishbone: reps must be at least 1");
    }
    if (d < 1 || n < 2) {
        throw std::invalid_argument("run_wishbone: need d >= 1 and n >= 2");
    }
    if (g_grid.empty()) {
        throw std::invalid_argument("run_wishbone: empty g grid");
    }
    WishboneRun run{d, n, g_grid, reps, num_pcs, rng.seed(), std::vector<std::vector<std::size_t>>(reps)};
    parallel_for(reps, threads, [&](std::size_t rep) {
        const DataMatrix data = wishbone_sample(d, n, rep, rng);
        const DistanceMatrix dist = pairwise_sq_distances(data);
        std::vector<std::size_t>& row = run.sizes[rep];
        row.resize(g_grid.size());
        for (std::size_t gi = 0; gi < g_grid.size(); ++gi) {
            const ScanResult scan = minimize_wci(data, dist, g_grid[gi], num_pcs);
            row[gi] = pick_size(scan.best_partition, rng, gi, rep);
        }
    });
    return run;
}

double interquartile_range(std::span<const std::size_t> sizes) {
    if (sizes.empty()) {
        throw std::invalid_argument("interquartile_range: empty sample");
    }
    std::vector<double> v(sizes.begin(), sizes.end());
    return quantile7(v, 0.75) - quantile7(v, 0.25);
}

std::size_t widest_spread_index(const WishboneRun& run) {
    std::size_t best = 0;
    double best_iqr = -1.0;
    for (std::size_t gi = 0; gi < run.g_grid.size(); ++gi) {
        const double iqr = interquartile_range(run.sizes_at(gi));
        if (iqr > best_iqr) {
            best_iqr = iqr;
            best = gi;
        }
    }
    return best;
}

ImpartialityReport impartiality_test(std::span<const std::size_t> sizes, std::size_t n) {
    if (sizes.empty()) {
        throw std::invalid_argument("impartiality_test: empty sample");
    }
    if (n < 2) {
        throw std::invalid_argument("impartiality_test: n must be at least 2");
    }
    const std::size_t categories = n - 1;
    std::vector<std::size_t> counts(categories, 0);
    for (auto s : sizes) {
        if (s < 1 || s > categories) {
            throw std::invalid_argument("impartiality_test: size " + std::to_string(s) + " outside [1, n-1]");
        }
        ++counts[s - 1];
    }
    const auto total = static_cast<double>(sizes.size());
    const double uniform = 1.0 / static_cast<double>(categories);

    ImpartialityReport out;
    for (auto c : counts) {
        out.tv_distance += std::abs(static_cast<double>(c) / total - uniform);
    }
    out.tv_distance *= 0.5;

    // Equal-width pooling so each bin expects >= 5 observations.
    const double per_category = total * uniform;
    const std::size_t width =
        std::min(categories, static_cast<std::size_t>(std::ceil(5.0 / per_category - 1e-12)));
    const std::size_t bins = std::max<std::size_t>(1, categories / width);
    out.bins = bins;
    if (bins < 2) {
        out.chi_square = 0.0;
        out.dof = 0;
        out.p_value = 1.0;
        return out;
    }
    double chi = 0.0;
    for (std::size_t b = 0; b < bins; ++b) {
        const std::size_t first = b * width;
        const std::size_t last = b + 1 == bins ? categories : first + width;
        std::size_t observed = 0;
        for (std::size_t c = first; c < last; ++c) {
            observed += counts[c];
        }
        const double expected = per_category * static_cast<double>(last - first);
        const double diff = static_cast<double>(observed) - expected;
        chi += diff * diff / expected;
    }
    out.chi_square = chi;
    out.dof = bins - 1;
    out.p_value = boost::math::gamma_q(0.5 * static_cast<double>(out.dof), 0.5 * chi);
    return out;
}

PowerRun run_power_analysis(const DataMatrix& data, const Partition& labels, const std::vector<double>& g_grid,
                            const SigClustConfig& config) {
    if (labels.n() != data.n()) {
        throw std::invalid_argument("run_power_analysis: labels do not match the data");
    }
    PowerRun run;
    run.g_grid = g_grid;
    std::vector<double> tv;
    std::vector<double> abs_z;
    for (double g : g_grid) {
        TestResult result = test_confirmatory(data, labels, g, config, "power analysis");
        std::vector<std::size_t> hist(data.n() - 1, 0);
        for (auto s : result.null->cluster_sizes) {
            ++hist.at(s - 1);
        }
        run.impartiality.push_back(impartiality_test(result.null->cluster_sizes, data.n()));
        tv.push_back(run.impartiality.back().tv_distance);
        abs_z.push_back(std::abs(result.z_score));
        run.histograms.push_back(std::move(hist));
        run.results.push_back(std::move(result));
    }
    run.tv_abs_z_correlation = pearson(tv, abs_z);
    return run;
}

double fraction_in_range(std::span<const std::size_t> sizes, double lo, double hi) {
    if (sizes.empty()) {
        return 0.0;
    }
    const auto hits = std::count_if(sizes.begin(), sizes.end(), [&](std::size_t s) {
        const auto v = static_cast<double>(s);
        return v >= lo && v <= hi;
    });
    return static_cast<double>(hits) / static_cast<double>(sizes.size());
}

double fraction_extreme(std::span<const std::size_t> sizes, std::size_t n, double limit) {
    if (sizes.empty()) {
        return 0.0;
    }
    const auto hits = std::count_if(sizes.begin(), sizes.end(), [&](std::size_t s) {
        return static_cast<double>(std::min(s, n - s)) <= limit;
    });
    return static_cast<double>(hits) / static_cast<double>(sizes.size());
}

} // namespace wsigclust
