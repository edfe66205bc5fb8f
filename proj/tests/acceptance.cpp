// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include <wsigclust/criteria.hpp>
#include <wsigclust/experiments.hpp>
#include <wsigclust/kmeans.hpp>
#include <wsigclust/linalg.hpp>
#include <wsigclust/sigclust.hpp>
#include <wsigclust/synthdata.hpp>
#include <wsigclust/wci_opt.hpp>

#include "oracles.hpp"

using namespace wsigclust;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Partition random_partition_with_sizes(std::size_t n, std::size_t first, RngStream& rng) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) {
        idx[i] = i;
    }
    for (std::size_t i = n - 1; i > 0; --i) {
        std::swap(idx[i], idx[rng.uniform_index(i + 1)]);
    }
    std::vector<std::uint8_t> labels(n, 1);
    for (std::size_t i = 0; i < first; ++i) {
        labels[idx[i]] = 0;
    }
    return Partition(labels);
}

double min_of(const std::vector<double>& v) {
    return *std::min_element(v.begin(), v.end());
}

Outcome oracle_equivalence() {
    const auto t0 = Clock::now();
    RngStream rng(101);
    double worst = 0.0;
    std::size_t splits = 0;
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 10 + rng.uniform_index(491);
        const std::size_t d = 1 + rng.uniform_index(50);
        const auto data = oracle::random_data(n, d, rng);
        const std::size_t pcs = std::min<std::size_t>({3, n - 1, d});
        const auto scores = pca(data, pcs);
        const auto dist = pairwise_sq_distances(data);
        const auto r = distances_to_mean(data);
        for (double g : {0.0, 0.25, 0.5, 1.0}) {
            for (std::size_t p = 0; p < pcs; ++p) {
                const auto order = pc_ordering(scores, p);
                const auto fast = scan_pc_fast(dist, r, order, g);
                const auto ref = scan_pc_reference(data, scores, p, g);
                for (std::size_t k = 0; k < fast.size(); ++k) {
                    worst = std::max(worst, oracle::rel_diff(fast[k].value, ref[k].value));
                }
                splits += fast.size();
            }
        }
    }
    const double secs = seconds_since(t0);
    return {worst <= 1e-10 && secs < 60.0,
            fmt::format("{} splits, max rel diff {:.2e}, {:.1f} s", splits, worst, secs)};
}

Outcome exhaustive_search() {
    RngStream rng(202);
    int scan_ok = 0;
    int km_ok = 0;
    constexpr int kCases = 30;
    for (int t = 0; t < kCases; ++t) {
        const std::size_t n = 4 + rng.uniform_index(9);
        const std::size_t d = 1 + rng.uniform_index(4);
        const auto data = oracle::random_data(n, d, rng);
        const auto rows = oracle::rows_of(data);
        const double g = t % 2 == 0 ? 0.5 : 1.0;
        const auto scan = minimize_wci(data, g, d);
        scan_ok += scan.best_wci.value >= oracle::exhaustive_min(rows, g).value * (1.0 - 1e-12) ? 1 : 0;
        const auto km = two_means(data, 50, 300, rng.substream(500 + static_cast<std::uint64_t>(t)));
        km_ok += km.ci.value <= oracle::exhaustive_min(rows, 0.0).value * (1.0 + 1e-10) ? 1 : 0;
    }
    return {scan_ok == kCases && km_ok >= 0.99 * kCases,
            fmt::format("scan >= exhaustive {}/{}, 2-means at exhaustive {}/{}", scan_ok, kCases, km_ok, kCases)};
}

Outcome ci_property_suite() {
    RngStream rng(303);
    const std::vector<double> gs{0.0, 0.25, 0.5, 1.0};
    int zero_ok = 0;
    int one_ok = 0;
    int interior_ok = 0;
    int total = 0;
    int interior_total = 0;
    for (int t = 0; t < 25; ++t) {
        const std::size_t d = 1 + rng.uniform_index(4);
        std::vector<double> shift(d);
        for (auto& s : shift) {
            s = static_cast<double>(rng.uniform_index(21)) - 10.0;
        }
        // Piles: every point of a cluster sits on one of two distinct integer locations.
        std::vector<std::vector<double>> pile_rows;
        std::vector<std::uint8_t> pile_labels;
        const std::size_t m0 = 1 + rng.uniform_index(6);
        const std::size_t m1 = 1 + rng.uniform_index(6);
        std::vector<double> a(shift);
        std::vector<double> b(shift);
        b[0] += 1.0 + static_cast<double>(rng.uniform_index(5));
        for (std::size_t i = 0; i < m0; ++i) {
            pile_rows.push_back(a);
            pile_labels.push_back(0);
        }
        for (std::size_t i = 0; i < m1; ++i) {
            pile_rows.push_back(b);
            pile_labels.push_back(1);
        }
        // Collided: each cluster is a set of +/- pairs around the same integer centre.
        std::vector<std::vector<double>> col_rows;
        std::vector<std::uint8_t> col_labels;
        for (std::uint8_t c = 0; c < 2; ++c) {
            const std::size_t pairs = 1 + rng.uniform_index(4);
            for (std::size_t q = 0; q < pairs; ++q) {
                std::vector<double> plus(shift);
                std::vector<double> minus(shift);
                for (std::size_t j = 0; j < d; ++j) {
                    const double off = static_cast<double>(rng.uniform_index(7)) - 3.0 + (j == 0 ? 0.5 : 0.0);
                    plus[j] += off;
                    minus[j] -= off;
                }
                col_rows.push_back(plus);
                col_rows.push_back(minus);
                col_labels.push_back(c);
                col_labels.push_back(c);
            }
        }
        const auto piles = DataMatrix::from_rows(pile_rows);
        const auto collided = DataMatrix::from_rows(col_rows);
        for (double g : gs) {
            zero_ok += weighted_cluster_index(piles, Partition(pile_labels), g).value == 0.0 ? 1 : 0;
            one_ok += weighted_cluster_index(collided, Partition(col_labels), g).value == 1.0 ? 1 : 0;
            ++total;
        }
    }
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 3 + rng.uniform_index(40);
        const auto data = oracle::random_data(n, 1 + rng.uniform_index(5), rng);
        const Partition p = coin_flip_partition(n, rng);
        for (double g : gs) {
            const double v = weighted_cluster_index(data, p, g).value;
            interior_ok += v > 0.0 && v < 1.0 ? 1 : 0;
            ++interior_total;
        }
    }
    return {zero_ok == total && one_ok == total && interior_ok == interior_total,
            fmt::format("exact 0: {}/{}, exact 1: {}/{}, interior: {}/{}", zero_ok, total, one_ok, total,
                        interior_ok, interior_total)};
}

Outcome pairwise_identity() {
    RngStream rng(404);
    double worst = 0.0;
    int checks = 0;
    for (int ds = 0; ds < 10; ++ds) {
        const std::size_t n = 20 + rng.uniform_index(81);
        const auto data = oracle::random_data(n, 1 + rng.uniform_index(10), rng);
        for (int s = 0; s < 10; ++s) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < n; ++i) {
                if (rng.uniform_index(2) == 1) {
                    idx.push_back(i);
                }
            }
            if (idx.size() < 2) {
                idx = {0, n - 1};
            }
            const auto check = within_ss_forms(data, idx);
            worst = std::max(worst, oracle::rel_diff(check.direct, check.pairwise));
            ++checks;
        }
    }
    return {worst <= 1e-10, fmt::format("{} subsets, max rel diff {:.2e}", checks, worst)};
}

Outcome reductions() {
    RngStream rng(505);
    double worst_g0 = 0.0;
    double worst_equal = 0.0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 4 + rng.uniform_index(60);
        const auto data = oracle::random_data(n, 1 + rng.uniform_index(6), rng);
        const Partition p = coin_flip_partition(n, rng);
        worst_g0 = std::max(worst_g0, oracle::rel_diff(weighted_cluster_index(data, p, 0.0).value,
                                                       cluster_index(data, p).value));
    }
    for (int t = 0; t < 100; ++t) {
        const std::size_t half = 2 + rng.uniform_index(30);
        const auto data = oracle::random_data(2 * half, 1 + rng.uniform_index(6), rng);
        const Partition p = random_partition_with_sizes(2 * half, half, rng);
        const double g = 2.0 * rng.uniform();
        worst_equal = std::max(worst_equal, oracle::rel_diff(weighted_cluster_index(data, p, g).value,
                                                             cluster_index(data, p).value));
    }
    return {worst_g0 <= 1e-12 && worst_equal <= 1e-12,
            fmt::format("g=0 max rel diff {:.2e}, equal sizes max rel diff {:.2e}", worst_g0, worst_equal)};
}

Outcome hotdog_reproduction() {
    const auto t0 = Clock::now();
    constexpr int kSeeds = 50;
    int km_wins = 0;
    int isolated = 0;
    int conv_ok = 0;
    int weighted_ok = 0;
    for (int s = 0; s < kSeeds; ++s) {
        const auto seed = static_cast<std::uint64_t>(s);
        RngStream rng(seed);
        const auto ds = gen_hotdog_plus_outliers(rng);
        const auto km = two_means(ds.data, 20, 300, RngStream(seed).substream(2));
        km_wins += km.ci.value < cluster_index(ds.data, ds.true_labels).value ? 1 : 0;
        const auto g1 = minimize_wci(ds.data, 1.0, 1);
        isolated += g1.best_partition.same_split(ds.true_labels) ? 1 : 0;
        SigClustConfig cfg;
        cfg.n_sims = 500;
        cfg.seed = seed;
        conv_ok += test_confirmatory(ds.data, ds.true_labels, 0.0, cfg).z_score > -2.0 ? 1 : 0;
        weighted_ok += test_confirmatory(ds.data, ds.true_labels, 0.5, cfg).z_score < -3.0 ? 1 : 0;
    }
    const double secs = seconds_since(t0);
    const bool pass = km_wins >= 0.95 * kSeeds && isolated >= 0.95 * kSeeds && conv_ok >= 0.9 * kSeeds &&
                      weighted_ok >= 0.9 * kSeeds && secs < 600.0;
    return {pass, fmt::format("2-means beats truth {}/{}, g=1 isolates outliers {}/{}, g=0 z>-2 {}/{}, "
                              "g=0.5 z<-3 {}/{}, {:.1f} s",
                              km_wins, kSeeds, isolated, kSeeds, conv_ok, kSeeds, weighted_ok, kSeeds, secs)};
}

Outcome round_reproduction() {
    constexpr int kSeeds = 50;
    int ok = 0;
    for (int s = 0; s < kSeeds; ++s) {
        const auto seed = static_cast<std::uint64_t>(s);
        RngStream rng(seed);
        const auto ds = gen_round_clusters(rng);
        SigClustConfig cfg;
        cfg.n_sims = 200;
        cfg.seed = seed;
        bool good = true;
        for (double g : {0.0, 0.5}) {
            const auto res = test_exploratory(ds.data, g, cfg);
            good = good && res.z_score < -3.0 && res.statistic.value < min_of(res.null->values);
        }
        ok += good ? 1 : 0;
    }
    return {ok >= 0.95 * kSeeds, fmt::format("both g significant and below every null value in {}/{}", ok, kSeeds)};
}

Outcome wishbone_reproduction() {
    const auto grid = default_wishbone_g_grid();
    const RngStream root(1);
    std::vector<WishboneRun> runs;
    for (std::size_t d : {1u, 4u, 32u}) {
        runs.push_back(run_wishbone(d, 100, grid, 150, 3, root.substream(d)));
    }
    const auto& d4 = runs[1];
    const double balanced = fraction_in_range(d4.sizes_at(0), 25.0, 75.0);
    const double extreme = fraction_extreme(d4.sizes_at(grid.size() - 1), 100, 10.0);
    const double widest_d1 = grid[widest_spread_index(runs[0])];
    const double widest_d32 = grid[widest_spread_index(runs[2])];
    return {balanced >= 0.9 && extreme >= 0.9 && widest_d32 < widest_d1,
            fmt::format("d=4: g=0 sizes in [25,75] {:.3f}, g=1 extreme {:.3f}; widest-IQR g: d=1 {}, d=32 {}",
                        balanced, extreme, widest_d1, widest_d32)};
}

Outcome power_pattern() {
    constexpr std::uint64_t kSeed = 5009;
    RngStream rng(kSeed);
    const auto ds = gen_hotdog_plus_outliers(rng);
    const std::vector<double> grid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
    SigClustConfig cfg;
    cfg.n_sims = 500;
    cfg.seed = kSeed;
    const auto run = run_power_analysis(ds, ds.true_labels, grid, cfg);
    const double n = static_cast<double>(ds.data.n());
    bool z_ok = true;
    std::string zs;
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        zs += fmt::format(" {:.2f}", run.results[gi].z_score);
        if (grid[gi] >= 0.3 - 1e-12) {
            z_ok = z_ok && run.results[gi].z_score < -2.0;
        }
    }
    const double balanced = fraction_in_range(run.results[0].null->cluster_sizes, n / 3.0, 2.0 * n / 3.0);
    const double ext6 = fraction_extreme(run.results[6].null->cluster_sizes, ds.data.n(), n / 10.0);
    const double ext7 = fraction_extreme(run.results[7].null->cluster_sizes, ds.data.n(), n / 10.0);
    return {z_ok && balanced >= 0.8 && ext6 >= 0.8 && ext7 >= 0.8,
            fmt::format("z by g:{}; g=0 balanced {:.2f}; extreme g=0.6 {:.2f}, g=0.7 {:.2f}", zs, balanced, ext6,
                        ext7)};
}

Outcome test_arithmetic() {
    const std::vector<double> null{0.30, 0.32, 0.35, 0.36, 0.40, 0.41, 0.45, 0.47, 0.50, 0.54};
    const bool p_ok = empirical_p_value(0.37, null) == 5.0 / 11.0 && empirical_p_value(0.10, null) == 1.0 / 11.0;
    const double z_expected = (0.37 - 0.41) / std::sqrt(0.0566 / 9.0);
    const double z = z_score(0.37, null).value;
    const bool z_ok = std::abs(z - z_expected) <= 1e-12;

    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 5; ++i) {
        rows.push_back({0.0, 0.0});
        rows.push_back({10.0, 5.0});
    }
    SigClustConfig cfg;
    cfg.n_sims = 100;
    const double min_p = test_exploratory(DataMatrix::from_rows(rows), 0.5, cfg).p_empirical;
    return {p_ok && z_ok && min_p == 1.0 / 101.0,
            fmt::format("p(0.37) = 5/11: {}, z = {:.6f}, minimum p = {}", p_ok, z, min_p)};
}

Outcome statistical_level() {
    constexpr int kTrials = 200;
    int rejections = 0;
    const RngStream root(1111);
    for (int t = 0; t < kTrials; ++t) {
        auto rng = root.substream(static_cast<std::uint64_t>(t));
        const auto ds = gen_gaussian(60, {1.0, 1.0}, rng);
        SigClustConfig cfg;
        cfg.n_sims = 200;
        cfg.seed = 100000 + static_cast<std::uint64_t>(t);
        rejections += test_exploratory(ds.data, 0.5, cfg).rejects(0.05) ? 1 : 0;
    }
    const double rate = static_cast<double>(rejections) / kTrials;
    return {rate >= 0.01 && rate <= 0.12, fmt::format("rejection rate {}/{} = {:.3f}", rejections, kTrials, rate)};
}

Outcome performance() {
    RngStream rng(1212);
    const auto big = oracle::random_data(5000, 5, rng);
    const auto dist = pairwise_sq_distances(big);
    const auto r = distances_to_mean(big);
    const auto order = pc_ordering(pca(big, 1), 0);
    auto t0 = Clock::now();
    const auto values = scan_pc_fast(dist, r, order, 0.5);
    const double scan_secs = seconds_since(t0);

    const auto data = oracle::random_data(200, 50, rng);
    SigClustConfig cfg;
    cfg.n_sims = 1000;
    cfg.num_pcs = 3;
    cfg.seed = 12;
    t0 = Clock::now();
    const auto res = test_exploratory(data, 0.5, cfg);
    const double test_secs = seconds_since(t0);
    return {values.size() == 4999 && scan_secs < 1.0 && res.null->values.size() == 1000 && test_secs < 120.0,
            fmt::format("fast scan n=5000: {:.3f} s; exploratory test n=200 d=50 1000 sims: {:.1f} s", scan_secs,
                        test_secs)};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"fast scan equals direct evaluation", oracle_equivalence},
        {"scan and 2-means against exhaustive search", exhaustive_search},
        {"CI property for CI and WCI", ci_property_suite},
        {"within-SS pairwise identity", pairwise_identity},
        {"WCI reduces to CI", reductions},
        {"hotdog-plus-outliers reproduction", hotdog_reproduction},
        {"round clusters reproduction", round_reproduction},
        {"wishbone reproduction", wishbone_reproduction},
        {"power pattern across g", power_pattern},
        {"p-value and z-score arithmetic", test_arithmetic},
        {"level on Gaussian data", statistical_level},
        {"performance", performance},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, fmt::format("exception: {}", e.what())};
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s [%2zu] %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
