#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <wsigclust/core.hpp>
#include <wsigclust/criteria.hpp>
#include <wsigclust/experiments.hpp>
#include <wsigclust/io.hpp>
#include <wsigclust/kmeans.hpp>
#include <wsigclust/plot.hpp>
#include <wsigclust/report.hpp>
#include <wsigclust/synthdata.hpp>
#include <wsigclust/wci_opt.hpp>

namespace wsigclust::cli {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("write failed for '" + path.string() + "'");
    }
}

std::string dump(const nlohmann::json& j) {
    return j.dump(2) + "\n";
}

std::string fmt_z(double z) {
    if (std::isinf(z)) {
        return z > 0 ? "inf" : "-inf";
    }
    return fmt::format("{:.3f}", z);
}

bool wants(const std::vector<std::string>& formats, const std::string& f) {
    return std::find(formats.begin(), formats.end(), f) != formats.end();
}

void require_nondegenerate(const DataMatrix& data) {
    if (data.all_rows_identical()) {
        throw DegenerateDataError("all observations are identical; the total sum of squares is zero");
    }
}

/// Maps library exceptions onto the documented exit codes.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const DegenerateDataError& e) {
        err << "error: degenerate data: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

std::vector<std::size_t> sizes_of(const NullDistribution& null) {
    return null.cluster_sizes;
}

} // namespace

fs::path default_output_dir() {
    if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
        return fs::path(env);
    }
    return fs::path(".");
}

std::string g_tag(double g) {
    return "g" + format_double(g);
}

void RunConfig::validate() const {
    if (mode == ModeChoice::kConfirmatory && !labels) {
        throw UsageError("confirmatory mode requires --labels");
    }
    if (mode == ModeChoice::kExploratory && labels) {
        throw UsageError("exploratory mode does not take --labels");
    }
    if (g_list.empty()) {
        throw UsageError("--g needs at least one value");
    }
    for (double g : g_list) {
        if (!(g >= 0.0) || !std::isfinite(g)) {
            throw UsageError(fmt::format("g must be a finite nonnegative number, got {}", g));
        }
    }
    if (n_sims < 1) {
        throw UsageError("--sims must be at least 1");
    }
    if (num_pcs < 1) {
        throw UsageError("--pcs must be at least 1");
    }
    for (const auto& f : formats) {
        if (f != "json" && f != "csv" && f != "svg") {
            throw UsageError("unknown output format '" + f + "' (expected json, csv or svg)");
        }
    }
}

SigClustConfig RunConfig::sigclust_config() const {
    SigClustConfig c;
    c.n_sims = n_sims;
    c.num_pcs = num_pcs;
    c.eigen_method = eigen_method;
    c.optimizer = optimizer;
    c.kmeans.restarts = restarts;
    c.seed = seed;
    c.threads = threads;
    return c;
}

int cmd_test(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        config.validate();
        const DataMatrix data = read_csv(config.input, config.header);
        require_nondegenerate(data);
        std::optional<Partition> labels;
        if (config.labels) {
            labels = read_labels(*config.labels, data.n());
        }
        const SigClustConfig sc = config.sigclust_config();
        const std::string source = config.label_source.empty() ? "user-supplied labels" : config.label_source;

        std::vector<TestResult> results;
        for (double g : config.g_list) {
            results.push_back(labels ? test_confirmatory(data, *labels, g, sc, source) : test_exploratory(data, g, sc));
        }
        std::size_t best = 0;
        for (std::size_t i = 1; i < results.size(); ++i) {
            if (results[i].z_score < results[best].z_score) {
                best = i;
            }
        }

        fs::create_directories(config.out_dir);
        for (const auto& r : results) {
            const std::string tag = g_tag(r.statistic.g);
            if (wants(config.formats, "json")) {
                write_file(config.out_dir / ("report_" + tag + ".json"), dump(report_json(r)));
            }
            if (wants(config.formats, "csv")) {
                write_file(config.out_dir / ("null_" + tag + ".csv"), null_sample_csv(r));
            }
            if (wants(config.formats, "svg")) {
                write_file(config.out_dir / ("diagnostic_" + tag + ".svg"), diagnostic_svg(r));
            }
        }

        const auto& first = results.front();
        out << fmt::format("{} test: n = {}, d = {}, {} simulations, seed {}, eigenvalues {}\n",
                           to_string(first.mode), data.n(), data.d(), sc.n_sims, sc.seed,
                           to_string(sc.eigen_method));
        out << fmt::format("labels: {}\n", first.label_source);
        out << fmt::format("{:>8}  {:<16} {:>10} {:>9} {:>9} {:>9}\n", "g", "optimizer", "statistic", "z", "p",
                           "sizes");
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            const std::string sizes =
                r.labels ? fmt::format("{}/{}", r.labels->size1(), r.labels->size2()) : std::string("-");
            out << fmt::format("{:>8}  {:<16} {:>10.5f} {:>9} {:>9.4f} {:>9}{}\n", format_double(r.statistic.g),
                               to_string(r.optimizer), r.statistic.value, fmt_z(r.z_score), r.p_empirical, sizes,
                               i == best ? "  <- best" : "");
        }
        if (first.mode == TestMode::kConfirmatory) {
            out << "note: " << kConfirmatoryCaveat << '\n';
        }
        out << "reports written to " << config.out_dir.string() << '\n';
        return static_cast<int>(kExitOk);
    });
}

int cmd_cluster(const ClusterConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (!(config.g >= 0.0) || !std::isfinite(config.g)) {
            throw UsageError("g must be a finite nonnegative number");
        }
        const DataMatrix data = read_csv(config.input, config.header);
        require_nondegenerate(data);
        const Optimizer opt = resolve_optimizer(config.optimizer, config.g);
        nlohmann::json j;
        j["schema_version"] = kReportSchemaVersion;
        j["g"] = config.g;
        j["optimizer"] = to_string(opt);
        std::optional<Partition> part;
        CriterionValue value;
        if (opt == Optimizer::kTwoMeans) {
            // Same stream as the exploratory test uses for the sample, so both commands agree.
            const auto km = two_means(data, KMeansOptions{config.restarts, 300, config.threads},
                                      RngStream(config.seed).substream(2));
            part = km.partition;
            value = config.g == 0.0 ? km.ci : weighted_cluster_index(data, km.partition, config.g);
            j["restarts"] = config.restarts;
            j["seed"] = config.seed;
        } else {
            const auto scan = minimize_wci(data, config.g, config.num_pcs);
            part = scan.best_partition;
            value = scan.best_wci;
            j["num_pcs"] = std::min(config.num_pcs, std::min(data.n() - 1, data.d()));
            j["best_pc"] = scan.best_pc;
            j["best_split"] = scan.best_split;
        }
        j["criterion"] = value.value;
        j["cluster_sizes"] = {part->size1(), part->size2()};

        const std::string tag = g_tag(config.g);
        std::ostringstream labels_text;
        write_labels(labels_text, *part);
        write_file(config.out_dir / ("labels_" + tag + ".txt"), labels_text.str());
        write_file(config.out_dir / ("cluster_" + tag + ".json"), dump(j));
        out << fmt::format("{} at g = {}: criterion {:.6f}, cluster sizes {}/{}\n", to_string(opt),
                           format_double(config.g), value.value, part->size1(), part->size2());
        out << "labels written to " << (config.out_dir / ("labels_" + tag + ".txt")).string() << '\n';
        return static_cast<int>(kExitOk);
    });
}

int cmd_generate(const GenerateConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        RngStream rng(config.seed);
        std::optional<SyntheticDataset> ds;
        if (config.generator == "hotdog") {
            ds = gen_hotdog_plus_outliers(rng);
        } else if (config.generator == "round") {
            ds = gen_round_clusters(rng);
        } else if (config.generator == "gaussian") {
            ds = gen_gaussian(config.n, config.eigenvalues, rng);
        } else {
            throw UsageError("unknown generator '" + config.generator + "' (expected hotdog, round or gaussian)");
        }
        const std::string prefix = config.prefix.empty() ? config.generator + "_" : config.prefix;
        std::ostringstream data_text;
        write_csv(data_text, ds->data.values());
        std::ostringstream labels_text;
        write_labels(labels_text, ds->true_labels);
        nlohmann::json recipe = recipe_json(ds->recipe);
        recipe["labels_informative"] = ds->labels_informative;
        write_file(config.out_dir / (prefix + "data.csv"), data_text.str());
        write_file(config.out_dir / (prefix + "labels.txt"), labels_text.str());
        write_file(config.out_dir / (prefix + "recipe.json"), dump(recipe));
        out << fmt::format("{}: n = {}, d = {}, seed {} -> {}\n", ds->recipe.name, ds->data.n(), ds->data.d(),
                           config.seed, (config.out_dir / (prefix + "data.csv")).string());
        return static_cast<int>(kExitOk);
    });
}

int cmd_wishbone(const WishboneConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const std::vector<double> grid = config.g_grid.empty() ? default_wishbone_g_grid() : config.g_grid;
        if (config.n < 2 || config.reps < 1 || config.dims.empty()) {
            throw UsageError("wishbone needs n >= 2, reps >= 1 and at least one dimension");
        }
        const RngStream root(config.seed);
        out << fmt::format("wishbone: n = {}, {} replicates, {} g values, seed {}\n", config.n, config.reps,
                           grid.size(), config.seed);
        out << fmt::format("{:>6} {:>10} {:>10} {:>12} {:>12}\n", "d", "widest g", "IQR", "bal@first", "ext@last");
        for (std::size_t d : config.dims) {
            const WishboneRun run = run_wishbone(d, config.n, grid, config.reps, config.num_pcs, root.substream(d),
                                                 config.threads);
            std::string csv = "d,n,g,rep,size\n";
            std::vector<double> xs;
            std::vector<double> ys;
            for (std::size_t rep = 0; rep < run.reps; ++rep) {
                for (std::size_t gi = 0; gi < grid.size(); ++gi) {
                    const std::size_t s = run.sizes[rep][gi];
                    csv += fmt::format("{},{},{},{},{}\n", d, config.n, format_double(grid[gi]), rep, s);
                    xs.push_back(grid[gi]);
                    ys.push_back(static_cast<double>(s));
                }
            }
            write_file(config.out_dir / fmt::format("wishbone_d{}.csv", d), csv);
            write_file(config.out_dir / fmt::format("wishbone_d{}.svg", d),
                       svg_scatter(xs, ys, fmt::format("Cluster sizes, d = {}, n = {}", d, config.n), "g",
                                   "cluster size"));
            const std::size_t widest = widest_spread_index(run);
            const auto first = run.sizes_at(0);
            const auto last = run.sizes_at(grid.size() - 1);
            const double n = static_cast<double>(config.n);
            out << fmt::format("{:>6} {:>10} {:>10.1f} {:>12.3f} {:>12.3f}\n", d, format_double(grid[widest]),
                               interquartile_range(run.sizes_at(widest)),
                               fraction_in_range(first, n / 4.0, 3.0 * n / 4.0),
                               fraction_extreme(last, config.n, n / 10.0));
        }
        out << "bal@first: share of sizes in [n/4, 3n/4] at the first g; ext@last: share with min(size, n - size) "
               "<= n/10 at the last g\n";
        return static_cast<int>(kExitOk);
    });
}

int cmd_power(const PowerConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::optional<DataMatrix> data;
        std::optional<Partition> labels;
        std::string source;
        if (config.input.empty()) {
            if (config.labels) {
                throw UsageError("--labels requires --input");
            }
            RngStream rng(config.data_seed);
            auto ds = gen_hotdog_plus_outliers(rng);
            data = ds.data;
            labels = ds.true_labels;
            source = fmt::format("generated hotdog-plus-outliers data, seed {}", config.data_seed);
        } else {
            if (!config.labels) {
                throw UsageError("power analysis on --input data requires --labels");
            }
            data = read_csv(config.input, config.header);
            require_nondegenerate(*data);
            labels = read_labels(*config.labels, data->n());
            source = config.input.string();
        }
        SigClustConfig sc;
        sc.n_sims = config.n_sims;
        sc.num_pcs = config.num_pcs;
        sc.eigen_method = config.eigen_method;
        sc.kmeans.restarts = config.restarts;
        sc.seed = config.seed;
        sc.threads = config.threads;
        const PowerRun run = run_power_analysis(*data, *labels, config.g_grid, sc);
        const std::size_t n = data->n();
        const double nd = static_cast<double>(n);

        std::string summary =
            "g,statistic,z_score,p_empirical,chi_square,dof,impartiality_p,tv_distance,balanced_fraction,"
            "extreme_fraction\n";
        std::string sizes_csv = "g,size,count\n";
        out << fmt::format("power analysis: {} ({} simulations per g, seed {})\n", source, config.n_sims,
                           config.seed);
        out << fmt::format("{:>6} {:>10} {:>9} {:>9} {:>8} {:>9} {:>9}\n", "g", "statistic", "z", "p", "TV",
                           "balanced", "extreme");
        for (std::size_t gi = 0; gi < run.g_grid.size(); ++gi) {
            const auto& r = run.results[gi];
            const auto sizes = sizes_of(*r.null);
            const double bal = fraction_in_range(sizes, nd / 3.0, 2.0 * nd / 3.0);
            const double ext = fraction_extreme(sizes, n, nd / 10.0);
            const auto& imp = run.impartiality[gi];
            summary += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", format_double(run.g_grid[gi]),
                                   format_double(r.statistic.value), fmt_z(r.z_score), format_double(r.p_empirical),
                                   format_double(imp.chi_square), imp.dof, format_double(imp.p_value),
                                   format_double(imp.tv_distance), format_double(bal), format_double(ext));
            for (std::size_t s = 0; s < run.histograms[gi].size(); ++s) {
                sizes_csv += fmt::format("{},{},{}\n", format_double(run.g_grid[gi]), s + 1, run.histograms[gi][s]);
            }
            const std::string tag = g_tag(run.g_grid[gi]);
            write_file(config.out_dir / ("power_diagnostic_" + tag + ".svg"), diagnostic_svg(r));
            write_file(config.out_dir / ("power_sizes_" + tag + ".svg"),
                       svg_count_bars(run.histograms[gi],
                                      fmt::format("Null cluster sizes, g = {}", format_double(run.g_grid[gi])),
                                      "cluster size"));
            out << fmt::format("{:>6} {:>10.5f} {:>9} {:>9.4f} {:>8.3f} {:>9.2f} {:>9.2f}\n",
                               format_double(run.g_grid[gi]), r.statistic.value, fmt_z(r.z_score), r.p_empirical,
                               imp.tv_distance, bal, ext);
        }
        write_file(config.out_dir / "power.csv", summary);
        write_file(config.out_dir / "power_sizes.csv", sizes_csv);
        out << fmt::format("correlation(TV distance, |z|) across g: {:.3f}\n", run.tv_abs_z_correlation);
        out << "balanced: share of null sizes in [n/3, 2n/3]; extreme: share with min(size, n - size) <= n/10\n";
        return static_cast<int>(kExitOk);
    });
}

int cmd_nullsim(const NullSimConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (!(config.g >= 0.0) || !std::isfinite(config.g)) {
            throw UsageError("g must be a finite nonnegative number");
        }
        EigenvalueEstimate eig;
        std::size_t n = config.n;
        if (!config.input.empty()) {
            if (!config.eigenvalues.empty()) {
                throw UsageError("give either --input or --eigenvalues, not both");
            }
            const DataMatrix data = read_csv(config.input, config.header);
            require_nondegenerate(data);
            eig = estimate_null_eigenvalues(data, config.eigen_method);
            if (n == 0) {
                n = data.n();
            }
        } else {
            if (config.eigenvalues.empty() || n < 2) {
                throw UsageError("without --input, nullsim needs --eigenvalues and --n >= 2");
            }
            std::vector<double> sorted = config.eigenvalues;
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            eig.lambdas = Eigen::Map<const Eigen::VectorXd>(sorted.data(), static_cast<Eigen::Index>(sorted.size()));
        }
        SigClustConfig sc;
        sc.n_sims = config.n_sims;
        sc.num_pcs = config.num_pcs;
        sc.eigen_method = eig.method;
        sc.optimizer = config.optimizer;
        sc.kmeans.restarts = config.restarts;
        sc.seed = config.seed;
        sc.threads = config.threads;
        // Same stream the test commands use for their null sample.
        const NullDistribution null = simulate_null(n, eig, config.g, sc, RngStream(config.seed).substream(1));

        const std::string tag = g_tag(config.g);
        nlohmann::json j = null_json(null);
        j["schema_version"] = kReportSchemaVersion;
        write_file(config.out_dir / ("nullsim_" + tag + ".json"), dump(j));
        std::string csv = "index,value,cluster_size\n";
        for (std::size_t i = 0; i < null.values.size(); ++i) {
            csv += fmt::format("{},{},{}\n", i, format_double(null.values[i]), null.cluster_sizes[i]);
        }
        write_file(config.out_dir / ("nullsim_" + tag + ".csv"), csv);
        write_file(config.out_dir / ("nullsim_" + tag + ".svg"),
                   svg_histogram(null.values, {},
                                 fmt::format("Null distribution, g = {}, {} simulations", format_double(config.g),
                                             null.values.size()),
                                 config.g == 0.0 ? "cluster index" : "weighted cluster index"));
        std::vector<double> v = null.values;
        std::sort(v.begin(), v.end());
        out << fmt::format("null at g = {} ({}, n = {}, {} simulations, seed {})\n", format_double(config.g),
                           to_string(null.optimizer), n, v.size(), config.seed);
        out << fmt::format("mean {:.5f}  sd {:.5f}  min {:.5f}  median {:.5f}  max {:.5f}\n", null.mean(), null.sd(),
                           v.front(), v[v.size() / 2], v.back());
        return static_cast<int>(kExitOk);
    });
}

namespace {

EigenMethod eigen_from(const std::string& s) {
    try {
        return parse_eigen_method(s);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

Optimizer optimizer_from(const std::string& s) {
    try {
        return parse_optimizer(s);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

std::string default_out_text() {
    return fmt::format("output directory (default: ${} or the working directory)", kOutputDirEnv);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted SigClust: significance testing of two-cluster structure with size-weighted cluster "
                 "indices"};
    app.name("wsigclust");
    app.require_subcommand(1);
    app.set_version_flag("--version", "wsigclust 0.1.0");

    std::string out_dir;
    std::string eigen = "sample";
    std::string optimizer = "auto";

    // test
    RunConfig tc;
    std::string mode = "auto";
    bool full = false;
    std::string labels_path;
    auto* test = app.add_subcommand("test", "Test a dataset for two-cluster structure at each g");
    test->add_option("--input,-i", tc.input, "data CSV, one observation per row")->required();
    test->add_flag("--header", tc.header, "skip the first nonblank line of the CSV");
    test->add_option("--labels,-l", labels_path, "candidate labels (one 0/1 per line); implies confirmatory mode");
    test->add_option("--label-source", tc.label_source, "provenance text stored with confirmatory results");
    test->add_option("--g", tc.g_list, "comma-separated exponents")->delimiter(',')->capture_default_str();
    test->add_option("--mode", mode, "auto, exploratory or confirmatory")
        ->check(CLI::IsMember({"auto", "exploratory", "confirmatory"}))
        ->capture_default_str();
    test->add_option("--sims", tc.n_sims, fmt::format("null simulations (default {}; {} with --full)", kQuickSims,
                                                      kFullSims));
    test->add_flag("--full", full, fmt::format("use {} simulations unless --sims is given", kFullSims));
    test->add_option("--pcs", tc.num_pcs, "principal components searched by the hyperplane scan")
        ->capture_default_str();
    test->add_option("--eigen", eigen, "null eigenvalue method: sample, hard or soft")->capture_default_str();
    test->add_option("--optimizer", optimizer, "auto (2-means at g = 0, hyperplane scan otherwise), two-means or "
                                               "hyperplane-scan")
        ->capture_default_str();
    test->add_option("--restarts", tc.restarts, "2-means restarts")->capture_default_str();
    test->add_option("--threads", tc.threads, "worker threads, 0 = all cores")->capture_default_str();
    test->add_option("--seed", tc.seed, "random seed")->capture_default_str();
    test->add_option("--out,-o", out_dir, default_out_text());
    test->add_option("--formats", tc.formats, "outputs to write: json, csv, svg")
        ->delimiter(',')
        ->capture_default_str();

    // cluster
    ClusterConfig cc;
    auto* cluster = app.add_subcommand("cluster", "Cluster a dataset into two groups and write the labels");
    cluster->add_option("--input,-i", cc.input, "data CSV")->required();
    cluster->add_flag("--header", cc.header, "skip the first nonblank line of the CSV");
    cluster->add_option("--g", cc.g, "exponent")->capture_default_str();
    cluster->add_option("--optimizer", optimizer, "auto, two-means or hyperplane-scan")->capture_default_str();
    cluster->add_option("--pcs", cc.num_pcs, "principal components searched")->capture_default_str();
    cluster->add_option("--restarts", cc.restarts, "2-means restarts")->capture_default_str();
    cluster->add_option("--threads", cc.threads, "worker threads, 0 = all cores")->capture_default_str();
    cluster->add_option("--seed", cc.seed, "random seed")->capture_default_str();
    cluster->add_option("--out,-o", out_dir, default_out_text());

    // generate
    GenerateConfig gc;
    auto* generate = app.add_subcommand("generate", "Write a synthetic dataset, its labels and its recipe");
    generate->add_option("generator", gc.generator, "hotdog, round or gaussian")
        ->check(CLI::IsMember({"hotdog", "round", "gaussian"}))
        ->capture_default_str();
    generate->add_option("--seed", gc.seed, "random seed")->capture_default_str();
    generate->add_option("--n", gc.n, "observations (gaussian only)")->capture_default_str();
    generate->add_option("--eigenvalues", gc.eigenvalues, "covariance eigenvalues (gaussian only)")
        ->delimiter(',')
        ->capture_default_str();
    generate->add_option("--prefix", gc.prefix, "file name prefix (default: <generator>_)");
    generate->add_option("--out,-o", out_dir, default_out_text());

    // wishbone
    WishboneConfig wc;
    auto* wishbone = app.add_subcommand("wishbone", "Cluster sizes chosen across g on standard Gaussian samples");
    wishbone->add_option("--dims", wc.dims, "dimensions")->delimiter(',')->capture_default_str();
    wishbone->add_option("--n", wc.n, "sample size")->capture_default_str();
    wishbone->add_option("--reps", wc.reps, "replicates per dimension")->capture_default_str();
    wishbone->add_option("--g", wc.g_grid, "exponents (default: 0 to 1 in steps of 0.05)")->delimiter(',');
    wishbone->add_option("--pcs", wc.num_pcs, "principal components searched")->capture_default_str();
    wishbone->add_option("--threads", wc.threads, "worker threads, 0 = all cores")->capture_default_str();
    wishbone->add_option("--seed", wc.seed, "random seed")->capture_default_str();
    wishbone->add_option("--out,-o", out_dir, default_out_text());

    // power
    PowerConfig pc;
    bool power_full = false;
    auto* power = app.add_subcommand("power", "Confirmatory test across a g grid with null cluster-size histograms");
    power->add_option("--input,-i", pc.input, "data CSV (default: generated hotdog-plus-outliers data)");
    power->add_flag("--header", pc.header, "skip the first nonblank line of the CSV");
    power->add_option("--labels,-l", labels_path, "candidate labels, required with --input");
    power->add_option("--data-seed", pc.data_seed, "seed of the generated dataset")->capture_default_str();
    power->add_option("--g", pc.g_grid, "exponents")->delimiter(',')->capture_default_str();
    power->add_option("--sims", pc.n_sims, fmt::format("null simulations per g (default {}; {} with --full)",
                                                       kQuickSims, kFullSims));
    power->add_flag("--full", power_full, fmt::format("use {} simulations unless --sims is given", kFullSims));
    power->add_option("--pcs", pc.num_pcs, "principal components searched")->capture_default_str();
    power->add_option("--eigen", eigen, "null eigenvalue method: sample, hard or soft")->capture_default_str();
    power->add_option("--restarts", pc.restarts, "2-means restarts")->capture_default_str();
    power->add_option("--threads", pc.threads, "worker threads, 0 = all cores")->capture_default_str();
    power->add_option("--seed", pc.seed, "random seed")->capture_default_str();
    power->add_option("--out,-o", out_dir, default_out_text());

    // nullsim
    NullSimConfig nc;
    bool null_full = false;
    auto* nullsim = app.add_subcommand("nullsim", "Simulate the null distribution of the minimized criterion");
    nullsim->add_option("--input,-i", nc.input, "data CSV whose eigenvalues define the null");
    nullsim->add_flag("--header", nc.header, "skip the first nonblank line of the CSV");
    nullsim->add_option("--eigenvalues", nc.eigenvalues, "explicit null eigenvalues instead of --input")
        ->delimiter(',');
    nullsim->add_option("--n", nc.n, "observations per simulated dataset (default: rows of --input)");
    nullsim->add_option("--g", nc.g, "exponent")->capture_default_str();
    nullsim->add_option("--sims", nc.n_sims, fmt::format("simulations (default {}; {} with --full)", kQuickSims,
                                                         kFullSims));
    nullsim->add_flag("--full", null_full, fmt::format("use {} simulations unless --sims is given", kFullSims));
    nullsim->add_option("--pcs", nc.num_pcs, "principal components searched")->capture_default_str();
    nullsim->add_option("--eigen", eigen, "eigenvalue method for --input: sample, hard or soft")
        ->capture_default_str();
    nullsim->add_option("--optimizer", optimizer, "auto, two-means or hyperplane-scan")->capture_default_str();
    nullsim->add_option("--restarts", nc.restarts, "2-means restarts")->capture_default_str();
    nullsim->add_option("--threads", nc.threads, "worker threads, 0 = all cores")->capture_default_str();
    nullsim->add_option("--seed", nc.seed, "random seed")->capture_default_str();
    nullsim->add_option("--out,-o", out_dir, default_out_text());

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    const fs::path resolved_out = out_dir.empty() ? default_output_dir() : fs::path(out_dir);
    try {
        if (test->parsed()) {
            tc.out_dir = resolved_out;
            tc.eigen_method = eigen_from(eigen);
            tc.optimizer = optimizer_from(optimizer);
            if (!labels_path.empty()) {
                tc.labels = labels_path;
            }
            tc.mode = mode == "exploratory"    ? ModeChoice::kExploratory
                      : mode == "confirmatory" ? ModeChoice::kConfirmatory
                                               : ModeChoice::kAuto;
            if (full && test->count("--sims") == 0) {
                tc.n_sims = kFullSims;
            }
            return cmd_test(tc, out, err);
        }
        if (cluster->parsed()) {
            cc.out_dir = resolved_out;
            cc.optimizer = optimizer_from(optimizer);
            return cmd_cluster(cc, out, err);
        }
        if (generate->parsed()) {
            gc.out_dir = resolved_out;
            return cmd_generate(gc, out, err);
        }
        if (wishbone->parsed()) {
            wc.out_dir = resolved_out;
            return cmd_wishbone(wc, out, err);
        }
        if (power->parsed()) {
            pc.out_dir = resolved_out;
            pc.eigen_method = eigen_from(eigen);
            if (!labels_path.empty()) {
                pc.labels = labels_path;
            }
            if (power_full && power->count("--sims") == 0) {
                pc.n_sims = kFullSims;
            }
            return cmd_power(pc, out, err);
        }
        if (nullsim->parsed()) {
            nc.out_dir = resolved_out;
            nc.eigen_method = eigen_from(eigen);
            nc.optimizer = optimizer_from(optimizer);
            if (null_full && nullsim->count("--sims") == 0) {
                nc.n_sims = kFullSims;
            }
            return cmd_nullsim(nc, out, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace wsigclust::cli
