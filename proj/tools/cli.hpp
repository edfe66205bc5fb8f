#ifndef WSIGCLUST_TOOLS_CLI_HPP
#define WSIGCLUST_TOOLS_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <wsigclust/linalg.hpp>
#include <wsigclust/sigclust.hpp>

namespace wsigclust::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitBadInput = 2,
    kExitDegenerate = 3,
};

/// Inconsistent command-line configuration (exit code 1).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kQuickSims = 100;
inline constexpr std::size_t kFullSims = 1000;
inline constexpr const char* kOutputDirEnv = "WSIGCLUST_OUTPUT_DIR";

/// `--out` if given, else $WSIGCLUST_OUTPUT_DIR, else the working directory.
std::filesystem::path default_output_dir();

enum class ModeChoice { kAuto, kExploratory, kConfirmatory };

struct RunConfig {
    std::filesystem::path input;
    bool header = false;
    std::optional<std::filesystem::path> labels;
    std::string label_source;
    std::vector<double> g_list{0.0, 0.25, 0.5};
    /// kAuto: confirmatory when labels are given, exploratory otherwise.
    ModeChoice mode = ModeChoice::kAuto;
    std::size_t n_sims = kQuickSims;
    std::size_t num_pcs = 3;
    EigenMethod eigen_method = EigenMethod::kSample;
    Optimizer optimizer = Optimizer::kAuto;
    std::size_t restarts = 20;
    unsigned threads = 0;
    std::uint64_t seed = 0;
    std::filesystem::path out_dir = ".";
    /// Subset of {"json", "csv", "svg"}.
    std::vector<std::string> formats{"json", "csv", "svg"};

    /// Throws UsageError when the mode and labels disagree or a value is out of range.
    void validate() const;
    [[nodiscard]] SigClustConfig sigclust_config() const;
};

struct ClusterConfig {
    std::filesystem::path input;
    bool header = false;
    double g = 0.5;
    Optimizer optimizer = Optimizer::kAuto;
    std::size_t num_pcs = 3;
    std::size_t restarts = 20;
    unsigned threads = 0;
    std::uint64_t seed = 0;
    std::filesystem::path out_dir = ".";
};

struct GenerateConfig {
    /// "hotdog", "round" or "gaussian".
    std::string generator = "hotdog";
    std::uint64_t seed = 0;
    /// Gaussian generator only.
    std::size_t n = 100;
    std::vector<double> eigenvalues{1.0, 1.0};
    std::filesystem::path out_dir = ".";
    std::string prefix;
};

struct WishboneConfig {
    std::vector<std::size_t> dims{1, 4, 32, 100, 150};
    std::size_t n = 100;
    std::size_t reps = 150;
    std::vector<double> g_grid;
    std::size_t num_pcs = 3;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::filesystem::path out_dir = ".";
};

struct PowerConfig {
    /// Empty: use a generated hotdog dataset with `data_seed`.
    std::filesystem::path input;
    bool header = false;
    std::optional<std::filesystem::path> labels;
    std::uint64_t data_seed = 0;
    std::vector<double> g_grid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
    std::size_t n_sims = kQuickSims;
    std::size_t num_pcs = 3;
    EigenMethod eigen_method = EigenMethod::kSample;
    std::size_t restarts = 20;
    unsigned threads = 0;
    std::uint64_t seed = 0;
    std::filesystem::path out_dir = ".";
};

struct NullSimConfig {
    /// Either an input file (eigenvalues estimated from it) or explicit `eigenvalues` plus `n`.
    std::filesystem::path input;
    bool header = false;
    std::vector<double> eigenvalues;
    std::size_t n = 0;
    double g = 0.5;
    std::size_t n_sims = kQuickSims;
    std::size_t num_pcs = 3;
    EigenMethod eigen_method = EigenMethod::kSample;
    Optimizer optimizer = Optimizer::kAuto;
    std::size_t restarts = 20;
    unsigned threads = 0;
    std::uint64_t seed = 0;
    std::filesystem::path out_dir = ".";
};

/// File stem fragment for an exponent, e.g. 0.25 -> "g0.25".
std::string g_tag(double g);

int cmd_test(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_cluster(const ClusterConfig& config, std::ostream& out, std::ostream& err);
int cmd_generate(const GenerateConfig& config, std::ostream& out, std::ostream& err);
int cmd_wishbone(const WishboneConfig& config, std::ostream& out, std::ostream& err);
int cmd_power(const PowerConfig& config, std::ostream& out, std::ostream& err);
int cmd_nullsim(const NullSimConfig& config, std::ostream& out, std::ostream& err);

/// Parse arguments and dispatch to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace wsigclust::cli

#endif
