#ifndef WSIGCLUST_REPORT_HPP
#define WSIGCLUST_REPORT_HPP

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "wsigclust/plot.hpp"
#include "wsigclust/sigclust.hpp"
#include "wsigclust/synthdata.hpp"

namespace wsigclust {

inline constexpr const char* kReportSchemaVersion = "1";

/// Printed with every confirmatory result.
inline constexpr const char* kConfirmatoryCaveat =
    "Confirmatory mode: the candidate labels were not produced by the optimizer used for the null "
    "simulation, so the p-value is exact only if that optimizer could have generated them.";

/// A number, or the strings "inf" / "-inf" / "nan" for values JSON cannot hold.
nlohmann::json json_number(double v);

/**
 * Structured test report: statistic, p, z, g, mode, optimizer, n_sims, seed,
 * eigenvalue method and values, and the full null sample.
 */
nlohmann::json report_json(const TestResult& result);

nlohmann::json null_json(const NullDistribution& null);

nlohmann::json recipe_json(const Recipe& recipe);

/// Rows `kind,index,value,cluster_size`: one `null` row per simulation, then a `statistic` marker row.
std::string null_sample_csv(const TestResult& result);

/// Null histogram with the sample statistic as a vertical line, annotated with z and p.
std::string diagnostic_svg(const TestResult& result, std::span<const Marker> extra_markers = {});

} // namespace wsigclust

#endif
