#include "wsigclust/report.hpp"

#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "wsigclust/io.hpp"

namespace wsigclust {

nlohmann::json json_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return v;
}

nlohmann::json null_json(const NullDistribution& null) {
    return {
        {"n_sims", null.values.size()},
        {"n", null.n},
        {"g", null.g},
        {"seed", null.seed},
        {"optimizer", to_string(null.optimizer)},
        {"num_pcs", null.num_pcs},
        {"eigenvalue_method", to_string(null.eigen_method)},
        {"eigenvalues", std::vector<double>(null.eigenvalues.data(), null.eigenvalues.data() + null.eigenvalues.size())},
        {"mean", json_number(null.mean())},
        {"sd", json_number(null.sd())},
        {"values", null.values},
        {"cluster_sizes", null.cluster_sizes},
    };
}

nlohmann::json report_json(const TestResult& result) {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["mode"] = to_string(result.mode);
    j["g"] = result.statistic.g;
    j["optimizer"] = to_string(result.optimizer);
    j["statistic"] = {
        {"value", result.statistic.value},
        {"numerator", result.statistic.numerator},
        {"denominator", result.statistic.denominator},
    };
    j["p_empirical"] = result.p_empirical;
    j["z_score"] = json_number(result.z_score);
    j["z_degenerate"] = result.z_degenerate;
    j["label_source"] = result.label_source;
    if (result.labels) {
        j["cluster_sizes"] = {result.labels->size1(), result.labels->size2()};
    }
    if (result.mode == TestMode::kConfirmatory) {
        j["caveat"] = kConfirmatoryCaveat;
    }
    if (result.null) {
        j["n_sims"] = result.null->values.size();
        j["seed"] = result.null->seed;
        j["eigenvalue_method"] = to_string(result.null->eigen_method);
        j["null"] = null_json(*result.null);
    }
    return j;
}

nlohmann::json recipe_json(const Recipe& recipe) {
    return {
        {"schema_version", kReportSchemaVersion},
        {"generator", recipe.name},
        {"params", recipe.params},
        {"seed", recipe.seed},
        {"stream_id", recipe.stream_id},
    };
}

std::string null_sample_csv(const TestResult& result) {
    std::string out = "kind,index,value,cluster_size\n";
    if (result.null) {
        const auto& null = *result.null;
        for (std::size_t i = 0; i < null.values.size(); ++i) {
            out += fmt::format("null,{},{},{}\n", i, format_double(null.values[i]), null.cluster_sizes[i]);
        }
    }
    out += fmt::format("statistic,0,{},\n", format_double(result.statistic.value));
    return out;
}

std::string diagnostic_svg(const TestResult& result, std::span<const Marker> extra_markers) {
    if (!result.null) {
        throw std::invalid_argument("diagnostic_svg: result has no null distribution");
    }
    std::vector<Marker> markers;
    markers.push_back(Marker{result.statistic.value,
                             fmt::format("{} = {:.4f}, z = {:.2f}, p = {:.4f}",
                                         result.statistic.g == 0.0 ? "CI" : "WCI", result.statistic.value,
                                         result.z_score, result.p_empirical),
                             "#d62728"});
    markers.insert(markers.end(), extra_markers.begin(), extra_markers.end());
    const std::string title = fmt::format("{} test, g = {}, {} simulations", to_string(result.mode),
                                          format_double(result.statistic.g), result.null->values.size());
    return svg_histogram(result.null->values, markers, title,
                         result.statistic.g == 0.0 ? "cluster index" : "weighted cluster index");
}

} // namespace wsigclust
