#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include <wsigclust/io.hpp>
#include <wsigclust/report.hpp>

using namespace wsigclust;

TEST(ReadCsv, ParsesWithHeaderAndBlankLines) {
    std::istringstream in("x,y\n\n1, 2\n+3,-4.5e1\n\n5,6\n");
    const auto data = read_csv(in, true);
    EXPECT_EQ(data.n(), 3u);
    EXPECT_EQ(data.d(), 2u);
    EXPECT_EQ(data.values()(1, 0), 3.0);
    EXPECT_EQ(data.values()(1, 1), -45.0);
}

TEST(ReadCsv, ReportsLineNumbers) {
    std::istringstream bad("1,2\n3,oops\n");
    try {
        read_csv(bad, false);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    std::istringstream ragged("1,2\n3,4,5\n");
    EXPECT_THROW(read_csv(ragged, false), ParseError);
    std::istringstream nonfinite("1,2\n3,inf\n");
    EXPECT_THROW(read_csv(nonfinite, false), ParseError);
    std::istringstream empty_field("1,2\n3,\n");
    EXPECT_THROW(read_csv(empty_field, false), ParseError);
    std::istringstream one_row("1,2\n");
    EXPECT_THROW(read_csv(one_row, false), ParseError);
}

TEST(WriteCsv, RoundTripsExactly) {
    Eigen::MatrixXd m(2, 3);
    m << 0.1, -1e-300, 123456789.123456789, 1.0 / 3.0, 2.5e10, -0.0;
    std::ostringstream out;
    write_csv(out, m);
    std::istringstream in(out.str());
    const auto back = read_csv(in, false);
    EXPECT_EQ(back.values(), m);
    EXPECT_EQ(format_double(0.25), "0.25");
    EXPECT_EQ(format_double(1.0), "1");
}

TEST(Labels, ParseValidateAndRoundTrip) {
    std::istringstream in("0\n1\n\n1\n0\n");
    const auto p = read_labels(in, 4);
    EXPECT_EQ(p.labels(), (std::vector<std::uint8_t>{0, 1, 1, 0}));
    std::ostringstream out;
    write_labels(out, p);
    EXPECT_EQ(out.str(), "0\n1\n1\n0\n");
    std::istringstream wrong_count("0\n1\n");
    EXPECT_THROW(read_labels(wrong_count, 3), ParseError);
    std::istringstream bad_value("0\n2\n");
    EXPECT_THROW(read_labels(bad_value), ParseError);
    std::istringstream one_cluster("0\n0\n");
    EXPECT_THROW(read_labels(one_cluster), ParseError);
}

namespace {

TestResult fake_result(double z) {
    auto null = std::make_shared<NullDistribution>();
    null->values = {0.4, 0.5, 0.6};
    null->cluster_sizes = {3, 7, 5};
    null->g = 0.5;
    null->eigenvalues = Eigen::Vector2d(2.0, 1.0);
    null->n = 10;
    null->seed = 7;
    TestResult r;
    r.statistic = CriterionValue{0.2, 0.5, 1.0, 5.0};
    r.p_empirical = 0.25;
    r.z_score = z;
    r.z_degenerate = std::isinf(z);
    r.mode = TestMode::kConfirmatory;
    r.null = null;
    r.label_source = "test labels";
    r.labels = Partition({0, 0, 1, 1, 1, 1, 1, 1, 1, 1});
    return r;
}

} // namespace

TEST(Report, JsonCarriesProvenance) {
    const auto j = report_json(fake_result(-3.0));
    EXPECT_EQ(j["schema_version"], "1");
    EXPECT_EQ(j["mode"], "confirmatory");
    EXPECT_EQ(j["g"], 0.5);
    EXPECT_EQ(j["statistic"]["value"], 0.2);
    EXPECT_EQ(j["z_score"], -3.0);
    EXPECT_EQ(j["n_sims"], 3);
    EXPECT_EQ(j["seed"], 7);
    EXPECT_EQ(j["eigenvalue_method"], "sample");
    EXPECT_EQ(j["label_source"], "test labels");
    EXPECT_EQ(j["cluster_sizes"], nlohmann::json::array({2, 8}));
    EXPECT_TRUE(j.contains("caveat"));
    EXPECT_EQ(j["null"]["values"].size(), 3u);
}

TEST(Report, NonFiniteZBecomesString) {
    const auto j = report_json(fake_result(-std::numeric_limits<double>::infinity()));
    EXPECT_EQ(j["z_score"], "-inf");
    EXPECT_EQ(j["z_degenerate"], true);
    EXPECT_EQ(json_number(std::nan("")), "nan");
}

TEST(Report, NullCsvAndSvg) {
    const auto r = fake_result(-1.5);
    const std::string csv = null_sample_csv(r);
    EXPECT_EQ(csv, "kind,index,value,cluster_size\nnull,0,0.4,3\nnull,1,0.5,7\nnull,2,0.6,5\nstatistic,0,0.2,\n");
    const std::string svg = diagnostic_svg(r);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("z = -1.50"), std::string::npos);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}
