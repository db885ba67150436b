#include "cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "checks.hpp"
#include "report_io.hpp"

namespace flatmod {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(ParseHPointTest, AcceptsDocumentedForms) {
  EXPECT_EQ(io::parse_hpoint("0+1i"), HPoint(0, 1));
  EXPECT_EQ(io::parse_hpoint("0.5+0.866i"), HPoint(0.5, 0.866));
  EXPECT_EQ(io::parse_hpoint("-2.25+3i"), HPoint(-2.25, 3));
  EXPECT_THROW(io::parse_hpoint("1+i"), std::invalid_argument);
  EXPECT_THROW(io::parse_hpoint("0-1i"), std::invalid_argument);
  EXPECT_THROW(io::parse_hpoint("1e3+2i"), std::invalid_argument);
  EXPECT_THROW(io::parse_hpoint(" 0+1i"), std::invalid_argument);
}

TEST(ParseHPointTest, FormatRoundTrips) {
  checks::Sampler rng(601);
  for (int k = 0; k < 1000; ++k) {
    const HPoint z = rng.plane_point();
    EXPECT_EQ(io::parse_hpoint(io::format_hpoint(z)), z) << io::format_hpoint(z);
  }
}

TEST(ReportJsonTest, RoundTripsExactly) {
  checks::Sampler rng(602);
  for (int k = 0; k < 5; ++k) {
    const MetricReport r = full_report(rng.metric_point(), rng.metric_point(), 40);
    const auto text = io::to_json(r).dump();
    const MetricReport back = io::report_from_json(nlohmann::ordered_json::parse(text));
    EXPECT_EQ(io::to_json(back).dump(), text);
    EXPECT_EQ(back.lambda, r.lambda);
    EXPECT_EQ(back.kappa_witness, r.kappa_witness);
  }
}

TEST(CsvTest, HeaderAndRowHaveSameColumnCount) {
  const MetricReport r = full_report(HPoint(0, 1), HPoint(0.5, 1.5), 20);
  const auto count = [](const std::string& s) { return std::count(s.begin(), s.end(), ','); };
  EXPECT_EQ(count(io::csv_header()), count(io::to_csv_row(r)));
  EXPECT_EQ(io::csv_header().rfind("tau_from,tau_to,lambda,", 0), 0u);
}

TEST(CliTest, DistPlain) {
  const auto r = run({"dist", "--from", "0+1i", "--to", "0+2i", "--metric", "lambda"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "0.346573590280\n");
  EXPECT_EQ(run({"dist", "--from", "0+1i", "--to", "0+1i", "--metric", "kappa", "--N", "10"}).out,
            "0.000000000000\n");
}

TEST(CliTest, DistJsonAndCsv) {
  const auto j = run({"dist", "--from", "0+1i", "--to", "1+1i", "--metric", "teich", "--format",
                      "json"});
  ASSERT_EQ(j.code, cli::kOk);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc.at("metric"), "teich");
  EXPECT_NEAR(doc.at("value").get<double>(), std::log(std::numbers::phi), 1e-14);

  const auto c = run({"dist", "--from", "0+1i", "--to", "0+2i", "--format", "csv"});
  EXPECT_EQ(c.out, "tau_from,tau_to,metric,value\n0+1i,0+2i,lambda,0.346573590280\n");
}

TEST(CliTest, ReportJsonKeysInFixedOrder) {
  const auto r = run({"report", "--from", "0+1i", "--to", "0+2i", "--N", "5", "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& item : doc.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{
                      "tau_from", "tau_to", "N", "lambda", "teich", "kappa_enumerated",
                      "kappa_witness", "kappa_gap", "kappa_attained", "kappa_prime_fwd",
                      "kappa_prime_rev", "sorvali_d", "s_kappa_prime", "wp", "poincare",
                      "sorvali_inequality"}));
  EXPECT_EQ(doc.at("kappa_witness"), nlohmann::ordered_json::parse("[0,1]"));
}

TEST(CliTest, GeodesicRows) {
  const auto r = run({"geodesic", "--from", "0+1i", "--to", "0+4i", "--samples", "3", "--metric",
                      "poincare"});
  ASSERT_EQ(r.code, cli::kOk);
  std::istringstream rows(r.out);
  std::string t, tau, d;
  for (const auto& [t_expected, y_expected, d_expected] :
       {std::tuple{"0.000000000000", 1.0, "0.000000000000"},
        std::tuple{"0.500000000000", 2.0, "0.693147180560"},
        std::tuple{"1.000000000000", 4.0, "1.386294361120"}}) {
    ASSERT_TRUE(rows >> t >> tau >> d);
    EXPECT_EQ(t, t_expected);
    EXPECT_NEAR(io::parse_hpoint(tau).im(), y_expected, 1e-12);
    EXPECT_EQ(d, d_expected);
  }
  EXPECT_FALSE(rows >> t);
}

TEST(CliTest, Reduce) {
  const auto r = run({"reduce", "--from", "1+1i"});
  EXPECT_EQ(r.out, "0+1i [[1,-1],[0,1]]\n");
}

TEST(CliTest, FamilyReportsDistortion) {
  const auto r = run({"family", "--r", "2", "--eps", "0", "--delta", "0.2", "--grid", "0",
                      "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc.at("qc_distortion").get<double>(), 5.0, 1e-12);
  EXPECT_DOUBLE_EQ(doc.at("lipschitz").get<double>(), 2.0);
  EXPECT_FALSE(doc.contains("sampled_lipschitz"));
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"dist", "--from", "0+1i"}).code, cli::kUsage);
  EXPECT_EQ(run({"dist", "--from", "0-1i", "--to", "0+1i"}).code, cli::kUsage);
  EXPECT_EQ(run({"dist", "--from", "0+1i", "--to", "0+1i", "--metric", "nope"}).code, cli::kUsage);
  EXPECT_EQ(run({"dist", "--from", "0+1i", "--to", "0+1i", "--N", "0"}).code, cli::kUsage);
  const auto bad = run({"family", "--r", "2", "--eps", "0", "--delta", "0.6"});
  EXPECT_EQ(bad.code, cli::kUsage);
  EXPECT_NE(bad.err.find("delta"), std::string::npos);
  EXPECT_EQ(run({"geodesic", "--from", "0+1i", "--to", "0+1i"}).code, cli::kUsage);
}

TEST(CliTest, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, cli::kOk); }

}  // namespace
}  // namespace flatmod
