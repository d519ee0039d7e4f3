#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "bessel_radii/report.hpp"
#include "bessel_radii/verify_suite.hpp"

namespace br = bessel_radii;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

TEST(FormatNumber, FifteenSignificantDigits) {
  EXPECT_EQ(br::format_number(std::numbers::pi), "3.14159265358979");
  EXPECT_EQ(br::format_number(0.1), "0.1");
  EXPECT_EQ(br::format_number(-2.5e-12), "-2.5e-12");
  EXPECT_EQ(br::round15(std::numbers::pi), 3.14159265358979);
}

TEST(Figure, Specs) {
  EXPECT_EQ(br::figure_spec(1).family, br::Family::F);
  EXPECT_EQ(br::figure_spec(1).nu, 1.0);
  EXPECT_EQ(br::figure_spec(2).beta, 0.37);
  EXPECT_EQ(br::figure_spec(3).nu, -0.5);
  EXPECT_EQ(br::figure_spec(3).alphas, (std::vector<double>{0.0, 0.3, 0.4, 0.8, 1.0}));
  EXPECT_THROW(br::figure_spec(4), br::Error);
  EXPECT_THROW(br::figure_curves(1, 1), br::Error);
}

TEST(Figure, CsvLayout) {
  const auto curves = br::figure_curves(2, 11);
  const auto lines = lines_of(br::figure_csv(curves));
  ASSERT_EQ(lines.size(), 13u);
  EXPECT_EQ(lines[0], "# figure=2 family=g nu=0.5 beta=0.37");
  EXPECT_EQ(lines[1], "r,alpha=0,alpha=0.5,alpha=0.6,alpha=0.7,alpha=1");
  EXPECT_EQ(fields_of(lines[2])[0], "1e-06");
  EXPECT_EQ(fields_of(lines.back())[0], "1.5");
  for (std::size_t i = 2; i < lines.size(); ++i) EXPECT_EQ(fields_of(lines[i]).size(), 6u) << lines[i];
}

TEST(Figure, FirstRowNearOne) {
  for (int id = 1; id <= 3; ++id) {
    const auto curves = br::figure_curves(id, 20);
    for (const auto& column : curves.columns) {
      ASSERT_TRUE(column.front().has_value());
      EXPECT_NEAR(*column.front(), 1.0, 1e-5);
    }
  }
}

TEST(Figure, Deterministic) {
  EXPECT_EQ(br::figure_csv(br::figure_curves(3, 50)), br::figure_csv(br::figure_curves(3, 50)));
}

TEST(RadiusJson, Fields) {
  const br::Order order(0.5);
  const br::FunctionalParams params(0, 0);
  const auto res = br::radius_alpha_convexity(br::Family::G, order, params);
  const auto json = br::radius_json(br::Family::G, order, params, res);
  const auto text = json.dump();
  EXPECT_EQ(text.find("{\"family\":\"g\",\"nu\":0.5,\"alpha\":0.0,\"beta\":0.0,\"radius\":1.5707963267"), 0u)
      << text;
  EXPECT_EQ(json["cap"].get<double>(), br::round15(res.domain_cap_value));
  EXPECT_EQ(json["iterations"].get<int>(), res.iterations);
}

TEST(RadiusJson, RoundTripResidual) {
  const br::Order order(-0.5);
  const br::FunctionalParams params(0.8, 0.29);
  const auto res = br::radius_alpha_convexity(br::Family::H, order, params);
  const auto json = nlohmann::json::parse(br::radius_json(br::Family::H, order, params, res).dump());
  const double r = json["radius"].get<double>();
  EXPECT_GT(r, 0.0);
  EXPECT_LT(r, json["cap"].get<double>());
  EXPECT_LT(std::fabs(br::eval_functional(br::Family::H, order, 0.8, r) - 0.29), 1e-9);
}

TEST(ZerosCsv, Layout) {
  const auto lines = lines_of(br::zeros_csv(br::compute_zeros(br::ZeroKind::BesselJ, br::Order(0.5), 2)));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "kind,nu,n,zero");
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto f = fields_of(lines[n]);
    ASSERT_EQ(f.size(), 4u);
    EXPECT_EQ(f[0], "j");
    EXPECT_EQ(f[1], "0.5");
    EXPECT_EQ(f[2], std::to_string(n));
    EXPECT_NEAR(std::stod(f[3]), n * std::numbers::pi, 1e-12);
  }
}

TEST(Sweep, RowsFollowAlpha) {
  const std::vector<double> alphas{0.0, 0.3, 0.4, 0.8, 1.0};
  const auto rows = br::alpha_sweep(br::Family::H, br::Order(-0.5), 0.29, alphas);
  ASSERT_EQ(rows.size(), alphas.size());
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i].result.radius, rows[i - 1].result.radius);
  const auto lines = lines_of(br::sweep_csv(br::Family::H, br::Order(-0.5), 0.29, rows));
  EXPECT_EQ(lines[0], "family,nu,beta,alpha,radius,cap,residual,iterations");
  EXPECT_EQ(lines.size(), alphas.size() + 1);
  EXPECT_EQ(lines[3].rfind("h,-0.5,0.29,0.4,", 0), 0u);
}

TEST(VerifyGrid, RejectsSmallFOrder) {
  br::VerifyGrid grid;
  grid.families = {br::Family::F};
  grid.nus = std::vector<double>{1e-4};
  try {
    br::validate_grid(grid);
    FAIL() << "expected rejection";
  } catch (const br::Error& e) {
    EXPECT_EQ(e.code(), br::ErrorCode::InvalidOrder);
  }
}

TEST(VerifyGrid, RejectsBadSettings) {
  br::VerifyGrid grid;
  grid.samples = 100;
  EXPECT_THROW(br::validate_grid(grid), br::Error);
  grid = {};
  grid.betas = {1.0};
  EXPECT_THROW(br::validate_grid(grid), br::Error);
  grid = {};
  grid.families.clear();
  EXPECT_THROW(br::validate_grid(grid), br::Error);
}

TEST(VerifyReport, SmallGridPasses) {
  br::VerifyGrid grid;
  grid.families = {br::Family::H};
  grid.nus = std::vector<double>{-0.5};
  grid.alphas = {0.0, 1.0};
  grid.betas = {0.29};
  grid.count = 4;
  grid.samples = 512;
  grid.r_points = 5;
  grid.lemma_samples = 200;
  const auto report = br::run_verification(grid);
  EXPECT_TRUE(report.passed());
  const auto json = report.to_json();
  EXPECT_TRUE(json["passed"].get<bool>());
  EXPECT_TRUE(json["failures"].empty());
  std::vector<std::string> suites;
  for (const auto& s : json["suites"]) suites.push_back(s["suite"].get<std::string>());
  for (const char* name : {"interlacing", "dual_method", "monotone_r", "divergence", "monotone_alpha",
                           "harmonic_mean", "radius", "monotone_radius", "sandwich", "h_starlikeness",
                           "circle_oracle", "lemma_gap"}) {
    EXPECT_NE(std::find(suites.begin(), suites.end(), name), suites.end()) << name;
  }
  EXPECT_EQ(report.to_json(true)["checks"].size(), report.checks.size());
}
