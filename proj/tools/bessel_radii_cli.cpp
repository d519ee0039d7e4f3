// bessel-radii: radii of alpha-convexity for normalized Bessel functions.
//
//   bessel-radii radius --family f --nu 1 --alpha 0.5 --beta 0.45
//   bessel-radii figure --id 2 --points 200 > fig2.csv
//   bessel-radii zeros --kind dini-g --nu 0.5 --count 10
//   bessel-radii sweep --family h --nu -0.5 --beta 0.29 --alphas 0,0.3,0.4,0.8,1
//   bessel-radii verify --count 10
//
// Exit codes: 0 success, 1 verification or numerical failure, 2 argument error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bessel_radii/functional.hpp"
#include "bessel_radii/report.hpp"
#include "bessel_radii/verify_suite.hpp"
#include "bessel_radii/zeros.hpp"

namespace br = bessel_radii;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

double default_tol() {
  if (const char* env = std::getenv("BESSEL_RADII_TOL")) {
    try {
      const double v = std::stod(env);
      if (v > 0.0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid BESSEL_RADII_TOL=" << env << '\n';
  }
  return 1e-12;
}

br::Family require_family(const std::string& text) {
  if (auto f = br::parse_family(text)) return *f;
  throw br::Error(br::ErrorCode::PreconditionViolated, "unknown family '" + text + "' (expected f, g or h)");
}

int exit_code_for(const br::Error& e) {
  switch (e.code()) {
    case br::ErrorCode::InvalidOrder:
    case br::ErrorCode::PreconditionViolated:
    case br::ErrorCode::OutOfInterval:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radii of alpha-convexity of normalized Bessel functions of the first kind"};
  app.require_subcommand(1);

  std::string family_text;
  double nu = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double tol = default_tol();

  auto* radius = app.add_subcommand("radius", "Radius of alpha-convexity of order beta (JSON)");
  radius->add_option("--family", family_text, "f, g or h")->required();
  radius->add_option("--nu", nu, "Bessel order")->required();
  radius->add_option("--alpha", alpha, "alpha >= 0")->required();
  radius->add_option("--beta", beta, "beta in [0, 1)")->required();
  radius->add_option("--tol", tol, "bisection bracket width");

  int figure_id = 0;
  int points = 200;
  auto* figure = app.add_subcommand("figure", "Curves r -> J(alpha, u(r)) of figure 1, 2 or 3 (CSV)");
  figure->add_option("--id", figure_id, "figure number")->required();
  figure->add_option("--points", points, "number of r samples");

  std::string kind_text;
  int count = 10;
  auto* zeros = app.add_subcommand("zeros", "Table of positive zeros (CSV)");
  zeros->add_option("--kind", kind_text, "j, jprime, dini-g or dini-h")->required();
  zeros->add_option("--nu", nu, "Bessel order")->required();
  zeros->add_option("--count", count, "number of zeros");

  std::vector<double> sweep_alphas;
  auto* sweep = app.add_subcommand("sweep", "Radius as a function of alpha (CSV)");
  sweep->add_option("--family", family_text, "f, g or h")->required();
  sweep->add_option("--nu", nu, "Bessel order")->required();
  sweep->add_option("--beta", beta, "beta in [0, 1)")->required();
  sweep->add_option("--alphas", sweep_alphas, "alpha values")->required()->delimiter(',');
  sweep->add_option("--tol", tol, "bisection bracket width");

  br::VerifyGrid grid;
  std::vector<std::string> grid_families;
  std::vector<double> grid_nus;
  bool full = false;
  auto* verify = app.add_subcommand("verify", "Run every numerical check on a grid (JSON)");
  verify->add_option("--families", grid_families, "families to check")->delimiter(',');
  verify->add_option("--nu", grid_nus, "orders (default: per-family grid)")->delimiter(',');
  verify->add_option("--alpha", grid.alphas, "alpha values")->delimiter(',');
  verify->add_option("--beta", grid.betas, "beta values")->delimiter(',');
  verify->add_option("--count", grid.count, "zeros per interlacing chain");
  verify->add_option("--samples", grid.samples, "angles per circle scan");
  verify->add_option("--r-points", grid.r_points, "radii per dual-method sweep");
  verify->add_option("--lemma-samples", grid.lemma_samples, "random tuples for the lemma gap");
  verify->add_flag("--full", full, "list every check, not only failures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*radius) {
      const br::Family family = require_family(family_text);
      const br::Order order(nu);
      const br::FunctionalParams params(alpha, beta);
      const auto result = br::radius_alpha_convexity(family, order, params, tol);
      std::cout << br::radius_json(family, order, params, result).dump() << '\n';
    } else if (*figure) {
      std::cout << br::figure_csv(br::figure_curves(figure_id, points));
    } else if (*zeros) {
      const auto kind = br::parse_zero_kind(kind_text);
      if (!kind) {
        throw br::Error(br::ErrorCode::PreconditionViolated,
                        "unknown kind '" + kind_text + "' (expected j, jprime, dini-g or dini-h)");
      }
      std::cout << br::zeros_csv(br::compute_zeros(*kind, br::Order(nu), count));
    } else if (*sweep) {
      const br::Family family = require_family(family_text);
      const br::Order order(nu);
      br::validate_family_order(family, order);
      std::cout << br::sweep_csv(family, order, beta, br::alpha_sweep(family, order, beta, sweep_alphas, tol));
    } else if (*verify) {
      if (!grid_families.empty()) {
        grid.families.clear();
        for (const auto& f : grid_families) grid.families.push_back(require_family(f));
      }
      if (!grid_nus.empty()) grid.nus = grid_nus;
      br::validate_grid(grid);
      const auto report = br::run_verification(grid);
      std::cout << report.to_json(full).dump(2) << '\n';
      return report.passed() ? 0 : kExitFailure;
    }
  } catch (const br::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
