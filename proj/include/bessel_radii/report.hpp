#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bessel_radii/functional.hpp"
#include "bessel_radii/zeros.hpp"

namespace bessel_radii {

/// Numbers in every output record carry 15 significant digits.
std::string format_number(double value);
/// `value` rounded to 15 significant digits, for JSON emission.
double round15(double value);

/// Parameters of the three reproduced figures.
struct FigureSpec {
  int id;
  Family family;
  double nu;
  double beta;
  double r_max;
  std::vector<double> alphas;
};

/// Throws PreconditionViolated unless id is 1, 2 or 3.
const FigureSpec& figure_spec(int id);

/// r -> J(alpha, u(r)) for each alpha of a figure. Rows are r = 1e-6 and
/// r_max k / (r_points - 1), k = 1..r_points-1; a cell is empty once r
/// reaches 0.999 of that column's cap.
struct FigureCurves {
  FigureSpec spec;
  std::vector<double> r;
  std::vector<double> column_caps;
  std::vector<std::vector<std::optional<double>>> columns;  // columns[alpha][row]
};

inline constexpr double kFigureFirstRow = 1e-6;

FigureCurves figure_curves(int id, int r_points);
std::string figure_csv(const FigureCurves& curves);

nlohmann::ordered_json radius_json(Family family, Order order, const FunctionalParams& params,
                           const RadiusResult& result);

std::string zeros_csv(const ZeroTable& table);

struct SweepRow {
  double alpha;
  RadiusResult result;
};

std::vector<SweepRow> alpha_sweep(Family family, Order order, double beta,
                                  const std::vector<double>& alphas, double tol = 1e-12);
std::string sweep_csv(Family family, Order order, double beta, const std::vector<SweepRow>& rows);

}  // namespace bessel_radii
