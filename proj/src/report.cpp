#include "bessel_radii/report.hpp"

#include <array>
#include <cstdio>
#include <sstream>

namespace bessel_radii {

std::string format_number(double value) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.15g", value);
  return buf.data();
}

double round15(double value) { return std::stod(format_number(value)); }

const FigureSpec& figure_spec(int id) {
  static const std::array<FigureSpec, 3> specs{{
      {1, Family::F, 1.0, 0.45, 1.8, {0.0, 0.1, 0.2, 0.5, 1.0}},
      {2, Family::G, 0.5, 0.37, 1.5, {0.0, 0.5, 0.6, 0.7, 1.0}},
      {3, Family::H, -0.5, 0.29, 1.1, {0.0, 0.3, 0.4, 0.8, 1.0}},
  }};
  if (id < 1 || id > 3) {
    throw Error(ErrorCode::PreconditionViolated, "figure id must be 1, 2 or 3");
  }
  return specs[static_cast<std::size_t>(id - 1)];
}

FigureCurves figure_curves(int id, int r_points) {
  const FigureSpec& spec = figure_spec(id);
  if (r_points < 2) {
    throw Error(ErrorCode::PreconditionViolated, "a figure needs at least 2 r points");
  }
  const Order order(spec.nu);
  FigureCurves curves{spec, {}, {}, {}};
  curves.r.reserve(static_cast<std::size_t>(r_points));
  curves.r.push_back(kFigureFirstRow);
  for (int k = 1; k < r_points; ++k) {
    curves.r.push_back(spec.r_max * k / (r_points - 1));
  }
  for (double alpha : spec.alphas) {
    const double cap = evaluation_limit(spec.family, order, alpha);
    curves.column_caps.push_back(cap);
    auto& column = curves.columns.emplace_back();
    for (double r : curves.r) {
      if (r < 0.999 * cap) {
        column.emplace_back(eval_functional(spec.family, order, alpha, r));
      } else {
        column.emplace_back(std::nullopt);
      }
    }
  }
  return curves;
}

std::string figure_csv(const FigureCurves& curves) {
  std::ostringstream os;
  const FigureSpec& spec = curves.spec;
  os << "# figure=" << spec.id << " family=" << to_string(spec.family)
     << " nu=" << format_number(spec.nu) << " beta=" << format_number(spec.beta) << '\n';
  os << 'r';
  for (double alpha : spec.alphas) os << ",alpha=" << format_number(alpha);
  os << '\n';
  for (std::size_t i = 0; i < curves.r.size(); ++i) {
    os << format_number(curves.r[i]);
    for (const auto& column : curves.columns) {
      os << ',';
      if (column[i]) os << format_number(*column[i]);
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::ordered_json radius_json(Family family, Order order, const FunctionalParams& params,
                           const RadiusResult& result) {
  return nlohmann::ordered_json{
      {"family", std::string(to_string(family))},
      {"nu", round15(order.nu())},
      {"alpha", round15(params.alpha())},
      {"beta", round15(params.beta())},
      {"radius", round15(result.radius)},
      {"cap", round15(result.domain_cap_value)},
      {"residual", round15(result.residual)},
      {"iterations", result.iterations},
  };
}

std::string zeros_csv(const ZeroTable& table) {
  std::ostringstream os;
  os << "kind,nu,n,zero\n";
  for (std::size_t n = 1; n <= table.size(); ++n) {
    os << to_string(table.kind()) << ',' << format_number(table.order().nu()) << ',' << n << ','
       << format_number(table.at(n)) << '\n';
  }
  return os.str();
}

std::vector<SweepRow> alpha_sweep(Family family, Order order, double beta,
                                  const std::vector<double>& alphas, double tol) {
  std::vector<SweepRow> rows;
  rows.reserve(alphas.size());
  for (double alpha : alphas) {
    rows.push_back({alpha, radius_alpha_convexity(family, order, FunctionalParams(alpha, beta), tol)});
  }
  return rows;
}

std::string sweep_csv(Family family, Order order, double beta, const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "family,nu,beta,alpha,radius,cap,residual,iterations\n";
  for (const auto& row : rows) {
    os << to_string(family) << ',' << format_number(order.nu()) << ',' << format_number(beta) << ','
       << format_number(row.alpha) << ',' << format_number(row.result.radius) << ','
       << format_number(row.result.domain_cap_value) << ',' << format_number(row.result.residual)
       << ',' << row.result.iterations << '\n';
  }
  return os.str();
}

}  // namespace bessel_radii
