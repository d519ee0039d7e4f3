#include "bessel_radii/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "bessel_radii/oracle.hpp"
#include "bessel_radii/report.hpp"
#include "bessel_radii/zeros.hpp"

namespace bessel_radii {

namespace {

constexpr double kDualTolerance = 1e-8;
constexpr double kResidualTolerance = 1e-9;
constexpr double kZeroSumResidualTolerance = 1e-8;
constexpr double kLemmaSlack = 1e-12;
constexpr double kStarlikeTolerance = 1e-9;
constexpr double kMeanTolerance = 1e-6;
constexpr int kMonotonePoints = 50;

std::string tag(Family family, double nu) {
  return std::string(to_string(family)) + " nu=" + format_number(nu);
}

std::string tag(Family family, double nu, double alpha) {
  return tag(family, nu) + " alpha=" + format_number(alpha);
}

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  void add(std::string suite, std::string label, bool passed, double margin) {
    report_.checks.push_back({std::move(suite), std::move(label), passed, margin});
  }

  /// Runs `body`; an exception becomes a failing check instead of aborting the run.
  template <typename Fn>
  void guarded(const std::string& suite, const std::string& label, Fn&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(suite, label + " [" + e.what() + "]", false, -INFINITY);
    }
  }

 private:
  VerifyReport& report_;
};

void interlacing_suite(const VerifyGrid& grid, Recorder& rec) {
  std::set<double> orders;
  for (Family f : grid.families) {
    for (double nu : grid_orders(grid, f)) orders.insert(nu);
  }
  for (double nu : orders) {
    rec.guarded("interlacing", "nu=" + format_number(nu), [&] {
      const auto report = verify_interlacing(Order(nu), grid.count);
      for (const auto& c : report.checks) {
        rec.add("interlacing", c.label, c.passed(), c.margin());
      }
    });
  }
}

void functional_suites(const VerifyGrid& grid, Family family, double nu, Recorder& rec) {
  const Order order(nu);
  const double cap = functional_domain_cap(family, order);
  for (double alpha : grid.alphas) {
    const std::string label = tag(family, nu, alpha);

    rec.guarded("dual_method", label, [&] {
      double worst = 0.0;
      for (int k = 0; k < grid.r_points; ++k) {
        const double frac = grid.r_points == 1 ? 0.95 : 0.1 + 0.85 * k / (grid.r_points - 1);
        const double r = frac * cap;
        const double ratio = eval_functional(family, order, alpha, r, RatioForm{});
        const double sum = eval_functional(family, order, alpha, r, ZeroSum{500, TailMode::IntegralBound});
        worst = std::max(worst, std::fabs(ratio - sum));
      }
      rec.add("dual_method", label, worst < kDualTolerance, kDualTolerance - worst);
    });

    rec.guarded("monotone_r", label, [&] {
      double min_drop = INFINITY;
      double prev = eval_functional(family, order, alpha, cap / (kMonotonePoints + 1));
      for (int i = 2; i <= kMonotonePoints; ++i) {
        const double v = eval_functional(family, order, alpha, cap * i / (kMonotonePoints + 1));
        min_drop = std::min(min_drop, prev - v);
        prev = v;
      }
      rec.add("monotone_r", label, min_drop > 0.0, min_drop);
    });

    if (alpha > 0.01) {
      rec.guarded("divergence", label, [&] {
        const double v = eval_functional(family, order, alpha, 0.999 * cap);
        rec.add("divergence", label + " r=0.999cap", v < -10.0, -10.0 - v);
      });
    }
  }

  rec.guarded("monotone_alpha", tag(family, nu), [&] {
    double worst = -INFINITY;
    for (int i = 1; i <= kMonotonePoints; ++i) {
      worst = std::max(worst, d_dalpha_functional(family, order, cap * i / (kMonotonePoints + 1)));
    }
    rec.add("monotone_alpha", tag(family, nu), worst < 0.0, -worst);
  });

  rec.guarded("harmonic_mean", tag(family, nu), [&] {
    for (double alpha : grid.alphas) {
      const auto scan = min_re_on_circle(family, order, alpha, 0.5 * cap, 256);
      const double err = std::fabs(scan.mean_value - 1.0);
      rec.add("harmonic_mean", tag(family, nu, alpha), err < kMeanTolerance, kMeanTolerance - err);
    }
  });
}

void radius_suites(const VerifyGrid& grid, Family family, double nu, Recorder& rec) {
  const Order order(nu);
  std::set<double> alphas(grid.alphas.begin(), grid.alphas.end());
  alphas.insert({0.0, 0.25, 0.5, 0.75, 1.0});

  for (double beta : grid.betas) {
    const std::string base = tag(family, nu) + " beta=" + format_number(beta);
    std::map<double, RadiusResult> radii;
    for (double alpha : alphas) {
      const std::string label = base + " alpha=" + format_number(alpha);
      rec.guarded("radius", label, [&] {
        const auto result = radius_alpha_convexity(family, order, FunctionalParams(alpha, beta));
        radii.emplace(alpha, result);
        const double slack = std::min(kResidualTolerance - result.residual,
                                      kZeroSumResidualTolerance - result.zero_sum_residual);
        rec.add("radius", label, slack > 0.0 && result.radius <= result.domain_cap_value, slack);
      });
    }
    if (radii.size() != alphas.size()) continue;

    double decrease = INFINITY;
    for (auto it = std::next(radii.begin()); it != radii.end(); ++it) {
      decrease = std::min(decrease, std::prev(it)->second.radius - it->second.radius);
    }
    rec.add("monotone_radius", base, decrease > 1e-10, decrease);

    const double star = radii.at(0.0).radius;
    const double convex = radii.at(1.0).radius;
    for (double alpha : {0.25, 0.5, 0.75}) {
      const double r = radii.at(alpha).radius;
      const double gap = std::min(star - r, r - convex);
      rec.add("sandwich", base + " alpha=" + format_number(alpha), gap > 1e-10, gap);
    }

    if (family == Family::H) {
      rec.guarded("h_starlikeness", base, [&] {
        const double diff = std::fabs(star - h_starlikeness_root(order, beta));
        rec.add("h_starlikeness", base, diff < kStarlikeTolerance, kStarlikeTolerance - diff);
      });
    }

    for (double alpha : grid.alphas) {
      const std::string label = base + " alpha=" + format_number(alpha);
      rec.guarded("circle_oracle", label, [&] {
        const auto v = verify_radius(family, order, FunctionalParams(alpha, beta), radii.at(alpha).radius,
                                     grid.margin, grid.samples);
        double m = v.inner.min_value - beta;
        if (v.outer) m = std::min(m, beta - v.outer->min_value);
        if (v.near_cap_value) m = std::min(m, beta - *v.near_cap_value);
        rec.add("circle_oracle", label, v.passed(), m);
      });
    }
  }
}

void lemma_suite(const VerifyGrid& grid, Recorder& rec) {
  std::mt19937_64 rng(20140521);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = INFINITY;
  int negative_lambda = 0;
  for (int i = 0; i < grid.lemma_samples; ++i) {
    const double lambda = 1.0 - 4.0 * unit(rng);  // [-3, 1]
    const double b = 0.1 + 5.0 * unit(rng);
    const double a = b * (1.0 + 1e-3 + 3.0 * unit(rng));
    const double t = b * 0.999 * std::sqrt(unit(rng));
    const std::complex<double> z = std::polar(t, 2.0 * M_PI * unit(rng));
    worst = std::min(worst, lemma21_gap(lambda, a, b, z));
    if (lambda < 0.0) ++negative_lambda;
  }
  rec.add("lemma_gap", std::to_string(grid.lemma_samples) + " tuples, " + std::to_string(negative_lambda) +
                           " with lambda < 0",
          worst >= -kLemmaSlack, worst + kLemmaSlack);
}

}  // namespace

std::vector<double> default_orders(Family family) {
  if (family == Family::F) return {0.25, 0.5, 1.0, 2.0, 5.0};
  return {-0.9, -0.5, 0.25, 0.5, 1.0, 2.0, 5.0};
}

std::vector<double> grid_orders(const VerifyGrid& grid, Family family) {
  return grid.nus.value_or(default_orders(family));
}

void validate_grid(const VerifyGrid& grid) {
  if (grid.families.empty()) {
    throw Error(ErrorCode::PreconditionViolated, "grid names no family");
  }
  for (Family f : grid.families) {
    for (double nu : grid_orders(grid, f)) {
      validate_family_order(f, Order(nu));
    }
  }
  for (double a : grid.alphas) FunctionalParams(a, 0.0);
  for (double b : grid.betas) FunctionalParams(0.0, b);
  if (grid.count < 1 || grid.samples < 512 || grid.r_points < 1 || grid.lemma_samples < 1) {
    throw Error(ErrorCode::PreconditionViolated,
                "grid needs count >= 1, samples >= 512, r_points >= 1, lemma_samples >= 1");
  }
  if (!(grid.margin > 0.0 && grid.margin < 0.1)) {
    throw Error(ErrorCode::PreconditionViolated, "margin must lie in (0, 0.1)");
  }
}

bool VerifyReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

nlohmann::ordered_json VerifyReport::to_json(bool full) const {
  struct Totals {
    int total = 0;
    int failed = 0;
    double min_margin = INFINITY;
  };
  std::vector<std::string> order;
  std::map<std::string, Totals> totals;
  for (const auto& c : checks) {
    if (!totals.contains(c.suite)) order.push_back(c.suite);
    auto& t = totals[c.suite];
    ++t.total;
    if (!c.passed) ++t.failed;
    t.min_margin = std::min(t.min_margin, c.margin);
  }
  auto number = [](double v) -> nlohmann::ordered_json {
    if (!std::isfinite(v)) return nullptr;
    return round15(v);
  };
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const auto& name : order) {
    const auto& t = totals[name];
    suites.push_back({{"suite", name},
                      {"passed", t.failed == 0},
                      {"checks", t.total},
                      {"failed", t.failed},
                      {"min_margin", number(t.min_margin)}});
  }
  nlohmann::ordered_json listed = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    if (full || !c.passed) {
      listed.push_back({{"suite", c.suite}, {"label", c.label}, {"passed", c.passed}, {"margin", number(c.margin)}});
    }
  }
  return {{"passed", passed()}, {"suites", suites}, {full ? "checks" : "failures", listed}};
}

VerifyReport run_verification(const VerifyGrid& grid) {
  validate_grid(grid);
  VerifyReport report;
  Recorder rec(report);
  interlacing_suite(grid, rec);
  for (Family family : grid.families) {
    for (double nu : grid_orders(grid, family)) {
      rec.guarded("functional", tag(family, nu), [&] { functional_suites(grid, family, nu, rec); });
      rec.guarded("radius", tag(family, nu), [&] { radius_suites(grid, family, nu, rec); });
    }
  }
  lemma_suite(grid, rec);
  return report;
}

}  // namespace bessel_radii
