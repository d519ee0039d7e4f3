// Acceptance run: one PASS/FAIL line per criterion, with the measured
// figure of merit and wall time. Exit status is 0 only if all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bessel_radii/oracle.hpp"
#include "bessel_radii/report.hpp"
#include "bessel_radii/verify_suite.hpp"
#include "bessel_radii/zeros.hpp"

namespace br = bessel_radii;
using std::numbers::pi;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

int failures = 0;

void criterion(int id, const char* title, double time_limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out{false, ""};
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = elapsed < time_limit_s;
  const bool ok = out.ok && in_time;
  if (!ok) ++failures;
  std::printf("%s  %d  %-34s %s; %.2f s (limit %g s)%s\n", ok ? "PASS" : "FAIL", id, title, out.detail.c_str(),
              elapsed, time_limit_s, in_time ? "" : " TOO SLOW");
  std::fflush(stdout);
}

constexpr br::Family kFamilies[] = {br::Family::F, br::Family::G, br::Family::H};

std::vector<double> orders_for(br::Family family) { return br::default_orders(family); }

Outcome closed_form_zeros() {
  const auto j = br::compute_zeros(br::ZeroKind::BesselJ, br::Order(0.5), 10);
  const auto a = br::compute_zeros(br::ZeroKind::DiniG, br::Order(0.5), 10);
  double worst = 0.0;
  for (int n = 1; n <= 10; ++n) {
    worst = std::max(worst, std::fabs(j.at(n) - n * pi));
    worst = std::max(worst, std::fabs(a.at(n) - (n - 0.5) * pi));
  }
  return {worst < 1e-10, "max |error| " + sci(worst)};
}

Outcome interlacing() {
  double margin = INFINITY;
  int checks = 0;
  bool ok = true;
  for (double nu : {-0.9, -0.5, 0.25, 0.5, 1.0, 2.0, 5.0}) {
    const auto report = br::verify_interlacing(br::Order(nu), 10);
    for (const auto& c : report.checks) {
      ok = ok && c.passed() && c.margin() > 0.0;
      margin = std::min(margin, c.margin());
      ++checks;
    }
  }
  return {ok, std::to_string(checks) + " inequalities, min margin " + sci(margin)};
}

Outcome closed_form_radius() {
  const auto res = br::radius_alpha_convexity(br::Family::G, br::Order(0.5), br::FunctionalParams(0, 0));
  const double err = std::fabs(res.radius - pi / 2);
  return {err < 1e-9, "|r - pi/2| " + sci(err)};
}

Outcome dual_method() {
  double worst = 0.0;
  int points = 0;
  for (auto family : kFamilies) {
    for (double nu : orders_for(family)) {
      const br::Order order(nu);
      const double cap = br::functional_domain_cap(family, order);
      for (double alpha : {0.0, 0.25, 0.5, 1.0, 2.0}) {
        for (int k = 0; k < 20; ++k) {
          const double r = (0.1 + 0.85 * k / 19.0) * cap;
          const double ratio = br::eval_functional(family, order, alpha, r, br::RatioForm{});
          const double sum = br::eval_functional(family, order, alpha, r, br::ZeroSum{500, br::TailMode::IntegralBound});
          worst = std::max(worst, std::fabs(ratio - sum));
          ++points;
        }
      }
    }
  }
  return {worst < 1e-8, std::to_string(points) + " points, max |difference| " + sci(worst)};
}

Outcome monotone_sandwich() {
  bool ok = true;
  double margin = INFINITY;
  for (int id = 1; id <= 3; ++id) {
    const auto& spec = br::figure_spec(id);
    const br::Order order(spec.nu);
    std::vector<double> radii;
    for (double alpha : spec.alphas) {
      radii.push_back(br::radius_alpha_convexity(spec.family, order, br::FunctionalParams(alpha, spec.beta)).radius);
    }
    const double star = radii.front();
    const double convex = radii.back();
    for (std::size_t i = 1; i < radii.size(); ++i) {
      margin = std::min(margin, radii[i - 1] - radii[i]);
      if (i + 1 < radii.size()) margin = std::min({margin, star - radii[i], radii[i] - convex});
    }
    ok = ok && margin > 1e-10;
  }
  return {ok, "min gap " + sci(margin)};
}

Outcome figures() {
  bool ok = true;
  std::string why;
  double first_row_err = 0.0;
  double worst_tail = -INFINITY;
  for (int id = 1; id <= 3; ++id) {
    const auto& spec = br::figure_spec(id);
    const std::string csv = br::figure_csv(br::figure_curves(id, 200));
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);  // comment
    std::getline(is, line);  // header
    std::vector<std::vector<double>> rows;
    while (std::getline(is, line)) {
      std::vector<double> row;
      std::istringstream ls(line);
      for (std::string field; std::getline(ls, field, ',');) row.push_back(field.empty() ? NAN : std::stod(field));
      rows.push_back(row);
    }
    const std::size_t cols = spec.alphas.size();
    for (std::size_t c = 1; c <= cols; ++c) first_row_err = std::max(first_row_err, std::fabs(rows[0][c] - 1.0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols + 1) {
        ok = false;
        why = " ragged row";
      }
      for (std::size_t c = 1; c <= cols; ++c) {
        if (std::isnan(rows[i][c])) continue;
        if (i > 0 && !std::isnan(rows[i - 1][c]) && !(rows[i][c] < rows[i - 1][c])) {
          ok = false;
          why = " not decreasing in r (figure " + std::to_string(id) + ", row " + std::to_string(i) + ")";
        }
        if (c > 1 && !std::isnan(rows[i][c - 1]) && !(rows[i][c] < rows[i][c - 1])) {
          ok = false;
          why = " not decreasing in alpha (figure " + std::to_string(id) + ", row " + std::to_string(i) + ")";
        }
      }
    }
    const br::Order order(spec.nu);
    const double cap = br::functional_domain_cap(spec.family, order);
    for (double alpha : spec.alphas) {
      if (alpha <= 0.01) continue;
      worst_tail = std::max(worst_tail, br::eval_functional(spec.family, order, alpha, 0.999 * cap));
    }
  }
  ok = ok && first_row_err < 1e-5 && worst_tail < -10.0;
  return {ok, "first-row error " + sci(first_row_err) + ", max value at 0.999 cap " + sci(worst_tail) + why};
}

Outcome oracle_sharpness() {
  int passed = 0;
  int total = 0;
  std::string why;
  for (int id = 1; id <= 3; ++id) {
    const auto& spec = br::figure_spec(id);
    const br::Order order(spec.nu);
    for (double alpha : spec.alphas) {
      const br::FunctionalParams params(alpha, spec.beta);
      const double radius = br::radius_alpha_convexity(spec.family, order, params).radius;
      const auto v = br::verify_radius(spec.family, order, params, radius, 0.02, 1024);
      ++total;
      if (v.passed()) {
        ++passed;
      } else {
        why += " [" + std::string(br::to_string(spec.family)) + " alpha=" + br::format_number(alpha) + "]";
      }
    }
  }
  return {passed == total && total == 15, std::to_string(passed) + "/" + std::to_string(total) + " combinations" + why};
}

Outcome lemma_gap() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = INFINITY;
  int negative_lambda = 0;
  for (int i = 0; i < 10000; ++i) {
    const double lambda = 1.0 - 4.0 * unit(rng);
    const double b = 0.05 + 10.0 * unit(rng);
    const double a = b * (1.0 + 1e-4 + 5.0 * unit(rng));
    const auto z = std::polar(b * 0.9999 * std::sqrt(unit(rng)), 2.0 * pi * unit(rng));
    worst = std::min(worst, br::lemma21_gap(lambda, a, b, z));
    if (lambda < 0) ++negative_lambda;
  }
  return {worst >= -1e-12 && negative_lambda > 0,
          "10000 tuples (" + std::to_string(negative_lambda) + " with lambda < 0), min gap " + sci(worst)};
}

Outcome h_starlikeness() {
  double worst = 0.0;
  for (double nu : {-0.5, 0.5, 2.0}) {
    for (double beta : {0.0, 0.29, 0.5}) {
      const br::Order order(nu);
      const double r = br::radius_alpha_convexity(br::Family::H, order, br::FunctionalParams(0, beta)).radius;
      worst = std::max(worst, std::fabs(r - br::h_starlikeness_root(order, beta)));
    }
  }
  return {worst < 1e-9, "max |difference| " + sci(worst)};
}

}  // namespace

int main() {
  criterion(1, "closed-form zeros", 1, closed_form_zeros);
  criterion(2, "interlacing", 10, interlacing);
  criterion(3, "closed-form radius", 1, closed_form_radius);
  criterion(4, "dual-method agreement", 60, dual_method);
  criterion(5, "monotonicity and sandwich", 30, monotone_sandwich);
  criterion(6, "figure reproduction", 30, figures);
  criterion(7, "oracle sharpness", 120, oracle_sharpness);
  criterion(8, "lemma gap", 5, lemma_gap);
  criterion(9, "corrected h starlikeness", 5, h_starlikeness);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
