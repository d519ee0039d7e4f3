#include "bessel_radii/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

namespace bessel_radii {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> sample_circle(Family family, Order order, double alpha, double r, int samples) {
  std::vector<double> values(static_cast<std::size_t>(samples));
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int workers = static_cast<int>(std::min<unsigned>(hw, 8u));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int k = w; k < samples; k += workers) {
            const double theta = kTwoPi * k / samples;
            const std::complex<double> z = std::polar(r, theta);
            values[static_cast<std::size_t>(k)] =
                eval_functional_complex(family, order, alpha, z).real();
          }
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return values;
}

}  // namespace

double CircleScan::argmin_offset() const noexcept {
  return std::min(argmin_angle, kTwoPi - argmin_angle);
}

bool CircleScan::argmin_on_real_axis() const noexcept {
  return argmin_offset() <= kTwoPi / samples * (1.0 + 1e-12);
}

CircleScan min_re_on_circle(Family family, Order order, double alpha, double r, int samples) {
  if (samples < 64) {
    throw Error(ErrorCode::PreconditionViolated, "circle scan needs at least 64 samples");
  }
  const double limit = evaluation_limit(family, order, alpha);
  if (!(r > 0.0) || !(r < limit)) {
    throw Error(ErrorCode::OutOfInterval, "circle radius outside (0, evaluation limit)");
  }
  const std::vector<double> values = sample_circle(family, order, alpha, r, samples);
  std::size_t best = 0;
  double sum = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] < values[best]) best = k;
    sum += values[k];
  }
  return {family,
          order,
          alpha,
          r,
          samples,
          values[best],
          kTwoPi * static_cast<double>(best) / samples,
          values[0],
          sum / samples};
}

bool RadiusVerification::outer_ok() const noexcept {
  if (outer) return outer->min_value < beta;
  return near_cap_value.has_value() && *near_cap_value < beta;
}

bool RadiusVerification::argmin_ok() const noexcept {
  return inner.argmin_on_real_axis() && (!outer || outer->argmin_on_real_axis());
}

RadiusVerification verify_radius(Family family, Order order, const FunctionalParams& params,
                                 double radius, double margin, int samples) {
  if (!(margin > 0.0 && margin < 0.1)) {
    throw Error(ErrorCode::PreconditionViolated, "margin must lie in (0, 0.1)");
  }
  if (samples < 512) {
    throw Error(ErrorCode::PreconditionViolated, "radius verification needs at least 512 samples");
  }
  const double alpha = params.alpha();
  const double limit = evaluation_limit(family, order, alpha);
  const double r_in = (1.0 - margin) * radius;
  const double r_out = (1.0 + margin) * radius;

  RadiusVerification report{radius,
                            margin,
                            params.beta(),
                            min_re_on_circle(family, order, alpha, r_in, samples),
                            std::nullopt,
                            r_out >= limit,
                            std::nullopt,
                            0.0};
  if (report.cap_exceeded) {
    report.near_cap_value = eval_functional(family, order, alpha, 0.999 * limit);
  } else {
    report.outer = min_re_on_circle(family, order, alpha, r_out, samples);
  }

  std::mt19937_64 rng(0x5eed'0000'0001ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double interior_min = report.inner.min_value + 1.0;
  for (int i = 0; i < kInteriorSpotChecks; ++i) {
    // Uniform in the disk.
    const double rho = r_in * std::sqrt(unit(rng));
    const double theta = kTwoPi * unit(rng);
    const double v = eval_functional_complex(family, order, alpha, std::polar(rho, theta)).real();
    interior_min = std::min(interior_min, v);
  }
  report.interior_min = interior_min;
  return report;
}

double h_starlikeness_root(Order order, double beta, double tol) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw Error(ErrorCode::PreconditionViolated, "beta must lie in [0, 1)");
  }
  const double nu = order.nu();
  const double coef = 2.0 - 2.0 * beta - nu;
  auto target = [&](double s) { return s * bessel_j_dz(order, s) + coef * bessel_j(order, s); };

  // Positive near the origin: target(s) ~ (2 - 2 beta) J_nu(s) there.
  constexpr double step = std::numbers::pi / 16.0;
  double lo = 1e-6;
  double f_lo = target(lo);
  for (double hi = lo + step; hi < 25.0; hi += step) {
    const double f_hi = target(hi);
    if ((f_lo > 0.0) != (f_hi > 0.0)) {
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double f_mid = target(mid);
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
          lo = mid;
          f_lo = f_mid;
        } else {
          hi = mid;
        }
      }
      const double s = 0.5 * (lo + hi);
      return s * s;
    }
    lo = hi;
    f_lo = f_hi;
  }
  throw Error(ErrorCode::ScanExhausted, "no sign change of the starlikeness equation below s = 25");
}

}  // namespace bessel_radii
