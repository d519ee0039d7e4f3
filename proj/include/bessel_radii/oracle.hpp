#pragma once

#include <optional>

#include "bessel_radii/functional.hpp"

namespace bessel_radii {

/// Re J(alpha, u(z)) sampled at z = r e^{i theta_k}, theta_k = 2 pi k / samples.
struct CircleScan {
  Family family;
  Order order;
  double alpha;
  double r;
  int samples;
  double min_value;
  double argmin_angle;  // radians in [0, 2 pi)
  double value_at_zero_angle;
  double mean_value;    // circle average; equals 1 for an analytic functional

  /// Distance of the argmin from angle 0, modulo 2 pi.
  double argmin_offset() const noexcept;
  /// True when the argmin is within one angular step of the positive real axis.
  bool argmin_on_real_axis() const noexcept;
};

/// Samples are evaluated concurrently; the reduction is by index so the
/// result does not depend on scheduling.
CircleScan min_re_on_circle(Family family, Order order, double alpha, double r, int samples);

struct RadiusVerification {
  double radius;
  double margin;
  double beta;
  CircleScan inner;                 // at (1 - margin) radius
  std::optional<CircleScan> outer;  // at (1 + margin) radius, unless past the cap
  bool cap_exceeded;
  /// When cap_exceeded: real-axis value at 0.999 of the evaluation limit.
  std::optional<double> near_cap_value;
  /// Smallest Re J over deterministic random interior points of the inner disk.
  double interior_min;

  bool inner_ok() const noexcept { return inner.min_value > beta; }
  bool outer_ok() const noexcept;
  bool argmin_ok() const noexcept;
  bool interior_ok() const noexcept { return interior_min >= inner.min_value - 1e-12; }
  bool passed() const noexcept { return inner_ok() && outer_ok() && argmin_ok() && interior_ok(); }
};

inline constexpr int kInteriorSpotChecks = 128;

/// Sharpness check of a computed radius: Re J exceeds beta on the circle
/// just inside it and drops below beta on the circle just outside it.
RadiusVerification verify_radius(Family family, Order order, const FunctionalParams& params,
                                  double radius, double margin, int samples = 1024);

/// Smallest positive root of sqrt(z) J'_nu(sqrt z) + (2 - 2 beta - nu) J_nu(sqrt z) = 0,
/// the radius of starlikeness of order beta of h_nu. Solved in s = sqrt(z)
/// with the unreduced J_nu and J'_nu, independently of the radius solver.
double h_starlikeness_root(Order order, double beta, double tol = 1e-14);

}  // namespace bessel_radii
