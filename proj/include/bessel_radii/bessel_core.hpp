#pragma once

#include <complex>

#include "bessel_radii/error.hpp"

namespace bessel_radii {

/// Real Bessel order, always strictly greater than -1.
class Order {
 public:
  explicit Order(double nu);

  double nu() const noexcept { return nu_; }

  /// Order shifted by an integer step; stays valid because the shift is non-negative.
  Order shifted(int step) const { return Order(nu_ + step); }

 private:
  double nu_;
};

/// Default term budget: 200, or BESSEL_RADII_MAX_TERMS when set to an integer >= 10.
int default_max_terms();

/// Controls for the power series evaluation.
struct EvalAccuracy {
  double rel_tol = 1e-13;
  int max_terms = default_max_terms();
  double domain_cap = 30.0;  // bound on |z|

  void validate() const;
};

/// Reduced series E_nu(w) = sum_n (-w)^n / (n! (nu+1)_n).
///
/// With w = (z/2)^2 this is Gamma(nu+1) (z/2)^(-nu) J_nu(z). It is an entire
/// function of w, so every ratio of Bessel functions used by the radius
/// solver can be written through it without choosing a branch of z^nu or
/// of sqrt(z). Terms are generated and accumulated in binary128 with
/// Neumaier compensation.
std::complex<long double> reduced_bessel_j(Order order, std::complex<long double> w,
                                           const EvalAccuracy& acc = {});
long double reduced_bessel_j(Order order, long double w, const EvalAccuracy& acc = {});

/// J_nu(z) from its defining series, principal branch of (z/2)^nu.
std::complex<double> bessel_j(Order order, std::complex<double> z, const EvalAccuracy& acc = {});
/// Real argument form; requires x >= 0.
double bessel_j(Order order, double x, const EvalAccuracy& acc = {});

/// J'_nu(z) = (nu/z) J_nu(z) - J_{nu+1}(z). At z = 0 only nu == 1 (1/2) and
/// nu > 1 (0) are defined; other orders raise ZeroArgument.
std::complex<double> bessel_j_dz(Order order, std::complex<double> z, const EvalAccuracy& acc = {});
double bessel_j_dz(Order order, double x, const EvalAccuracy& acc = {});

/// (1 - nu) J_nu(x) + x J'_nu(x), whose zeros are alpha_{nu,n}.
double dini_g_fn(Order order, double x, const EvalAccuracy& acc = {});
/// (2 - nu) J_nu(x) + x J'_nu(x), whose zeros are beta_{nu,n}.
double dini_h_fn(Order order, double x, const EvalAccuracy& acc = {});

double gamma_real(double x);

}  // namespace bessel_radii
