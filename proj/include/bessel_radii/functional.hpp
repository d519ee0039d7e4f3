#pragma once

#include <complex>
#include <optional>
#include <string_view>
#include <variant>

#include "bessel_radii/bessel_core.hpp"
#include "bessel_radii/zeros.hpp"

namespace bessel_radii {

/// The three normalized Bessel functions:
///   F: f_nu(z) = (2^nu Gamma(nu+1) J_nu(z))^(1/nu)
///   G: g_nu(z) = 2^nu Gamma(nu+1) z^(1-nu) J_nu(z)
///   H: h_nu(z) = 2^nu Gamma(nu+1) z^(1-nu/2) J_nu(sqrt z)
enum class Family { F, G, H };

std::string_view to_string(Family family) noexcept;
std::optional<Family> parse_family(std::string_view text) noexcept;

/// Smallest order accepted for family F; the weight 1/nu - alpha blows up as nu -> 0.
inline constexpr double kMinOrderF = 1e-3;

/// Throws InvalidOrder unless `order` is admissible for `family`.
void validate_family_order(Family family, Order order);

/// (alpha, beta) of the alpha-convexity condition of order beta.
class FunctionalParams {
 public:
  FunctionalParams(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

 private:
  double alpha_;
  double beta_;
};

/// Closed-form ratio of Bessel functions, as in the radius equations.
struct RatioForm {};

enum class TailMode { None, IntegralBound };

/// Truncated sum over zeros, optionally closed by a certified tail interval.
struct ZeroSum {
  int terms = 500;
  TailMode tail = TailMode::IntegralBound;
};

using EvalMethod = std::variant<RatioForm, ZeroSum>;

struct FunctionalValue {
  double value;
  /// For ZeroSum with IntegralBound: half-width covering the tail and the
  /// uncertainty of the tabulated zeros. Otherwise 0.
  double half_width = 0.0;
};

/// Upper bound of the radius: j'_{nu,1} (F), alpha_{nu,1} (G), beta_{nu,1}^2 (H).
double functional_domain_cap(Family family, Order order);

/// Right end of the interval on which the functional is finite. Equals the
/// domain cap for alpha > 0. For alpha = 0 only z u'/u remains and it stays
/// analytic up to the first zero of u: j_{nu,1} (F, G) or j_{nu,1}^2 (H).
double evaluation_limit(Family family, Order order, double alpha);

/// J(alpha, u(r)) = (1 - alpha) r u'/u + alpha (1 + r u''/u') for 0 < r < evaluation_limit.
double eval_functional(Family family, Order order, double alpha, double r,
                       const EvalMethod& method = RatioForm{});
FunctionalValue eval_functional_detailed(Family family, Order order, double alpha, double r,
                                         const EvalMethod& method = RatioForm{});

/// Ratio form at complex z with |z| < evaluation_limit. Built on the reduced
/// series in z^2 (F, G) or z (H), so no branch of z^nu or sqrt(z) is taken.
std::complex<double> eval_functional_complex(Family family, Order order, double alpha,
                                             std::complex<double> z);

struct RadiusResult {
  double radius;
  double lo;  // final bisection bracket
  double hi;
  double residual;             // |J(alpha, u(radius)) - beta|, ratio form
  double zero_sum_residual;    // same, re-evaluated with ZeroSum{500, IntegralBound}
  int iterations;
  double domain_cap_value;
};

/// Unique root of J(alpha, u(r)) = beta in (0, cap], by bisection to bracket width `tol`.
RadiusResult radius_alpha_convexity(Family family, Order order, const FunctionalParams& params,
                                    double tol = 1e-12);

/// d/d alpha of J(alpha, u(r)): the difference of the two truncated zero sums.
double d_dalpha_functional(Family family, Order order, double r, int terms = 500);

/// [lambda Re(z/(a-z)) - Re(z/(b-z))] - [lambda |z|/(a-|z|) - |z|/(b-|z|)],
/// for lambda <= 1, a > b > 0, |z| < b. Non-negative on that set.
double lemma21_gap(double lambda, double a, double b, std::complex<double> z);

}  // namespace bessel_radii
