#include "bessel_radii/functional.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace bessel_radii {

namespace {

constexpr long double kPoleTol = 1e-13L;
// Complex circle scans abort a little earlier than real-axis evaluation.
constexpr long double kScanPoleTol = 1e-12L;
constexpr int kResidualTerms = 500;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

void require_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw Error(ErrorCode::PreconditionViolated, "alpha must be finite and >= 0, got " + fmt(alpha));
  }
}

/// Zero kinds entering the two sums of each family: the zeros of u itself
/// (always j_{nu,n}) and the zeros of u' (the poles of 1 + z u''/u').
ZeroKind pole_kind(Family family) {
  switch (family) {
    case Family::F: return ZeroKind::BesselJPrime;
    case Family::G: return ZeroKind::DiniG;
    case Family::H: return ZeroKind::DiniH;
  }
  return ZeroKind::BesselJ;
}

template <typename T>
long double magnitude(const T& v) {
  return std::abs(v);
}

[[noreturn]] void near_pole(const char* which, long double tol = kPoleTol) {
  throw Error(ErrorCode::NearPole, std::string("denominator ") + which + " fell below " + fmt(static_cast<double>(tol)));
}

/// Ratio forms written through the reduced series A = E_nu, B = E_{nu+1},
/// C = E_{nu+2}. With c = 1/Gamma(nu+1):
///   J_nu(z) = c (z/2)^nu A,  z J_{nu+1}(z) = c (z/2)^nu 2w B/(nu+1),
///   z^2 J_{nu+2}(z) = c (z/2)^nu 4w^2 C/((nu+1)(nu+2)),  w = z^2/4,
/// so the common factor cancels from every ratio. Family H uses w = z/4.
template <typename T>
T ratio_form(Family family, Order order, long double alpha, T z, long double pole_tol = kPoleTol) {
  const long double nu = order.nu();
  const T w = family == Family::H ? z / 4.0L : z * z / 4.0L;
  EvalAccuracy acc;
  acc.domain_cap = 60.0;
  const T a = reduced_bessel_j(order, w, acc);
  if (magnitude(a) < pole_tol) near_pole("J_nu", pole_tol);
  const T b = reduced_bessel_j(order.shifted(1), w, acc);
  const T xj1 = 2.0L * w * b / (nu + 1.0L);  // x J_{nu+1}(x) / (c (x/2)^nu)

  switch (family) {
    case Family::F: {
      // L = z J'/J; 1 + z J''/J' = (nu^2 - z^2)/L by the Bessel equation.
      const T log_deriv = nu - xj1 / a;
      T value = (1.0L / nu - alpha) * log_deriv;
      if (alpha != 0.0L) {
        if (magnitude(log_deriv) < pole_tol) near_pole("z J'_nu / J_nu", pole_tol);
        value += alpha * (nu * nu - 4.0L * w) / log_deriv;
      }
      return value;
    }
    case Family::G: {
      T value = 1.0L + (alpha - 1.0L) * xj1 / a;
      if (alpha != 0.0L) {
        const T c = reduced_bessel_j(order.shifted(2), w, acc);
        const T den = a - xj1;
        if (magnitude(den) < pole_tol) near_pole("J_nu - z J_{nu+1}", pole_tol);
        const T num = 4.0L * w * w * c / ((nu + 1.0L) * (nu + 2.0L)) - 6.0L * w * b / (nu + 1.0L);
        value += alpha * num / den;
      }
      return value;
    }
    case Family::H: {
      // Here xj1 = (z/2) B/(nu+1), i.e. sqrt(z) J_{nu+1}(sqrt z) in the reduced normalization.
      T value = (1.0L - alpha) * (1.0L - 0.5L * xj1 / a);
      if (alpha != 0.0L) {
        const T c = reduced_bessel_j(order.shifted(2), w, acc);
        const T den = 2.0L * a - xj1;
        if (magnitude(den) < pole_tol) near_pole("2 J_nu - sqrt(z) J_{nu+1}", pole_tol);
        const T num = 2.0L * w * w * c / ((nu + 1.0L) * (nu + 2.0L)) - 4.0L * w * b / (nu + 1.0L);
        value += alpha * (1.0L + num / den);
      }
      return value;
    }
  }
  return T(1.0L);
}

/// Continuous-index model zeta(x) = b - d/b, b = pi (x + c), of the large
/// zeros of one kind. d is the leading McMahon coefficient; c is fitted so
/// that the model passes through the last computed zero.
struct ZeroModel {
  double c;
  double d;
  double mu;

  double b(double x) const { return std::numbers::pi * (x + c); }
  double zeta(double x) const { return b(x) - d / b(x); }
  double dzeta(double x) const { return std::numbers::pi * (1.0 + d / (b(x) * b(x))); }
};

ZeroModel fit_model(const ZeroTable& table, int terms) {
  const double nu = table.order().nu();
  const double mu = 4.0 * nu * nu;
  double d = 0.0;
  switch (table.kind()) {
    case ZeroKind::BesselJ: d = (mu - 1.0) / 8.0; break;
    case ZeroKind::BesselJPrime: d = (mu + 3.0) / 8.0; break;
    case ZeroKind::DiniG: d = (mu + 3.0 - 8.0 * (1.0 - nu)) / 8.0; break;
    case ZeroKind::DiniH: d = (mu + 3.0 - 8.0 * (2.0 - nu)) / 8.0; break;
  }
  const double last = table.at(static_cast<std::size_t>(terms));
  const double b_last = 0.5 * (last + std::sqrt(last * last + 4.0 * d));
  return {b_last / std::numbers::pi - terms, d, mu};
}

/// Sum of kappa / (z_n^2 - rho) over the zeros of one kind.
/// F, G: kappa = 2 r^2, rho = r^2.  H: kappa = rho = r.
FunctionalValue zero_series(const ZeroTable& table, int terms, TailMode tail, double kappa,
                            double rho) {
  // Each tabulated zero is only known to half the bisection bracket; its
  // first-order effect on the head is charged to the half-width.
  const long double zero_err = 0.5L * ZeroScanOptions{}.zero_tol;
  long double head = 0.0L;
  long double location = 0.0L;
  for (int n = 1; n <= terms; ++n) {
    const long double z = table.at(static_cast<std::size_t>(n));
    const long double den = z * z - rho;
    if (std::fabs(den) < kPoleTol) near_pole("z_n^2 - r^2");
    head += kappa / den;
    location += 2.0L * z * std::fabs(kappa) / (den * den) * zero_err;
  }
  if (tail == TailMode::None) return {static_cast<double>(head), 0.0};

  // Euler-Maclaurin on f(x) = kappa / (zeta(x)^2 - rho) from N+1 to infinity:
  //   sum = int_{N+1}^inf f + f(N+1)/2 - f'(N+1)/12 + R,  |R| <~ |f'''|/720.
  const ZeroModel model = fit_model(table, terms);
  const double x1 = terms + 1.0;
  const double b1 = model.b(x1);
  const double z1 = model.zeta(x1);
  const double den1 = z1 * z1 - rho;
  const double f1 = kappa / den1;
  const double df1 = -kappa * 2.0 * z1 * model.dzeta(x1) / (den1 * den1);

  // int f dx = (1/pi) int_{b1}^inf kappa / (b^2 - s + d^2/b^2) db, s = 2d + rho.
  // The d^2/b^2 piece is dropped and its size charged to the half-width.
  const double s = 2.0 * model.d + rho;
  double base = 0.0;
  if (s > 0.0) {
    const double rs = std::sqrt(s);
    base = std::atanh(rs / b1) / rs;
  } else if (s < 0.0) {
    const double rs = std::sqrt(-s);
    base = std::atan(rs / b1) / rs;
  } else {
    base = 1.0 / b1;
  }
  const double integral = kappa * base / std::numbers::pi;
  const double dropped = kappa * model.d * model.d / (5.0 * std::numbers::pi * std::pow(b1, 5));

  const double remainder = 2.0 * 24.0 * kappa * std::pow(std::numbers::pi, 3) / std::pow(b1, 5) / 720.0;
  // Next McMahon term is O((1 + mu^2) / b^3); its effect on the tail is bounded by kappa e / (pi zeta^2).
  const double model_shift = (1.0 + model.mu * model.mu) / std::pow(b1, 3);
  const double model_err = kappa * model_shift / (std::numbers::pi * z1 * z1);

  const double tail_mid = integral + 0.5 * f1 - df1 / 12.0;
  return {static_cast<double>(head + tail_mid),
          static_cast<double>(location) + remainder + dropped + model_err};
}

void require_in_interval(Family family, Order order, double alpha, double r) {
  const double limit = evaluation_limit(family, order, alpha);
  if (!(r > 0.0) || !(r < limit)) {
    throw Error(ErrorCode::OutOfInterval, "r = " + fmt(r) + " outside (0, " + fmt(limit) + ") for family " +
                                              std::string(to_string(family)) + ", nu = " +
                                              fmt(order.nu()));
  }
}

FunctionalValue zero_sum_form(Family family, Order order, double alpha, double r, const ZeroSum& method) {
  if (method.terms < 1) {
    throw Error(ErrorCode::PreconditionViolated, "ZeroSum needs terms >= 1");
  }
  const double nu = order.nu();
  const bool in_z_squared = family != Family::H;
  const double kappa = in_z_squared ? 2.0 * r * r : r;
  const double rho = in_z_squared ? r * r : r;

  const auto j = cached_zeros(ZeroKind::BesselJ, order, method.terms);
  const FunctionalValue sj = zero_series(*j, method.terms, method.tail, kappa, rho);
  FunctionalValue sp{0.0, 0.0};
  if (alpha != 0.0) {
    const auto p = cached_zeros(pole_kind(family), order, method.terms);
    sp = zero_series(*p, method.terms, method.tail, kappa, rho);
  }
  // J = 1 - w_j S_j - alpha S_p with w_j = 1/nu - alpha (F) or 1 - alpha (G, H).
  const double wj = family == Family::F ? 1.0 / nu - alpha : 1.0 - alpha;
  return {1.0 - wj * sj.value - alpha * sp.value,
          std::fabs(wj) * sj.half_width + alpha * sp.half_width};
}

}  // namespace

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::F: return "f";
    case Family::G: return "g";
    case Family::H: return "h";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) noexcept {
  if (text == "f" || text == "F") return Family::F;
  if (text == "g" || text == "G") return Family::G;
  if (text == "h" || text == "H") return Family::H;
  return std::nullopt;
}

void validate_family_order(Family family, Order order) {
  const double nu = order.nu();
  if (nu > kMaxScanOrder) {
    throw Error(ErrorCode::InvalidOrder, "orders above 10 are outside the validated range, got nu = " + fmt(nu));
  }
  if (family == Family::F && nu < kMinOrderF) {
    throw Error(ErrorCode::InvalidOrder,
                "family f requires nu >= 1e-3 (nu > 0 and bounded away from 0), got nu = " + fmt(nu));
  }
}

FunctionalParams::FunctionalParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  require_alpha(alpha);
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw Error(ErrorCode::PreconditionViolated, "beta must lie in [0, 1), got " + fmt(beta));
  }
}

double functional_domain_cap(Family family, Order order) {
  validate_family_order(family, order);
  const double first = cached_zeros(pole_kind(family), order, 1)->at(1);
  return family == Family::H ? first * first : first;
}

double evaluation_limit(Family family, Order order, double alpha) {
  require_alpha(alpha);
  if (alpha > 0.0) return functional_domain_cap(family, order);
  validate_family_order(family, order);
  const double j1 = cached_zeros(ZeroKind::BesselJ, order, 1)->at(1);
  return family == Family::H ? j1 * j1 : j1;
}

FunctionalValue eval_functional_detailed(Family family, Order order, double alpha, double r,
                                         const EvalMethod& method) {
  require_in_interval(family, order, alpha, r);
  if (const auto* zs = std::get_if<ZeroSum>(&method)) {
    return zero_sum_form(family, order, alpha, r, *zs);
  }
  return {static_cast<double>(ratio_form<long double>(family, order, alpha, r)), 0.0};
}

double eval_functional(Family family, Order order, double alpha, double r, const EvalMethod& method) {
  return eval_functional_detailed(family, order, alpha, r, method).value;
}

std::complex<double> eval_functional_complex(Family family, Order order, double alpha,
                                             std::complex<double> z) {
  const double limit = evaluation_limit(family, order, alpha);
  if (!(std::abs(z) < limit)) {
    throw Error(ErrorCode::OutOfInterval, "|z| = " + fmt(std::abs(z)) + " not below " + fmt(limit));
  }
  if (z == 0.0) return 1.0;
  return std::complex<double>(
      ratio_form<std::complex<long double>>(family, order, alpha, std::complex<long double>(z), kScanPoleTol));
}

RadiusResult radius_alpha_convexity(Family family, Order order, const FunctionalParams& params,
                                    double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::PreconditionViolated, "tol must be positive");
  }
  const double alpha = params.alpha();
  const double beta = params.beta();
  const double cap = functional_domain_cap(family, order);

  // Above beta at the left end (the functional tends to 1 > beta at 0);
  // at the cap it tends to -infinity for alpha > 0 and to 0 <= beta for alpha = 0.
  double lo = 1e-9 * cap;
  double hi = cap;
  if (!(eval_functional(family, order, alpha, lo) > beta)) {
    throw Error(ErrorCode::BracketFailure, "functional not above beta near r = 0");
  }
  int iterations = 0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ++iterations;
    double value = 0.0;
    try {
      value = eval_functional(family, order, alpha, mid);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NearPole || mid < 0.999 * cap) throw;
      hi = mid;
      continue;
    }
    if (value > beta) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double radius = 0.5 * (lo + hi);
  const double residual = std::fabs(eval_functional(family, order, alpha, radius) - beta);
  const double zs_residual = std::fabs(
      eval_functional(family, order, alpha, radius, ZeroSum{kResidualTerms, TailMode::IntegralBound}) - beta);
  return {radius, lo, hi, residual, zs_residual, iterations, cap};
}

double d_dalpha_functional(Family family, Order order, double r, int terms) {
  if (terms < 1) {
    throw Error(ErrorCode::PreconditionViolated, "terms must be >= 1");
  }
  require_in_interval(family, order, 1.0, r);
  const bool in_z_squared = family != Family::H;
  const double kappa = in_z_squared ? 2.0 * r * r : r;
  const double rho = in_z_squared ? r * r : r;
  const auto j = cached_zeros(ZeroKind::BesselJ, order, terms);
  const auto p = cached_zeros(pole_kind(family), order, terms);
  return zero_series(*j, terms, TailMode::None, kappa, rho).value -
         zero_series(*p, terms, TailMode::None, kappa, rho).value;
}

double lemma21_gap(double lambda, double a, double b, std::complex<double> z) {
  if (!(lambda <= 1.0) || !(a > b) || !(b > 0.0) || !(std::abs(z) < b)) {
    throw Error(ErrorCode::PreconditionViolated,
                "lemma gap needs lambda <= 1, a > b > 0 and |z| < b");
  }
  const double t = std::abs(z);
  const double lhs = lambda * (z / (a - z)).real() - (z / (b - z)).real();
  const double rhs = lambda * t / (a - t) - t / (b - t);
  return lhs - rhs;
}

}  // namespace bessel_radii
