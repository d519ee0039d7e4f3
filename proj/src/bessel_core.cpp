#include "bessel_radii/bessel_core.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace bessel_radii {

namespace {

using quad = __float128;

quad qabs(quad v) { return v < 0 ? -v : v; }

/// Neumaier compensated accumulator.
struct CompensatedSum {
  quad sum = 0;
  quad carry = 0;

  void add(quad v) {
    const quad t = sum + v;
    if (qabs(sum) >= qabs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }

  quad value() const { return sum + carry; }
};

std::string describe(double value) {
  std::ostringstream os;
  os.precision(17);
  os << value;
  return os.str();
}

void check_reach(long double abs_w, const EvalAccuracy& acc) {
  const long double abs_z = 2.0L * std::sqrt(abs_w);
  if (abs_z > acc.domain_cap) {
    throw Error(ErrorCode::DomainCapExceeded,
                "|z| = " + describe(static_cast<double>(abs_z)) + " exceeds domain cap " +
                    describe(acc.domain_cap));
  }
}

[[noreturn]] void fail_convergence(double nu, long double abs_w, int terms) {
  throw Error(ErrorCode::NonConvergence, "series for nu = " + describe(nu) + ", |w| = " +
                                             describe(static_cast<double>(abs_w)) +
                                             " did not converge in " + std::to_string(terms) +
                                             " terms");
}

}  // namespace

Order::Order(double nu) : nu_(nu) {
  if (!std::isfinite(nu) || !(nu > -1.0)) {
    throw Error(ErrorCode::InvalidOrder, "order must satisfy nu > -1, got " + describe(nu));
  }
}

int default_max_terms() {
  static const int value = [] {
    if (const char* env = std::getenv("BESSEL_RADII_MAX_TERMS")) {
      char* end = nullptr;
      const long parsed = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && parsed >= 10 && parsed <= 100000) {
        return static_cast<int>(parsed);
      }
    }
    return 200;
  }();
  return value;
}

void EvalAccuracy::validate() const {
  if (!(rel_tol > 0.0) || max_terms < 10 || !(domain_cap > 0.0)) {
    throw Error(ErrorCode::PreconditionViolated,
                "EvalAccuracy requires rel_tol > 0, max_terms >= 10, domain_cap > 0");
  }
}

long double reduced_bessel_j(Order order, long double w, const EvalAccuracy& acc) {
  acc.validate();
  check_reach(std::fabs(w), acc);
  const quad nu = order.nu();
  const quad mw = -static_cast<quad>(w);
  const quad tol = acc.rel_tol;
  CompensatedSum sum;
  sum.add(1);
  quad term = 1;
  for (int n = 1; n <= acc.max_terms; ++n) {
    term = term * mw / (static_cast<quad>(n) * (n + nu));
    sum.add(term);
    // Terms only shrink monotonically once n (n + nu) exceeds |w|.
    if (static_cast<quad>(n) * (n + nu) > qabs(mw) &&
        qabs(term) <= tol * qabs(sum.value())) {
      return static_cast<long double>(sum.value());
    }
    if (term == 0) {
      return static_cast<long double>(sum.value());
    }
  }
  fail_convergence(order.nu(), std::fabs(w), acc.max_terms);
}

std::complex<long double> reduced_bessel_j(Order order, std::complex<long double> w,
                                           const EvalAccuracy& acc) {
  acc.validate();
  const long double abs_w = std::abs(w);
  check_reach(abs_w, acc);
  const quad nu = order.nu();
  const quad mw_re = -static_cast<quad>(w.real());
  const quad mw_im = -static_cast<quad>(w.imag());
  const quad tol = acc.rel_tol;
  CompensatedSum re;
  CompensatedSum im;
  re.add(1);
  quad t_re = 1;
  quad t_im = 0;
  for (int n = 1; n <= acc.max_terms; ++n) {
    const quad scale = static_cast<quad>(n) * (n + nu);
    const quad next_re = (t_re * mw_re - t_im * mw_im) / scale;
    const quad next_im = (t_re * mw_im + t_im * mw_re) / scale;
    t_re = next_re;
    t_im = next_im;
    re.add(t_re);
    im.add(t_im);
    const quad term_mag = qabs(t_re) + qabs(t_im);
    const quad sum_mag = qabs(re.value()) + qabs(im.value());
    if (scale > static_cast<quad>(abs_w) && term_mag <= tol * sum_mag) {
      return {static_cast<long double>(re.value()), static_cast<long double>(im.value())};
    }
    if (term_mag == 0) {
      return {static_cast<long double>(re.value()), static_cast<long double>(im.value())};
    }
  }
  fail_convergence(order.nu(), abs_w, acc.max_terms);
}

std::complex<double> bessel_j(Order order, std::complex<double> z, const EvalAccuracy& acc) {
  const double nu = order.nu();
  if (z == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu > 0.0) return 0.0;
    throw Error(ErrorCode::ZeroArgument, "J_nu(0) is unbounded for nu < 0");
  }
  const std::complex<long double> half = std::complex<long double>(z) / 2.0L;
  const std::complex<long double> series = reduced_bessel_j(order, half * half, acc);
  const std::complex<long double> prefactor =
      nu == 0.0 ? std::complex<long double>(1.0L) : std::pow(half, static_cast<long double>(nu));
  return std::complex<double>(prefactor * series / static_cast<long double>(gamma_real(nu + 1.0)));
}

double bessel_j(Order order, double x, const EvalAccuracy& acc) {
  if (x < 0.0) {
    throw Error(ErrorCode::PreconditionViolated, "real bessel_j requires x >= 0");
  }
  const double nu = order.nu();
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    if (nu > 0.0) return 0.0;
    throw Error(ErrorCode::ZeroArgument, "J_nu(0) is unbounded for nu < 0");
  }
  const long double half = static_cast<long double>(x) / 2.0L;
  const long double series = reduced_bessel_j(order, half * half, acc);
  return static_cast<double>(std::pow(half, static_cast<long double>(nu)) * series /
                             static_cast<long double>(gamma_real(nu + 1.0)));
}

std::complex<double> bessel_j_dz(Order order, std::complex<double> z, const EvalAccuracy& acc) {
  const double nu = order.nu();
  if (z == 0.0) {
    if (nu == 1.0) return 0.5;
    if (nu > 1.0) return 0.0;
    throw Error(ErrorCode::ZeroArgument, "J'_nu(0) via the recurrence needs z != 0");
  }
  return (nu / z) * bessel_j(order, z, acc) - bessel_j(order.shifted(1), z, acc);
}

double bessel_j_dz(Order order, double x, const EvalAccuracy& acc) {
  const double nu = order.nu();
  if (x == 0.0) {
    if (nu == 1.0) return 0.5;
    if (nu > 1.0) return 0.0;
    throw Error(ErrorCode::ZeroArgument, "J'_nu(0) via the recurrence needs z != 0");
  }
  return (nu / x) * bessel_j(order, x, acc) - bessel_j(order.shifted(1), x, acc);
}

double dini_g_fn(Order order, double x, const EvalAccuracy& acc) {
  if (x < 0.0) {
    throw Error(ErrorCode::PreconditionViolated, "dini_g_fn requires x >= 0");
  }
  // (1 - nu) J + x J' = J_nu - x J_{nu+1}
  return bessel_j(order, x, acc) - x * bessel_j(order.shifted(1), x, acc);
}

double dini_h_fn(Order order, double x, const EvalAccuracy& acc) {
  if (x < 0.0) {
    throw Error(ErrorCode::PreconditionViolated, "dini_h_fn requires x >= 0");
  }
  return 2.0 * bessel_j(order, x, acc) - x * bessel_j(order.shifted(1), x, acc);
}

double gamma_real(double x) {
  if (!(x > 0.0)) {
    throw Error(ErrorCode::PreconditionViolated, "gamma_real requires x > 0");
  }
  return std::tgamma(x);
}

}  // namespace bessel_radii
