#include "bessel_radii/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <tuple>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>

namespace bessel_radii {

namespace {

// Below this abscissa the binary128 series is used; above it the far-field
// values come from Boost.Math, which switches to asymptotic forms there.
constexpr double kSeriesReach = 40.0;
constexpr double kScanStep = std::numbers::pi / 8.0;
constexpr double kScanStart = 1e-6;

std::string format_nu(double nu) {
  std::ostringstream os;
  os.precision(15);
  os << nu;
  return os.str();
}

/// A positive multiple of the target function, cheap and stable to evaluate.
/// For x <= kSeriesReach the common factor (x/2)^nu / Gamma(nu+1) is divided
/// out, which removes the origin singularity for nu < 0.
double sign_kernel(ZeroKind kind, Order order, double x) {
  const double nu = order.nu();
  if (x <= kSeriesReach) {
    EvalAccuracy acc;
    acc.domain_cap = kSeriesReach + 1.0;
    const long double w = static_cast<long double>(x) * x / 4.0L;
    const long double a = reduced_bessel_j(order, w, acc);
    if (kind == ZeroKind::BesselJ) return static_cast<double>(a);
    // x J_{nu+1}(x) expressed in the same normalization.
    const long double xj1 = 2.0L * w * reduced_bessel_j(order.shifted(1), w, acc) / (nu + 1.0L);
    switch (kind) {
      case ZeroKind::BesselJPrime: return static_cast<double>(nu * a - xj1);
      case ZeroKind::DiniG: return static_cast<double>(a - xj1);
      case ZeroKind::DiniH: return static_cast<double>(2.0L * a - xj1);
      case ZeroKind::BesselJ: break;
    }
    return static_cast<double>(a);
  }
  const double j0 = boost::math::cyl_bessel_j(nu, x);
  if (kind == ZeroKind::BesselJ) return j0;
  const double xj1 = x * boost::math::cyl_bessel_j(nu + 1.0, x);
  switch (kind) {
    case ZeroKind::BesselJPrime: return nu * j0 - xj1;
    case ZeroKind::DiniG: return j0 - xj1;
    case ZeroKind::DiniH: return 2.0 * j0 - xj1;
    case ZeroKind::BesselJ: break;
  }
  return j0;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

double bisect(ZeroKind kind, Order order, double lo, double hi, int sign_lo, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const int s = sign_of(sign_kernel(kind, order, mid));
    if (s == 0) return mid;
    if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double default_scan_limit(double nu, int count) {
  // The n-th zero of every kind sits below (n + |nu|/2 + 1) pi for nu <= 10.
  return (count + std::fabs(nu) / 2.0 + 2.0) * std::numbers::pi + 4.0;
}

}  // namespace

std::string_view to_string(ZeroKind kind) noexcept {
  switch (kind) {
    case ZeroKind::BesselJ: return "j";
    case ZeroKind::BesselJPrime: return "jprime";
    case ZeroKind::DiniG: return "dini-g";
    case ZeroKind::DiniH: return "dini-h";
  }
  return "?";
}

std::optional<ZeroKind> parse_zero_kind(std::string_view text) noexcept {
  for (ZeroKind k : {ZeroKind::BesselJ, ZeroKind::BesselJPrime, ZeroKind::DiniG, ZeroKind::DiniH}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

ZeroTable::ZeroTable(ZeroKind kind, Order order, std::vector<double> values)
    : kind_(kind), order_(order), values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > 0.0) || (i > 0 && !(values_[i] > values_[i - 1]))) {
      throw Error(ErrorCode::PreconditionViolated, "zero table must be positive and strictly increasing");
    }
  }
}

double zero_target(ZeroKind kind, Order order, double x) {
  if (!(x > 0.0)) {
    throw Error(ErrorCode::PreconditionViolated, "zero_target requires x > 0");
  }
  const double nu = order.nu();
  double j = 0.0;
  double dj = 0.0;
  if (x <= kSeriesReach) {
    EvalAccuracy acc;
    acc.domain_cap = kSeriesReach + 1.0;
    j = bessel_j(order, x, acc);
    if (kind == ZeroKind::BesselJ) return j;
    dj = bessel_j_dz(order, x, acc);
  } else {
    j = boost::math::cyl_bessel_j(nu, x);
    dj = boost::math::cyl_bessel_j_prime(nu, x);
  }
  switch (kind) {
    case ZeroKind::BesselJ: return j;
    case ZeroKind::BesselJPrime: return dj;
    case ZeroKind::DiniG: return (1.0 - nu) * j + x * dj;
    case ZeroKind::DiniH: return (2.0 - nu) * j + x * dj;
  }
  return 0.0;
}

ZeroTable compute_zeros(ZeroKind kind, Order order, int count, const ZeroScanOptions& opts) {
  const double nu = order.nu();
  if (count < 1) {
    throw Error(ErrorCode::PreconditionViolated, "zero count must be positive");
  }
  if (nu > kMaxScanOrder) {
    throw Error(ErrorCode::InvalidOrder,
                "grid-scan bracketing is only validated for nu <= 10, got " + format_nu(nu));
  }
  if (!(opts.zero_tol > 0.0)) {
    throw Error(ErrorCode::PreconditionViolated, "zero_tol must be positive");
  }
  const double limit = opts.scan_limit.value_or(default_scan_limit(nu, count));

  double start = kScanStart;
  if (kind == ZeroKind::BesselJPrime && nu > 0.0) {
    start = std::max(kScanStart, nu - 1.0);
  }

  std::vector<double> zeros;
  zeros.reserve(static_cast<std::size_t>(count));
  double x_prev = start;
  int s_prev = sign_of(sign_kernel(kind, order, x_prev));
  for (long k = 1; static_cast<int>(zeros.size()) < count; ++k) {
    const double x = start + static_cast<double>(k) * kScanStep;
    if (x > limit) {
      throw Error(ErrorCode::ScanExhausted,
                  "found " + std::to_string(zeros.size()) + " of " + std::to_string(count) + " " +
                      std::string(to_string(kind)) + " zeros for nu = " + format_nu(nu) +
                      " below " + format_nu(limit));
    }
    const int s = sign_of(sign_kernel(kind, order, x));
    if (s == 0) {
      zeros.push_back(x);
    } else if (s_prev != 0 && s != s_prev) {
      zeros.push_back(bisect(kind, order, x_prev, x, s_prev, opts.zero_tol));
    }
    x_prev = x;
    s_prev = s;
  }
  return ZeroTable(kind, order, std::move(zeros));
}

std::shared_ptr<const ZeroTable> cached_zeros(ZeroKind kind, Order order, int count) {
  using Key = std::tuple<int, double>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const ZeroTable>> cache;

  const Key key{static_cast<int>(kind), order.nu()};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end() && static_cast<int>(it->second->size()) >= count) {
      if (static_cast<int>(it->second->size()) == count) return it->second;
      const auto& v = it->second->values();
      return std::make_shared<const ZeroTable>(kind, order,
                                               std::vector<double>(v.begin(), v.begin() + count));
    }
  }
  auto table = std::make_shared<const ZeroTable>(compute_zeros(kind, order, count));
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot || slot->size() < table->size()) slot = table;
  return table;
}

bool InterlacingReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

double InterlacingReport::min_margin() const noexcept {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& c : checks) m = std::min(m, c.margin());
  return m;
}

InterlacingReport verify_interlacing(Order order, int count) {
  if (count < 1) {
    throw Error(ErrorCode::PreconditionViolated, "interlacing count must be positive");
  }
  const double nu = order.nu();
  const std::string tag = format_nu(nu);
  InterlacingReport report{order, count, nu > 0.0, {}};

  const auto j = cached_zeros(ZeroKind::BesselJ, order, count);
  if (nu > 0.0) {
    const auto jp = cached_zeros(ZeroKind::BesselJPrime, order, count + 1);
    report.checks.push_back({"nu <= j'_{" + tag + ",1}", nu, jp->at(1), false});
    for (int n = 1; n <= count; ++n) {
      const std::string ns = std::to_string(n);
      report.checks.push_back(
          {"j'_{" + tag + "," + ns + "} < j_{" + tag + "," + ns + "}", jp->at(n), j->at(n), true});
      report.checks.push_back({"j_{" + tag + "," + ns + "} < j'_{" + tag + "," +
                                   std::to_string(n + 1) + "}",
                               j->at(n), jp->at(n + 1), true});
    }
  }

  const auto alpha = cached_zeros(ZeroKind::DiniG, order, count);
  const auto beta = cached_zeros(ZeroKind::DiniH, order, count);
  for (int n = 1; n <= count; ++n) {
    const std::string ns = std::to_string(n);
    const double j_prev = n == 1 ? 0.0 : j->at(n - 1);
    const std::string prev_label = n == 1 ? "0" : "j_{" + tag + "," + std::to_string(n - 1) + "}";
    const std::string cur_label = "j_{" + tag + "," + ns + "}";
    const std::string a_label = "alpha_{" + tag + "," + ns + "}";
    const std::string b_label = "beta_{" + tag + "," + ns + "}";
    report.checks.push_back({prev_label + " < " + a_label, j_prev, alpha->at(n), true});
    report.checks.push_back({a_label + " < " + cur_label, alpha->at(n), j->at(n), true});
    report.checks.push_back({prev_label + " < " + b_label, j_prev, beta->at(n), true});
    report.checks.push_back({b_label + " < " + cur_label, beta->at(n), j->at(n), true});
  }
  return report;
}

}  // namespace bessel_radii
