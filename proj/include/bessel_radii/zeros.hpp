#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bessel_radii/bessel_core.hpp"

namespace bessel_radii {

/// The four functions whose positive zeros enter the zero-sum expansions.
enum class ZeroKind {
  BesselJ,       // j_{nu,n}
  BesselJPrime,  // j'_{nu,n}
  DiniG,         // alpha_{nu,n}: (1 - nu) J_nu + x J'_nu
  DiniH,         // beta_{nu,n}:  (2 - nu) J_nu + x J'_nu
};

std::string_view to_string(ZeroKind kind) noexcept;
std::optional<ZeroKind> parse_zero_kind(std::string_view text) noexcept;

/// Largest order for which grid-scan bracketing is documented to be sound.
inline constexpr double kMaxScanOrder = 10.0;

struct ZeroScanOptions {
  double zero_tol = 1e-12;  // absolute bracket width after bisection
  /// Right end of the scan. Unset means an automatic bound derived from the
  /// zero count; ScanExhausted is raised if the grid gets there first.
  std::optional<double> scan_limit;
};

/// Ordered positive zeros of one kind for a fixed order; immutable.
class ZeroTable {
 public:
  ZeroTable(ZeroKind kind, Order order, std::vector<double> values);

  ZeroKind kind() const noexcept { return kind_; }
  Order order() const noexcept { return order_; }
  std::size_t size() const noexcept { return values_.size(); }
  /// One-based, matching the usual j_{nu,n} indexing.
  double at(std::size_t n) const { return values_.at(n - 1); }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  ZeroKind kind_;
  Order order_;
  std::vector<double> values_;
};

/// Value of the target function of `kind` at x > 0, in its public form
/// (J_nu, J'_nu, or the Dini combination).
double zero_target(ZeroKind kind, Order order, double x);

/// First `count` positive zeros, bracketed on a pi/8 grid and bisected.
ZeroTable compute_zeros(ZeroKind kind, Order order, int count, const ZeroScanOptions& opts = {});

/// Memoized compute_zeros with default options; tables are shared read-only.
std::shared_ptr<const ZeroTable> cached_zeros(ZeroKind kind, Order order, int count);

struct InterlacingCheck {
  std::string label;  // e.g. "j'_{1,2} < j_{1,2}"
  double lower;
  double upper;
  bool strict;
  double margin() const noexcept { return upper - lower; }
  bool passed() const noexcept { return strict ? upper > lower : upper >= lower; }
};

struct InterlacingReport {
  Order order;
  int count;
  bool bessel_chain_checked;  // only for nu > 0
  std::vector<InterlacingCheck> checks;

  bool passed() const noexcept;
  double min_margin() const noexcept;
};

/// Checks nu <= j'_1 < j_1 < j'_2 < ... < j_count < j'_{count+1} (nu > 0 only)
/// and j_{n-1} < alpha_n < j_n, j_{n-1} < beta_n < j_n with j_0 = 0.
InterlacingReport verify_interlacing(Order order, int count);

}  // namespace bessel_radii
