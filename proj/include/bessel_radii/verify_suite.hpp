#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bessel_radii/functional.hpp"

namespace bessel_radii {

/// Parameter grid for the full verification run.
struct VerifyGrid {
  std::vector<Family> families{Family::F, Family::G, Family::H};
  /// Orders applied to every listed family; unset uses the per-family defaults.
  std::optional<std::vector<double>> nus;
  std::vector<double> alphas{0.0, 0.25, 0.5, 1.0, 2.0};
  std::vector<double> betas{0.0, 0.29, 0.5};
  int count = 10;      // zeros per interlacing chain
  int samples = 1024;  // angles per circle scan
  int r_points = 20;   // radii per dual-method sweep
  int lemma_samples = 10000;
  double margin = 0.02;
};

/// Orders used for `family` when the grid does not name any.
std::vector<double> default_orders(Family family);
/// Orders actually used for `family` under `grid`.
std::vector<double> grid_orders(const VerifyGrid& grid, Family family);

/// Throws Error (InvalidOrder / PreconditionViolated) naming the first
/// grid entry that violates a family or parameter constraint.
void validate_grid(const VerifyGrid& grid);

struct CheckResult {
  std::string suite;
  std::string label;
  bool passed;
  double margin;  // positive when passing, by how much
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
  /// Per-suite totals plus every failing check (or every check when `full`).
  nlohmann::ordered_json to_json(bool full = false) const;
};

VerifyReport run_verification(const VerifyGrid& grid);

}  // namespace bessel_radii
