#pragma once

// Seeded generators for the property tests. Every property runs a fixed
// number of cases from a fixed seed, so failures reproduce exactly.

#include <cstdint>
#include <random>
#include <string>

#include <gtest/gtest.h>

namespace gen {

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// Uniform on (lo, hi]: resamples the (measure zero) lower end.
  double open_closed(double lo, double hi) {
    double v = uniform(lo, hi);
    while (v == lo) v = uniform(lo, hi);
    return v;
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  template <typename T, std::size_t N>
  const T& pick(const T (&items)[N]) {
    return items[static_cast<std::size_t>(integer(0, static_cast<int>(N) - 1))];
  }

 private:
  std::mt19937_64 rng_;
};

/// Calls body(source, i) for i < cases; the case index is attached to any failure.
template <typename Body>
void for_all(int cases, std::uint64_t seed, Body&& body) {
  Source source(seed);
  for (int i = 0; i < cases; ++i) {
    SCOPED_TRACE("case " + std::to_string(i) + " seed " + std::to_string(seed));
    body(source, i);
    if (::testing::Test::HasFatalFailure()) return;
  }
}

}  // namespace gen
