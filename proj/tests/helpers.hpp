#pragma once

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "jcxy/analytic_n4.hpp"
#include "jcxy/spectral.hpp"

namespace jcxy::testing {

inline std::vector<double> expand_levels(const std::vector<Level>& levels) {
  std::vector<double> out;
  for (const auto& level : levels) out.insert(out.end(), level.multiplicity, level.energy);
  return out;
}

inline std::vector<double> expand_analytic(const std::vector<AnalyticLevel>& levels) {
  std::vector<double> out;
  for (const auto& level : levels) out.insert(out.end(), level.multiplicity, level.energy);
  return out;
}

// Max elementwise deviation between two multisets of equal size.
inline double max_sorted_deviation(std::vector<double> a, std::vector<double> b) {
  REQUIRE(a.size() == b.size());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double dev = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::abs(a[i] - b[i]));
  return dev;
}

inline bool has_level(const Spectrum& s, double energy, double tol, int multiplicity = -1) {
  for (const auto& level : s.levels) {
    if (std::abs(level.energy - energy) <= tol &&
        (multiplicity < 0 || level.multiplicity == multiplicity)) {
      return true;
    }
  }
  return false;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

}  // namespace jcxy::testing
