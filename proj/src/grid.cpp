#include "ifshull/grid.hpp"

#include <cmath>

namespace ifshull {

DirectionGrid::DirectionGrid(std::size_t n) : n_(n), cos_(n), sin_(n) {
  if (n < 64 || n % 2 != 0) throw InvalidInput("direction grid needs an even N >= 64");
  for (std::size_t g = 0; g < n; ++g) {
    const double a = angle(g);
    cos_[g] = std::cos(a);
    sin_[g] = std::sin(a);
  }
  // Exact values on the axes keep symmetric test bodies symmetric on the grid.
  if (n % 4 == 0) {
    const std::size_t q = n / 4;
    cos_[q] = 0.0;
    sin_[q] = 1.0;
    cos_[2 * q] = -1.0;
    sin_[2 * q] = 0.0;
    cos_[3 * q] = 0.0;
    sin_[3 * q] = -1.0;
  } else {
    cos_[n / 2] = -1.0;
    sin_[n / 2] = 0.0;
  }
}

double interpolate_periodic(std::span<const double> values, double angle) {
  const std::size_t n = values.size();
  const double pos = wrap_angle(angle) / kTwoPi * static_cast<double>(n);
  const double nearest = std::round(pos);
  if (std::abs(pos - nearest) < 1e-9) return values[static_cast<std::size_t>(nearest) % n];
  const double fl = std::floor(pos);
  const double frac = pos - fl;
  const std::size_t g0 = static_cast<std::size_t>(fl) % n;
  const std::size_t g1 = (g0 + 1) % n;
  return (1.0 - frac) * values[g0] + frac * values[g1];
}

}  // namespace ifshull
