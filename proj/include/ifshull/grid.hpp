#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ifshull/linalg.hpp"

namespace ifshull {

/// Uniform angle grid alpha_g = 2*pi*g/N over the unit circle. N is even and >= 64,
/// so every grid direction has its antipode on the grid.
class DirectionGrid {
 public:
  explicit DirectionGrid(std::size_t n);

  std::size_t size() const { return n_; }
  double step() const { return kTwoPi / static_cast<double>(n_); }
  double angle(std::size_t g) const { return kTwoPi * static_cast<double>(g) / static_cast<double>(n_); }
  Vec2 direction(std::size_t g) const { return {cos_[g], sin_[g]}; }
  std::span<const double> cosines() const { return cos_; }
  std::span<const double> sines() const { return sin_; }

 private:
  std::size_t n_;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

/// Periodic linear interpolation of grid samples at an arbitrary angle. Angles within
/// 1e-9 cells of a grid node return the stored node value exactly.
double interpolate_periodic(std::span<const double> values, double angle);

}  // namespace ifshull
