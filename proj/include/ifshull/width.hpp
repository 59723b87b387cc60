#pragma once

#include <cstddef>
#include <iosfwd>

#include "ifshull/grid.hpp"
#include "ifshull/ifs.hpp"
#include "ifshull/kernels.hpp"

namespace ifshull {

/// Width (support) function h_base(d) = sup_{p in K} (p - base) . d sampled on a DirectionGrid.
struct WidthSamples {
  DirectionGrid grid;
  Vec2 base;
  std::vector<double> values;
  /// Certified sup-norm distance to the fixed point of the discretized operator.
  double iter_error = 0.0;
  /// Bound on linear-interpolation error between grid angles (Lipschitz constant * pi / N).
  double interp_slack = 0.0;
  std::size_t iterations = 0;

  double total_slack() const { return iter_error + interp_slack; }
};

inline constexpr std::size_t kDefaultGrid = 4096;
inline constexpr double kDefaultTol = 1e-6;

/// One application of the self-similarity operator to a width function based at the origin.
/// Error fields are copied from the input.
WidthSamples selfsim_operator(const IFS& ifs, const WidthSamples& w, Exec exec = Exec::parallel);

/// Iterate the operator from the constant max_i |t_i| / (1 - c) until the a-posteriori
/// Banach bound delta * c / (1 - c) drops to tol.
WidthSamples solve_width(const IFS& ifs, std::size_t n = kDefaultGrid, double tol = kDefaultTol,
                         Exec exec = Exec::parallel);

/// Upper bound on the number of iterations solve_width may take.
std::size_t solve_iteration_bound(const IFS& ifs, double tol);

/// h_new(d) = h_old(d) + (old_base - new_base) . d
WidthSamples rebase_width(const WidthSamples& w, Vec2 new_base);

double eval_width(const WidthSamples& w, double angle);

/// Certified upper bound on sup_d h. Throws InvalidInput if the base lies outside the hull.
double circumradius(const WidthSamples& w);

struct RadiusValue {
  double angle = 0.0;
  double radius = 0.0;
  /// Grid angle e* attaining the infimum of h(e) / (d . e).
  double support_angle = 0.0;
};

RadiusValue radius_from_width(const WidthSamples& w, double angle);

/// Full-direction membership test: (x - base) . e <= h(e) + iter_error + slack for all grid e.
bool hull_contains(const WidthSamples& w, Vec2 x, double slack);

/// Samples built directly from a finite point set (max over points), with zero error fields.
WidthSamples width_of_points(std::span<const Vec2> points, std::size_t n, Vec2 base = {});

/// CSV "angle,h" with one row per grid angle.
void write_width_csv(std::ostream& os, const WidthSamples& w);

}  // namespace ifshull
