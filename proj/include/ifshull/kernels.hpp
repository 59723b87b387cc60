#pragma once

// Data-parallel inner loops. Every kernel has a serial reference path selected by
// Exec::serial; the OpenMP path must give bit-identical results (no reduction-order
// dependence: each output slot is computed independently, max/min are exact).

#include <span>
#include <vector>

#include "ifshull/grid.hpp"
#include "ifshull/ifs.hpp"
#include "ifshull/linalg.hpp"

namespace ifshull {

enum class Exec { serial, parallel };

/// Planar affine map in flat form, x -> [[a00 a01][a10 a11]] x + (t0, t1).
struct PlanarMap {
  double a00, a01, a10, a11;
  double t0, t1;
};

std::vector<PlanarMap> planar_maps(const IFS& ifs);

namespace kernels {

/// out[g] = max_i ( |A_i^T d_g| * interp(in, angle(A_i^T d_g)) + t_i . d_g ).
/// A vanishing A_i^T d_g contributes t_i . d_g.
void selfsim_apply(std::span<const PlanarMap> maps, const DirectionGrid& grid, std::span<const double> in,
                   std::span<double> out, Exec exec = Exec::parallel);

/// max_g |a[g] - b[g]|
double sup_distance(std::span<const double> a, std::span<const double> b, Exec exec = Exec::parallel);

/// For every point p: max_g ( (p - base) . d_g - values[g] ).
std::vector<double> support_excess(const DirectionGrid& grid, Vec2 base, std::span<const double> values,
                                   std::span<const Vec2> points, Exec exec = Exec::parallel);

/// For every grid direction g: max_p (p - base) . d_g.
std::vector<double> max_projection(const DirectionGrid& grid, Vec2 base, std::span<const Vec2> points,
                                   Exec exec = Exec::parallel);

/// For every probe: min_p |probe - p| (brute force).
std::vector<double> nearest_distance(std::span<const Vec2> probes, std::span<const Vec2> cloud,
                                     Exec exec = Exec::parallel);

}  // namespace kernels
}  // namespace ifshull
