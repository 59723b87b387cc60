#include "ifshull/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ifshull {

std::vector<PlanarMap> planar_maps(const IFS& ifs) {
  if (ifs.dim() != 2) throw InvalidInput("planar kernels need a 2D IFS");
  std::vector<PlanarMap> out;
  out.reserve(ifs.size());
  for (const AffineMap& m : ifs.maps()) {
    const Matrix& a = m.linear();
    out.push_back({a(0, 0), a(0, 1), a(1, 0), a(1, 1), m.translation()[0], m.translation()[1]});
  }
  return out;
}

namespace kernels {

namespace {

inline double selfsim_at(std::span<const PlanarMap> maps, std::span<const double> in, double dx, double dy) {
  double best = -std::numeric_limits<double>::infinity();
  for (const PlanarMap& m : maps) {
    // A^T d
    const double vx = m.a00 * dx + m.a10 * dy;
    const double vy = m.a01 * dx + m.a11 * dy;
    const double shift = m.t0 * dx + m.t1 * dy;
    const double len = std::hypot(vx, vy);
    double term = shift;
    if (len > 0.0) term += len * interpolate_periodic(in, std::atan2(vy, vx));
    best = std::max(best, term);
  }
  return best;
}

inline double excess_at(const DirectionGrid& grid, Vec2 base, std::span<const double> values, Vec2 p) {
  const auto cs = grid.cosines();
  const auto sn = grid.sines();
  const double px = p.x - base.x;
  const double py = p.y - base.y;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < values.size(); ++g) worst = std::max(worst, px * cs[g] + py * sn[g] - values[g]);
  return worst;
}

inline double nearest_at(Vec2 q, std::span<const Vec2> cloud) {
  double best = std::numeric_limits<double>::infinity();
  for (const Vec2& p : cloud) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    best = std::min(best, dx * dx + dy * dy);
  }
  return std::sqrt(best);
}

}  // namespace

void selfsim_apply(std::span<const PlanarMap> maps, const DirectionGrid& grid, std::span<const double> in,
                   std::span<double> out, Exec exec) {
  const auto cs = grid.cosines();
  const auto sn = grid.sines();
  const auto n = static_cast<long>(grid.size());
  if (exec == Exec::serial) {
    for (long g = 0; g < n; ++g) out[g] = selfsim_at(maps, in, cs[g], sn[g]);
    return;
  }
#pragma omp parallel for schedule(static)
  for (long g = 0; g < n; ++g) out[g] = selfsim_at(maps, in, cs[g], sn[g]);
}

double sup_distance(std::span<const double> a, std::span<const double> b, Exec exec) {
  const auto n = static_cast<long>(a.size());
  double worst = 0.0;
  if (exec == Exec::serial) {
    for (long g = 0; g < n; ++g) worst = std::max(worst, std::abs(a[g] - b[g]));
    return worst;
  }
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (long g = 0; g < n; ++g) worst = std::max(worst, std::abs(a[g] - b[g]));
  return worst;
}

std::vector<double> support_excess(const DirectionGrid& grid, Vec2 base, std::span<const double> values,
                                   std::span<const Vec2> points, Exec exec) {
  std::vector<double> out(points.size());
  const auto n = static_cast<long>(points.size());
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) out[i] = excess_at(grid, base, values, points[i]);
    return out;
  }
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = excess_at(grid, base, values, points[i]);
  return out;
}

std::vector<double> max_projection(const DirectionGrid& grid, Vec2 base, std::span<const Vec2> points, Exec exec) {
  const auto cs = grid.cosines();
  const auto sn = grid.sines();
  const auto n = static_cast<long>(grid.size());
  std::vector<double> out(grid.size(), -std::numeric_limits<double>::infinity());
  auto one = [&](long g) {
    double best = -std::numeric_limits<double>::infinity();
    for (const Vec2& p : points) best = std::max(best, (p.x - base.x) * cs[g] + (p.y - base.y) * sn[g]);
    out[g] = best;
  };
  if (exec == Exec::serial) {
    for (long g = 0; g < n; ++g) one(g);
    return out;
  }
#pragma omp parallel for schedule(static)
  for (long g = 0; g < n; ++g) one(g);
  return out;
}

std::vector<double> nearest_distance(std::span<const Vec2> probes, std::span<const Vec2> cloud, Exec exec) {
  std::vector<double> out(probes.size());
  const auto n = static_cast<long>(probes.size());
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) out[i] = nearest_at(probes[i], cloud);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) out[i] = nearest_at(probes[i], cloud);
  return out;
}

}  // namespace kernels
}  // namespace ifshull
