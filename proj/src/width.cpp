#include "ifshull/width.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace ifshull {

namespace {

void require_planar(const IFS& ifs) {
  if (ifs.dim() != 2) throw InvalidInput("width solver supports dimension 2 only");
}

double lipschitz_slack(const std::vector<double>& values, double iter_error, std::size_t n) {
  // Lipschitz constant of a support function in angle is max_{p in K} |p - base|,
  // which equals max_d h(d) when positive.
  const double top = *std::max_element(values.begin(), values.end());
  const double radius = std::max(top + iter_error, 0.0);
  return radius * kPi / static_cast<double>(n);
}

void require_inside(const WidthSamples& w) {
  const double lowest = *std::min_element(w.values.begin(), w.values.end());
  if (lowest < -(w.total_slack() + 1e-12)) {
    throw InvalidInput("base point lies outside the hull (h = " + std::to_string(lowest) + ")");
  }
}

}  // namespace

WidthSamples selfsim_operator(const IFS& ifs, const WidthSamples& w, Exec exec) {
  require_planar(ifs);
  if (w.base.x != 0.0 || w.base.y != 0.0) throw InvalidInput("self-similarity operator needs base 0");
  const auto maps = planar_maps(ifs);
  WidthSamples out = w;
  kernels::selfsim_apply(maps, w.grid, w.values, out.values, exec);
  return out;
}

std::size_t solve_iteration_bound(const IFS& ifs, double tol) {
  const double c = ifs.contraction();
  double r0 = 0.0;
  for (const AffineMap& m : ifs.maps()) r0 = std::max(r0, norm(m.translation()));
  r0 /= (1.0 - c);
  if (c == 0.0 || r0 == 0.0) return 2;
  const double k = std::log(tol * (1.0 - c) / r0) / std::log(c);
  return static_cast<std::size_t>(std::max(0.0, std::ceil(k))) + 1;
}

WidthSamples solve_width(const IFS& ifs, std::size_t n, double tol, Exec exec) {
  require_planar(ifs);
  if (!(tol > 0.0)) throw InvalidInput("tol must be positive");
  const double c = ifs.contraction();
  const auto maps = planar_maps(ifs);

  double r0 = 0.0;
  for (const AffineMap& m : ifs.maps()) r0 = std::max(r0, norm(m.translation()));
  r0 /= (1.0 - c);

  WidthSamples w{DirectionGrid(n), Vec2{}, std::vector<double>(n, r0), 0.0, 0.0, 0};
  std::vector<double> next(n);
  constexpr std::size_t kIterationCap = 1'000'000;
  for (std::size_t it = 1; it <= kIterationCap; ++it) {
    kernels::selfsim_apply(maps, w.grid, w.values, next, exec);
    const double delta = kernels::sup_distance(w.values, next, exec);
    w.values.swap(next);
    w.iterations = it;
    const double bound = delta * c / (1.0 - c);
    if (bound <= tol) {
      w.iter_error = bound;
      w.interp_slack = lipschitz_slack(w.values, w.iter_error, n);
      return w;
    }
  }
  throw InternalError("width iteration did not converge within the iteration cap");
}

WidthSamples rebase_width(const WidthSamples& w, Vec2 new_base) {
  WidthSamples out = w;
  const Vec2 shift = w.base - new_base;
  for (std::size_t g = 0; g < out.values.size(); ++g) out.values[g] += dot(shift, w.grid.direction(g));
  out.base = new_base;
  // Linear interpolation of shift . u(angle) between nodes is off by at most |shift| step^2 / 8.
  const double step = w.grid.step();
  out.interp_slack += norm(shift) * step * step / 8.0;
  return out;
}

double eval_width(const WidthSamples& w, double angle) { return interpolate_periodic(w.values, angle); }

double circumradius(const WidthSamples& w) {
  require_inside(w);
  return *std::max_element(w.values.begin(), w.values.end()) + w.total_slack();
}

RadiusValue radius_from_width(const WidthSamples& w, double angle) {
  require_inside(w);
  const Vec2 d = unit(angle);
  RadiusValue rv{angle, std::numeric_limits<double>::infinity(), angle};
  for (std::size_t g = 0; g < w.values.size(); ++g) {
    const double de = dot(d, w.grid.direction(g));
    if (de <= 1e-12) continue;
    const double ratio = w.values[g] / de;
    if (ratio < rv.radius) {
      rv.radius = ratio;
      rv.support_angle = w.grid.angle(g);
    }
  }
  rv.radius = std::max(rv.radius, 0.0);
  return rv;
}

bool hull_contains(const WidthSamples& w, Vec2 x, double slack) {
  const Vec2 rel = x - w.base;
  const double allowance = w.iter_error + slack;
  for (std::size_t g = 0; g < w.values.size(); ++g) {
    if (dot(rel, w.grid.direction(g)) > w.values[g] + allowance) return false;
  }
  return true;
}

WidthSamples width_of_points(std::span<const Vec2> points, std::size_t n, Vec2 base) {
  if (points.empty()) throw InvalidInput("width of an empty point set is undefined");
  DirectionGrid grid(n);
  WidthSamples w{grid, base, kernels::max_projection(grid, base, points), 0.0, 0.0, 0};
  return w;
}

void write_width_csv(std::ostream& os, const WidthSamples& w) {
  os << "angle,h\n";
  char buf[96];
  for (std::size_t g = 0; g < w.values.size(); ++g) {
    std::snprintf(buf, sizeof buf, "%.12g,%.15g\n", w.grid.angle(g), w.values[g]);
    os << buf;
  }
}

}  // namespace ifshull
