#include "ifshull/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace ifshull {

namespace {

struct Cyclic {
  std::span<const double> h;
  double operator[](long g) const {
    const long n = static_cast<long>(h.size());
    return h[static_cast<std::size_t>(((g % n) + n) % n)];
  }
};

double noise_floor(const WidthSamples& w) {
  const double step = w.grid.step();
  const double top = std::max(0.0, *std::max_element(w.values.begin(), w.values.end()));
  return 4.0 * w.iter_error / step + top * step;
}

// Second difference scaled to derivative units: the jump carried by node g.
std::vector<double> jump_density(const WidthSamples& w) {
  const Cyclic h{w.values};
  const long n = static_cast<long>(w.values.size());
  const double step = w.grid.step();
  std::vector<double> s(w.values.size());
  for (long g = 0; g < n; ++g) s[static_cast<std::size_t>(g)] = (h[g + 1] - 2.0 * h[g] + h[g - 1]) / step;
  return s;
}

Vec2 perp(Vec2 u) { return {-u.y, u.x}; }

// Least-squares point v (relative to the base) with v.u_g = h_g over the given grid nodes.
std::optional<Vec2> fit_vertex(const WidthSamples& w, const std::vector<long>& nodes) {
  if (nodes.size() < 2) return std::nullopt;
  const long n = static_cast<long>(w.values.size());
  double mxx = 0.0, mxy = 0.0, myy = 0.0, bx = 0.0, by = 0.0;
  for (long g : nodes) {
    const auto k = static_cast<std::size_t>(((g % n) + n) % n);
    const Vec2 u = w.grid.direction(k);
    const double h = w.values[k];
    mxx += u.x * u.x;
    mxy += u.x * u.y;
    myy += u.y * u.y;
    bx += h * u.x;
    by += h * u.y;
  }
  const double det = mxx * myy - mxy * mxy;
  const double scale = static_cast<double>(nodes.size());
  if (!(det > 1e-14 * scale * scale)) return std::nullopt;
  return Vec2{(myy * bx - mxy * by) / det, (mxx * by - mxy * bx) / det};
}

Vec2 grid_support_point(const WidthSamples& w, long g) {
  const Cyclic h{w.values};
  const long n = static_cast<long>(w.values.size());
  const auto k = static_cast<std::size_t>(((g % n) + n) % n);
  const Vec2 u = w.grid.direction(k);
  const double dh = (h[g + 1] - h[g - 1]) / (2.0 * w.grid.step());
  return w.base + h[g] * u + dh * perp(u);
}

}  // namespace

double default_kink_threshold(const WidthSamples& w) { return 4.0 * noise_floor(w); }

KinkReport detect_kinks(const WidthSamples& w, double jump_threshold) {
  KinkReport report;
  report.threshold = jump_threshold > 0.0 ? jump_threshold : default_kink_threshold(w);
  const double cutoff = std::min(noise_floor(w), 0.25 * report.threshold);
  const std::vector<double> s = jump_density(w);
  const long n = static_cast<long>(s.size());
  const double step = w.grid.step();
  const Cyclic h{w.values};
  auto at = [&](long g) { return s[static_cast<std::size_t>(((g % n) + n) % n)]; };

  long start = -1;
  for (long g = 0; g < n; ++g) {
    if (at(g) <= cutoff && at(g - 1) <= cutoff) {
      start = g;
      break;
    }
  }
  if (start < 0) return report;

  for (long off = 0; off < n;) {
    const long g = start + off;
    if (at(g) <= cutoff) {
      ++off;
      continue;
    }
    // Run of candidates, bridging single-node gaps.
    long first = g;
    long last = g;
    long probe = g + 1;
    while (probe < start + n) {
      if (at(probe) > cutoff) {
        last = probe++;
      } else if (probe + 1 < start + n && at(probe + 1) > cutoff) {
        probe += 1;
      } else {
        break;
      }
    }
    off = last - start + 1;
    if (at(first - 1) > 0.0 && first - 1 > start - n) --first;
    if (at(last + 1) > 0.0 && last + 1 < start + n) ++last;

    double mass = 0.0;
    double moment = 0.0;
    for (long k = first; k <= last; ++k) {
      const double sk = std::max(0.0, at(k));
      mass += sk;
      moment += sk * static_cast<double>(k - first);
    }
    if (mass <= 0.0) continue;
    const double pos = static_cast<double>(first) + moment / mass;  // in cells

    const double dl1 = (h[first] - h[first - 1]) / step;
    const double dl2 = (h[first - 1] - h[first - 2]) / step;
    const double left = dl1 + (dl1 - dl2) * (pos - (static_cast<double>(first) - 0.5));
    const double dr1 = (h[last + 1] - h[last]) / step;
    const double dr2 = (h[last + 2] - h[last + 1]) / step;
    const double right = dr1 + (dr2 - dr1) * (pos - (static_cast<double>(last) + 0.5));
    const double jump = right - left;
    if (jump > report.threshold) {
      report.kinks.push_back({wrap_angle(pos * step), left, right, jump});
    }
  }
  std::sort(report.kinks.begin(), report.kinks.end(), [](const Kink& a, const Kink& b) { return a.angle < b.angle; });
  return report;
}

Vec2 support_point(const WidthSamples& w, double angle) {
  const double step = w.grid.step();
  for (const Kink& k : detect_kinks(w).kinks) {
    double gap = std::abs(wrap_angle(angle) - k.angle);
    gap = std::min(gap, kTwoPi - gap);
    if (gap < step) throw AmbiguousSupportPoint("direction supports an edge; use the edge endpoints");
  }
  const Vec2 u = unit(angle);
  const double h = eval_width(w, angle);
  const double dh = (eval_width(w, angle + step) - eval_width(w, angle - step)) / (2.0 * step);
  return w.base + h * u + dh * perp(u);
}

std::vector<Vec2> convex_hull(std::vector<Vec2> points, double tolerance) {
  std::sort(points.begin(), points.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  std::vector<Vec2> unique;
  for (const Vec2& p : points) {
    if (!unique.empty() && norm(p - unique.back()) <= tolerance) continue;
    unique.push_back(p);
  }
  if (unique.size() <= 2) {
    if (unique.size() == 2 && norm(unique[1] - unique[0]) <= tolerance) unique.pop_back();
    return unique;
  }
  // A middle vertex survives only if it sits more than `tolerance` left of the chord.
  auto turn = [](Vec2 o, Vec2 a, Vec2 b) { return cross(a - o, b - o); };

  std::vector<Vec2> hull(2 * unique.size());
  std::size_t k = 0;
  for (const Vec2& p : unique) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= tolerance * norm(p - hull[k - 2])) --k;
    hull[k++] = p;
  }
  for (std::size_t i = unique.size() - 1, lower = k + 1; i-- > 0;) {
    const Vec2 p = unique[i];
    while (k >= lower && turn(hull[k - 2], hull[k - 1], p) <= tolerance * norm(p - hull[k - 2])) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  // Dedupe the closing seam and collapse a degenerate chain to its extremes.
  while (hull.size() > 1 && norm(hull.back() - hull.front()) <= tolerance) hull.pop_back();
  return hull;
}

HullPolygon make_polygon(Vec2 base, std::vector<Vec2> points, double tolerance) {
  HullPolygon p;
  p.base = base;
  p.vertices = convex_hull(std::move(points), tolerance);
  p.degenerate = p.vertices.size() < 3;
  return p;
}

std::vector<double> polygon_support(const std::vector<Vec2>& vertices, Vec2 base, const DirectionGrid& grid) {
  return kernels::max_projection(grid, base, vertices, Exec::serial);
}

double polygon_support_at(const std::vector<Vec2>& vertices, Vec2 base, double angle) {
  const Vec2 u = unit(angle);
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec2& v : vertices) best = std::max(best, dot(v - base, u));
  return best;
}

ExtractResult extract_polygon(const WidthSamples& w, double jump_threshold) {
  const double radius = circumradius(w);
  ExtractResult result;
  result.merge_tolerance = 1e-9 * std::max(radius, 1e-300);
  result.kinks = detect_kinks(w, jump_threshold);
  const long n = static_cast<long>(w.values.size());
  const double step = w.grid.step();
  const double fit_tol = w.total_slack() + 1e-12;

  std::vector<Vec2> points;
  const auto& kinks = result.kinks.kinks;
  if (kinks.size() < 2) {
    result.method = ExtractionMethod::dense;
    for (long g = 0; g < n; ++g) points.push_back(grid_support_point(w, g));
  } else {
    result.method = ExtractionMethod::kinks;
    for (std::size_t m = 0; m < kinks.size(); ++m) {
      const double lo = kinks[m].angle;
      double hi = kinks[(m + 1) % kinks.size()].angle;
      if (hi <= lo) hi += kTwoPi;
      const long g_lo = static_cast<long>(std::ceil((lo - 0.05 * step) / step));
      const long g_hi = static_cast<long>(std::floor((hi + 0.05 * step) / step));
      std::vector<long> nodes;
      for (long g = g_lo; g <= g_hi; ++g) nodes.push_back(g);

      const auto vertex = fit_vertex(w, nodes);
      bool fits = vertex.has_value();
      if (fits) {
        for (long g : nodes) {
          const auto k = static_cast<std::size_t>(((g % n) + n) % n);
          if (std::abs(dot(*vertex, w.grid.direction(k)) - w.values[k]) > fit_tol) {
            fits = false;
            break;
          }
        }
      }
      if (fits) {
        points.push_back(w.base + *vertex);
      } else {
        ++result.sampled_arcs;
        for (long g : nodes) points.push_back(grid_support_point(w, g));
      }
    }
  }

  result.polygon = make_polygon(w.base, std::move(points), result.merge_tolerance);
  const std::vector<double> poly_h = polygon_support(result.polygon.vertices, w.base, w.grid);
  for (std::size_t g = 0; g < poly_h.size(); ++g)
    result.support_deviation = std::max(result.support_deviation, std::abs(poly_h[g] - w.values[g]));
  return result;
}

double polygon_area(const HullPolygon& p) {
  const auto& v = p.vertices;
  if (v.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) twice += cross(v[i], v[(i + 1) % v.size()]);
  return std::abs(0.5 * twice);
}

double polygon_perimeter(const HullPolygon& p) {
  const auto& v = p.vertices;
  if (v.size() < 2) return 0.0;
  double len = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) len += norm(v[(i + 1) % v.size()] - v[i]);
  return len;
}

}  // namespace ifshull
