#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "ifshull/ifs.hpp"
#include "ifshull/linalg.hpp"

namespace testing {

using namespace ifshull;

inline AffineMap planar(double a00, double a01, double a10, double a11, double t0, double t1) {
  return AffineMap(Matrix::from_rows({{a00, a01}, {a10, a11}}), Vector{t0, t1});
}

inline IFS unit_square_ifs() {
  std::vector<AffineMap> maps;
  for (double ty : {0.0, 0.5})
    for (double tx : {0.0, 0.5}) maps.push_back(planar(0.5, 0, 0, 0.5, tx, ty));
  return validate_ifs(std::move(maps));
}

// Independent oracle: all images of a seed point under every address of length `depth`.
// The attractor lies within c^depth * R of this finite set.
inline std::vector<Vec2> address_points(const IFS& ifs, int depth) {
  std::vector<Vec2> pts{to_vec2(map_fixed_point(ifs[0]))};
  for (int level = 0; level < depth; ++level) {
    std::vector<Vec2> next;
    next.reserve(pts.size() * ifs.size());
    for (const AffineMap& m : ifs.maps())
      for (const Vec2& p : pts) next.push_back(to_vec2(m.apply(to_vector(p))));
    pts = std::move(next);
  }
  return pts;
}

inline double max_projection(const std::vector<Vec2>& pts, Vec2 base, double angle) {
  const Vec2 d{std::cos(angle), std::sin(angle)};
  double best = -1e300;
  for (const Vec2& p : pts) best = std::max(best, dot(p - base, d));
  return best;
}

}  // namespace testing
