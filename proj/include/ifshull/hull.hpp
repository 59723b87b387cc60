#pragma once

#include <stdexcept>
#include <vector>

#include "ifshull/width.hpp"

namespace ifshull {

/// Convex polygon, vertices counterclockwise. Fewer than 3 vertices means a point or a
/// segment and sets `degenerate`.
struct HullPolygon {
  Vec2 base;
  std::vector<Vec2> vertices;
  bool degenerate = false;
};

/// A corner of the width function: it sits at a local minimum with a positive
/// derivative jump, and corresponds to a straight edge of the hull whose length is `jump`.
struct Kink {
  double angle = 0.0;
  double left_derivative = 0.0;
  double right_derivative = 0.0;
  double jump = 0.0;
};

struct KinkReport {
  std::vector<Kink> kinks;
  double threshold = 0.0;
};

/// Raised when a support point is requested at a direction that supports a whole edge.
class AmbiguousSupportPoint : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Default jump threshold: a multiple of the second-difference noise floor, which is
/// 4*iter_error/step from the iteration and R*step from arc curvature.
double default_kink_threshold(const WidthSamples& w);

/// Scans second differences for clusters of positive curvature concentrated at a point.
/// Pass threshold <= 0 for the default.
KinkReport detect_kinks(const WidthSamples& w, double jump_threshold = 0.0);

/// base + h(t) u(t) + h'(t) u_perp(t), h' by a central difference one grid step wide.
Vec2 support_point(const WidthSamples& w, double angle);

enum class ExtractionMethod { kinks, dense };

struct ExtractResult {
  HullPolygon polygon;
  KinkReport kinks;
  ExtractionMethod method = ExtractionMethod::kinks;
  /// Number of smooth arcs that did not fit a single vertex and were sampled instead.
  std::size_t sampled_arcs = 0;
  /// max_g | max_v (v - base).d_g - h_g |
  double support_deviation = 0.0;
  double merge_tolerance = 0.0;
};

ExtractResult extract_polygon(const WidthSamples& w, double jump_threshold = 0.0);

double polygon_area(const HullPolygon& p);
/// Closed traversal length; a segment counts twice.
double polygon_perimeter(const HullPolygon& p);

/// Monotone-chain convex hull, counterclockwise, dropping duplicates and vertices within
/// `tolerance` of the line through their neighbours.
std::vector<Vec2> convex_hull(std::vector<Vec2> points, double tolerance = 0.0);

HullPolygon make_polygon(Vec2 base, std::vector<Vec2> points, double tolerance = 0.0);

/// Support function of the polygon vertices on the grid, relative to `base`.
std::vector<double> polygon_support(const std::vector<Vec2>& vertices, Vec2 base, const DirectionGrid& grid);

/// Support function of the polygon at a single angle.
double polygon_support_at(const std::vector<Vec2>& vertices, Vec2 base, double angle);

}  // namespace ifshull
