#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ifshull/analytic.hpp"
#include "ifshull/hull.hpp"
#include "ifshull/ifs.hpp"

namespace ifshull {

/// Parsed IFS document: either explicit maps or a complex-base family.
struct IfsDocument {
  IFS ifs;
  std::optional<ComplexBaseSystem> complex_base;
};

/// Accepts {"dim": m, "maps": [{"A": [[...]], "t": [...]}, ...]} or
/// {"complex_base": {"z": [re, im], "n": n}} (optionally "rational_angle": [l, k]).
/// Throws InvalidInput on malformed JSON or anything validate_ifs rejects.
IfsDocument parse_ifs(const std::string& text);
IfsDocument load_ifs(const std::string& path);

std::string ifs_to_json(const IFS& ifs);

/// {"base":[x,y],"vertices":[[x,y],...]}
std::string polygon_to_json(const HullPolygon& p);

struct SvgScene {
  const HullPolygon* polygon = nullptr;
  std::span<const Vec2> cloud;
  Vec2 base;
  double radius = 1.0;
};

/// Viewport is the square of half-width 1.1 * radius around base, y axis flipped,
/// coordinates rounded to 6 decimals.
void write_svg(std::ostream& os, const SvgScene& scene);

}  // namespace ifshull
