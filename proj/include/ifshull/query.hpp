#pragma once

#include <optional>
#include <vector>

#include "ifshull/ifs.hpp"
#include "ifshull/width.hpp"

namespace ifshull {

/// Which upper bound to use for C0 = rho(L_x0, K).
enum class C0Policy {
  compact,  ///< R / sqrt(2)
  safe,   ///< 2 R, from L_x0 and K both inside B(x0, R)
};

struct InverseMap {
  std::size_t index = 0;  ///< position in the IFS
  double inv00, inv01, inv10, inv11;
  double t0, t1;
  double contraction = 0.0;
};

/// Immutable state shared by the proximity predicates.
class QueryContext {
 public:
  const IFS& ifs() const { return ifs_; }
  const WidthSamples& width() const { return width_; }
  Vec2 x0() const { return width_.base; }
  double circumradius() const { return radius_; }
  double c0_bound() const { return c0_bound_; }
  double slack() const { return slack_; }
  double contraction() const { return contraction_; }
  const std::vector<InverseMap>& inverses() const { return inverses_; }
  const std::vector<std::size_t>& singular_maps() const { return singular_; }
  /// False when singular maps were dropped, so a negative answer may be spurious.
  bool complete() const { return singular_.empty(); }

 private:
  friend QueryContext build_context(const IFS&, const WidthSamples&, std::optional<Vec2>, C0Policy);
  QueryContext(IFS ifs, WidthSamples w) : ifs_(std::move(ifs)), width_(std::move(w)) {}

  IFS ifs_;
  WidthSamples width_;
  double radius_ = 0.0;
  double c0_bound_ = 0.0;
  double slack_ = 0.0;
  double contraction_ = 0.0;
  std::vector<InverseMap> inverses_;
  std::vector<std::size_t> singular_;
};

/// Rebases the solved width function to x0 (default: centroid of the per-map fixed points).
QueryContext build_context(const IFS& ifs, const WidthSamples& w, std::optional<Vec2> x0 = std::nullopt,
                           C0Policy policy = C0Policy::compact);

/// Single-direction test |x - x0| <= h_x0(angle of x - x0) + slack. True means x is in
/// L_x0 up to slack; false certifies x is outside the hull.
bool quick_reject(const QueryContext& ctx, Vec2 x);

struct QueryResult {
  bool value = false;
  /// Deepest recursion level visited (0 = only the quick test ran).
  int depth = 0;
  std::size_t calls = 0;
  bool complete = true;
};

/// x in I^k(L_x0)?  True implies dist(x, K) <= C0 c^k + slack.
QueryResult near(const QueryContext& ctx, Vec2 x, int k);

/// True certifies dist(x, K) <= l + slack.
QueryResult near1(const QueryContext& ctx, Vec2 x, double l);

/// ceil(log(C0 / l) / log(1 / c)), the maximal recursion depth of near1.
int near1_depth_bound(const QueryContext& ctx, double l);

}  // namespace ifshull
