#include "ifshull/query.hpp"

#include <algorithm>
#include <cmath>

namespace ifshull {

namespace {

Vec2 pull_back(const InverseMap& m, Vec2 x) {
  const double dx = x.x - m.t0;
  const double dy = x.y - m.t1;
  return {m.inv00 * dx + m.inv01 * dy, m.inv10 * dx + m.inv11 * dy};
}

bool near_rec(const QueryContext& ctx, Vec2 x, int k, int level, QueryResult& res) {
  ++res.calls;
  res.depth = std::max(res.depth, level);
  if (!quick_reject(ctx, x)) return false;
  if (k == 0) return true;
  for (const InverseMap& m : ctx.inverses())
    if (near_rec(ctx, pull_back(m, x), k - 1, level + 1, res)) return true;
  return false;
}

bool near1_rec(const QueryContext& ctx, Vec2 x, double l, int level, QueryResult& res) {
  ++res.calls;
  res.depth = std::max(res.depth, level);
  if (!quick_reject(ctx, x)) return false;
  if (l >= ctx.c0_bound()) return true;
  for (const InverseMap& m : ctx.inverses())
    if (near1_rec(ctx, pull_back(m, x), l / m.contraction, level + 1, res)) return true;
  return false;
}

}  // namespace

QueryContext build_context(const IFS& ifs, const WidthSamples& w, std::optional<Vec2> x0, C0Policy policy) {
  if (ifs.dim() != 2) throw InvalidInput("queries need a 2D IFS");
  Vec2 base{};
  if (x0) {
    base = *x0;
  } else {
    for (const AffineMap& m : ifs.maps()) base = base + to_vec2(map_fixed_point(m));
    base = (1.0 / static_cast<double>(ifs.size())) * base;
  }
  QueryContext ctx(ifs, rebase_width(w, base));
  ctx.slack_ = ctx.width_.total_slack();
  if (!hull_contains(ctx.width_, base, ctx.slack_)) throw InvalidInput("x0 is not inside the hull");
  ctx.radius_ = circumradius(ctx.width_);
  ctx.c0_bound_ = policy == C0Policy::compact ? ctx.radius_ / std::sqrt(2.0) : 2.0 * ctx.radius_;

  for (std::size_t i = 0; i < ifs.size(); ++i) {
    const Matrix& a = ifs[i].linear();
    const double det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const double scale = std::max({std::abs(a(0, 0)), std::abs(a(0, 1)), std::abs(a(1, 0)), std::abs(a(1, 1))});
    if (scale == 0.0 || std::abs(det) <= 1e-12 * scale * scale) {
      ctx.singular_.push_back(i);
      continue;
    }
    ctx.inverses_.push_back({i, a(1, 1) / det, -a(0, 1) / det, -a(1, 0) / det, a(0, 0) / det,
                             ifs[i].translation()[0], ifs[i].translation()[1], ifs[i].contraction()});
    ctx.contraction_ = std::max(ctx.contraction_, ifs[i].contraction());
  }
  return ctx;
}

bool quick_reject(const QueryContext& ctx, Vec2 x) {
  const Vec2 rel = x - ctx.x0();
  const double dist = norm(rel);
  if (dist == 0.0) return true;
  return dist <= eval_width(ctx.width(), std::atan2(rel.y, rel.x)) + ctx.slack();
}

QueryResult near(const QueryContext& ctx, Vec2 x, int k) {
  if (k < 0) throw InvalidInput("near needs k >= 0");
  QueryResult res;
  res.complete = ctx.complete();
  res.value = near_rec(ctx, x, k, 0, res);
  return res;
}

QueryResult near1(const QueryContext& ctx, Vec2 x, double l) {
  if (!(l > 0.0)) throw InvalidInput("near1 needs l > 0");
  QueryResult res;
  res.complete = ctx.complete();
  res.value = near1_rec(ctx, x, l, 0, res);
  return res;
}

int near1_depth_bound(const QueryContext& ctx, double l) {
  if (l >= ctx.c0_bound() || ctx.contraction() == 0.0) return 0;
  return static_cast<int>(std::ceil(std::log(ctx.c0_bound() / l) / std::log(1.0 / ctx.contraction())));
}

}  // namespace ifshull
