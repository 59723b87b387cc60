#include <doctest.h>

#include <cmath>
#include <random>

#include "ifshull/kernels.hpp"
#include "ifshull/query.hpp"
#include "support.hpp"

using namespace ifshull;

namespace {

struct Fixture {
  IFS ifs = complex_base_ifs({1.0, 1.0}, 2);
  WidthSamples width = solve_width(ifs, 1024, 1e-8);
  QueryContext ctx = build_context(ifs, width);
};

}  // namespace

TEST_CASE("context defaults") {
  Fixture f;
  CHECK(f.ctx.x0().x == doctest::Approx(0.0));
  CHECK(f.ctx.x0().y == doctest::Approx(-0.5));
  CHECK(f.ctx.c0_bound() == doctest::Approx(f.ctx.circumradius() / std::sqrt(2.0)));
  CHECK(f.ctx.complete());
  const auto safe = build_context(f.ifs, f.width, std::nullopt, C0Policy::safe);
  CHECK(safe.c0_bound() == doctest::Approx(2.0 * safe.circumradius()));
  CHECK_THROWS_AS(build_context(f.ifs, f.width, Vec2{5.0, 5.0}), InvalidInput);
}

TEST_CASE("attractor points are accepted, far points rejected at once") {
  Fixture f;
  const auto cloud = as_planar(chaos_game_sample(f.ifs, 200, 5));
  for (const Vec2& p : cloud) {
    CHECK(near1(f.ctx, p, 0.01).value);
    CHECK(near(f.ctx, p, 6).value);
  }
  const auto far = near1(f.ctx, {3.0, 3.0}, 0.01);
  CHECK_FALSE(far.value);
  CHECK(far.depth == 0);
  CHECK(far.calls == 1);
  CHECK_FALSE(quick_reject(f.ctx, {3.0, 3.0}));
  CHECK(quick_reject(f.ctx, f.ctx.x0()));
}

TEST_CASE("near1 is monotone in l and respects the depth bound") {
  Fixture f;
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 300; ++i) {
    const Vec2 x{u(rng), u(rng) - 0.5};
    bool prev = false;
    for (double l : {0.005, 0.02, 0.08, 0.3, 1.0}) {
      const auto r = near1(f.ctx, x, l);
      CHECK(r.depth <= near1_depth_bound(f.ctx, l));
      if (prev) CHECK(r.value);
      prev = r.value;
    }
  }
  CHECK_THROWS_AS(near1(f.ctx, {0, 0}, 0.0), InvalidInput);
  CHECK(near1_depth_bound(f.ctx, 10.0) == 0);
}

TEST_CASE("near results nest as k grows") {
  Fixture f;
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 300; ++i) {
    const Vec2 x{u(rng), u(rng) - 0.5};
    bool prev = true;
    for (int k = 0; k <= 8; ++k) {
      const bool now = near(f.ctx, x, k).value;
      if (!prev) CHECK_FALSE(now);
      prev = now;
    }
  }
  CHECK_THROWS_AS(near(f.ctx, {0, 0}, -1), InvalidInput);
}

TEST_CASE("near1 acceptance implies closeness to the attractor") {
  Fixture f;
  const auto cloud = as_planar(chaos_game_sample(f.ifs, 100000, 9));
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::vector<Vec2> probes;
  for (int i = 0; i < 200; ++i) probes.push_back({u(rng), u(rng) - 0.5});
  const auto dist = kernels::nearest_distance(probes, cloud);
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (near1(f.ctx, probes[i], 0.05).value) CHECK(dist[i] <= 0.05 + 0.02);
  }
}

TEST_CASE("singular maps are skipped and flagged") {
  const IFS ifs = validate_ifs({testing::planar(0.0, 0.0, 0.0, 0.16, 0.0, 0.0),
                                testing::planar(0.85, 0.04, -0.04, 0.85, 0.0, 1.6),
                                testing::planar(0.2, -0.26, 0.23, 0.22, 0.0, 1.6),
                                testing::planar(-0.15, 0.28, 0.26, 0.24, 0.0, 0.44)});
  const auto ctx = build_context(ifs, solve_width(ifs, 512, 1e-6));
  REQUIRE(ctx.singular_maps().size() == 1);
  CHECK(ctx.singular_maps()[0] == 0);
  CHECK(ctx.inverses().size() == 3);
  CHECK_FALSE(ctx.complete());
  CHECK_FALSE(near1(ctx, ctx.x0(), 0.1).complete);
}
