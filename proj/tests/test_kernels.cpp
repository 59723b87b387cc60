#include <doctest.h>

#include <random>

#include "ifshull/kernels.hpp"
#include "support.hpp"

using namespace ifshull;

namespace {

std::vector<Vec2> random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<Vec2> out(n);
  for (auto& p : out) p = {g(rng), g(rng)};
  return out;
}

}  // namespace

TEST_CASE("selfsim kernel: serial and parallel agree bit for bit") {
  const IFS ifs = complex_base_ifs(std::polar(1.6, 0.7), 3);
  const auto maps = planar_maps(ifs);
  const DirectionGrid grid(2048);
  std::vector<double> in(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) in[g] = 1.0 + 0.2 * std::sin(5 * grid.angle(g));
  std::vector<double> a(grid.size()), b(grid.size());
  kernels::selfsim_apply(maps, grid, in, a, Exec::serial);
  kernels::selfsim_apply(maps, grid, in, b, Exec::parallel);
  CHECK(a == b);
  CHECK(kernels::sup_distance(a, b, Exec::serial) == 0.0);
  CHECK(kernels::sup_distance(a, in, Exec::serial) == kernels::sup_distance(a, in, Exec::parallel));
}

TEST_CASE("point kernels agree and match direct loops") {
  const auto pts = random_points(3000, 1);
  const auto probes = random_points(50, 2);
  const DirectionGrid grid(128);
  const auto ms = kernels::max_projection(grid, {0.1, 0.2}, pts, Exec::serial);
  CHECK(ms == kernels::max_projection(grid, {0.1, 0.2}, pts, Exec::parallel));
  for (std::size_t g = 0; g < grid.size(); g += 9)
    CHECK(ms[g] == doctest::Approx(testing::max_projection(pts, {0.1, 0.2}, grid.angle(g))).epsilon(1e-14));

  const auto ex = kernels::support_excess(grid, {0.1, 0.2}, ms, pts, Exec::serial);
  CHECK(ex == kernels::support_excess(grid, {0.1, 0.2}, ms, pts, Exec::parallel));
  for (double e : ex) CHECK(e <= 0.0);

  const auto ds = kernels::nearest_distance(probes, pts, Exec::serial);
  CHECK(ds == kernels::nearest_distance(probes, pts, Exec::parallel));
  double brute = 1e300;
  for (const Vec2& p : pts) brute = std::min(brute, norm(p - probes[0]));
  CHECK(ds[0] == brute);
}
