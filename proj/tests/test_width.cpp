#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ifshull/width.hpp"
#include "support.hpp"

using namespace ifshull;
using testing::planar;

namespace {

double square_support(double angle) { return std::max(0.0, std::cos(angle)) + std::max(0.0, std::sin(angle)); }

WidthSamples constant_width(std::size_t n, double value) {
  WidthSamples w{DirectionGrid(n)};
  w.values.assign(n, value);
  return w;
}

}  // namespace

TEST_CASE("unit square support function from the solver") {
  const IFS sq = testing::unit_square_ifs();
  const auto w = solve_width(sq, 512, 1e-10);
  double worst = 0.0;
  for (std::size_t g = 0; g < w.grid.size(); ++g)
    worst = std::max(worst, std::abs(w.values[g] - square_support(w.grid.angle(g))));
  CHECK(worst <= w.iter_error + 1e-12);
  // between nodes the interpolation slack bounds the error
  for (double a : {0.1234, 1.0, 2.5, 4.0, 5.9}) CHECK(std::abs(eval_width(w, a) - square_support(a)) <= w.total_slack());
  CHECK(w.iterations <= solve_iteration_bound(sq, 1e-10));
}

TEST_CASE("twindragon width against a brute-force address oracle") {
  const IFS td = complex_base_ifs({1.0, 1.0}, 2);
  const auto w = solve_width(td, 1024, 1e-8);
  // depth 18: c^18 = 2^-9, attractor radius < 1.5
  const auto pts = testing::address_points(td, 18);
  const double depth_err = std::pow(std::sqrt(0.5), 18) * 1.5;
  for (std::size_t g = 0; g < w.grid.size(); g += 37) {
    const double oracle = testing::max_projection(pts, {}, w.grid.angle(g));
    CHECK(w.values[g] >= oracle - w.iter_error - 1e-12);
    CHECK(w.values[g] <= oracle + depth_err + w.iter_error);
  }
}

TEST_CASE("self-similarity operator is a c-contraction and monotone") {
  const IFS ifs = validate_ifs({planar(0.4, -0.3, 0.2, 0.5, 0.1, 0.0), planar(-0.5, 0.1, 0.0, 0.3, 1.0, 0.7)});
  const std::size_t n = 256;
  WidthSamples f = constant_width(n, 0.0);
  WidthSamples g = constant_width(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = f.grid.angle(i);
    f.values[i] = 1.0 + 0.3 * std::cos(3 * a);
    g.values[i] = f.values[i] + 0.5 + 0.2 * std::sin(a);  // g >= f everywhere
  }
  const auto tf = selfsim_operator(ifs, f);
  const auto tg = selfsim_operator(ifs, g);
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    lhs = std::max(lhs, std::abs(tf.values[i] - tg.values[i]));
    rhs = std::max(rhs, std::abs(f.values[i] - g.values[i]));
    CHECK(tg.values[i] >= tf.values[i] - 1e-15);
  }
  CHECK(lhs <= ifs.contraction() * rhs + 1e-12);
}

TEST_CASE("operator preconditions") {
  const IFS sq = testing::unit_square_ifs();
  auto w = constant_width(64, 1.0);
  w.base = {0.5, 0.5};
  CHECK_THROWS_AS(selfsim_operator(sq, w), InvalidInput);
  CHECK_THROWS_AS(solve_width(sq, 64, 0.0), InvalidInput);
  const IFS one_d = validate_ifs({AffineMap(Matrix::from_rows({{0.5}}), Vector{0.0})});
  CHECK_THROWS_AS(solve_width(one_d), InvalidInput);
}

TEST_CASE("serial and parallel solves are bit-identical") {
  const IFS td = complex_base_ifs({1.0, 1.0}, 2);
  const auto a = solve_width(td, 512, 1e-8, Exec::serial);
  const auto b = solve_width(td, 512, 1e-8, Exec::parallel);
  CHECK(a.values == b.values);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("rebasing shifts by the projection of the base change") {
  const IFS sq = testing::unit_square_ifs();
  const auto w = solve_width(sq, 256, 1e-10);
  const auto r = rebase_width(w, {0.5, 0.5});
  for (std::size_t g = 0; g < w.grid.size(); ++g) {
    const Vec2 d = w.grid.direction(g);
    CHECK(r.values[g] == doctest::Approx(w.values[g] - 0.5 * (d.x + d.y)).epsilon(1e-14));
  }
  CHECK(circumradius(r) == doctest::Approx(std::sqrt(0.5)).epsilon(r.total_slack()));
  CHECK(circumradius(r) >= std::sqrt(0.5) - 1e-9);
  CHECK_THROWS_AS(circumradius(rebase_width(w, {3.0, 3.0})), InvalidInput);
}

TEST_CASE("radius function of the centered square") {
  const auto w = rebase_width(solve_width(testing::unit_square_ifs(), 1024, 1e-10), {0.5, 0.5});
  CHECK(radius_from_width(w, 0.0).radius == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(radius_from_width(w, kPi / 4).radius == doctest::Approx(std::sqrt(0.5)).epsilon(1e-3));
}

TEST_CASE("hull containment") {
  const auto w = solve_width(testing::unit_square_ifs(), 256, 1e-10);
  CHECK(hull_contains(w, {0.5, 0.5}, 0.0));
  CHECK(hull_contains(w, {1.0, 1.0}, w.total_slack()));
  CHECK_FALSE(hull_contains(w, {1.1, 0.5}, w.total_slack()));
  CHECK_FALSE(hull_contains(w, {-0.2, -0.2}, w.total_slack()));
}

TEST_CASE("width of a point set") {
  const std::vector<Vec2> corners{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  const auto w = width_of_points(corners, 128);
  for (std::size_t g = 0; g < w.grid.size(); ++g)
    CHECK(w.values[g] == doctest::Approx(square_support(w.grid.angle(g))).epsilon(1e-14));
  CHECK_THROWS_AS(width_of_points(std::vector<Vec2>{}, 64), InvalidInput);
}

TEST_CASE("width CSV format") {
  const auto w = solve_width(testing::unit_square_ifs(), 64, 1e-8);
  std::ostringstream os;
  write_width_csv(os, w);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "angle,h");
  std::size_t rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 64);
}
