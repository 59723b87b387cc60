#include <doctest.h>

#include <cmath>

#include "ifshull/grid.hpp"
#include "ifshull/io.hpp"
#include "support.hpp"

using namespace ifshull;
using testing::planar;

TEST_CASE("operator norm of small matrices") {
  CHECK(operator_norm(Matrix::from_rows({{-0.3}})) == doctest::Approx(0.3));
  // diag(0.5, 0.2) rotated: norm is the largest singular value
  CHECK(operator_norm(Matrix::from_rows({{0.0, -0.5}, {0.2, 0.0}})) == doctest::Approx(0.5).epsilon(1e-14));
  // rank one [[1,1],[1,1]]/4 has norm 1/2
  CHECK(operator_norm(Matrix::from_rows({{0.25, 0.25}, {0.25, 0.25}})) == doctest::Approx(0.5).epsilon(1e-14));
  // 3x3 diagonal via power iteration
  CHECK(operator_norm(Matrix::from_rows({{0.1, 0, 0}, {0, -0.7, 0}, {0, 0, 0.3}})) ==
        doctest::Approx(0.7).epsilon(1e-10));
}

TEST_CASE("validate_ifs rejects bad systems") {
  CHECK_THROWS_AS(validate_ifs({}), InvalidInput);
  CHECK_THROWS_WITH_AS(validate_ifs({planar(1, 0, 0, 1, 0, 0)}), doctest::Contains("map 1 not contracting"),
                       InvalidInput);
  CHECK_THROWS_AS(validate_ifs({planar(0.5, 0, 0, 0.5, 0, 0),
                                AffineMap(Matrix::from_rows({{0.5}}), Vector{0.0})}),
                  InvalidInput);
  CHECK_THROWS_AS(validate_ifs({planar(0.5, 0, 0, 0.5, NAN, 0)}), InvalidInput);
  const IFS ok = validate_ifs({planar(0.5, 0, 0, 0.5, 0, 0), planar(0, 0.6, -0.6, 0, 1, 0)});
  CHECK(ok.contraction() == doctest::Approx(0.6));
  CHECK(ok.dim() == 2);
}

TEST_CASE("fixed points are fixed") {
  const AffineMap m = planar(0.3, -0.4, 0.4, 0.3, 1.0, -2.0);
  const Vector p = map_fixed_point(m);
  const Vector q = m.apply(p);
  CHECK(q[0] == doctest::Approx(p[0]).epsilon(1e-14));
  CHECK(q[1] == doctest::Approx(p[1]).epsilon(1e-14));
}

TEST_CASE("complex base IFS uses multiplication by 1/z") {
  const IFS ifs = complex_base_ifs({1.0, 1.0}, 2);
  REQUIRE(ifs.size() == 2);
  // 1/(1+i) = (1-i)/2
  const Matrix& a = ifs[0].linear();
  CHECK(a(0, 0) == doctest::Approx(0.5));
  CHECK(a(0, 1) == doctest::Approx(0.5));
  CHECK(a(1, 0) == doctest::Approx(-0.5));
  CHECK(a(1, 1) == doctest::Approx(0.5));
  CHECK(ifs[1].translation()[0] == doctest::Approx(0.5));
  CHECK(ifs[1].translation()[1] == doctest::Approx(-0.5));
  CHECK(ifs.contraction() == doctest::Approx(std::sqrt(0.5)));
  CHECK_THROWS_AS(complex_base_ifs({0.5, 0.0}, 2), InvalidInput);
  CHECK_THROWS_AS(complex_base_ifs({2.0, 0.0}, 1), InvalidInput);
}

TEST_CASE("chaos game is deterministic and stays in the attractor box") {
  const IFS sq = testing::unit_square_ifs();
  const auto a = chaos_game_sample(sq, 5000, 42);
  const auto b = chaos_game_sample(sq, 5000, 42);
  const auto c = chaos_game_sample(sq, 5000, 43);
  REQUIRE(a.points.size() == 5000);
  CHECK(a.points == b.points);
  CHECK(a.points != c.points);
  for (const auto& p : a.points) {
    CHECK(p[0] >= 0.0);
    CHECK(p[0] <= 1.0);
    CHECK(p[1] >= 0.0);
    CHECK(p[1] <= 1.0);
  }
}

TEST_CASE("direction grid and periodic interpolation") {
  CHECK_THROWS_AS(DirectionGrid(63), InvalidInput);
  CHECK_THROWS_AS(DirectionGrid(66 + 1), InvalidInput);
  const DirectionGrid g(64);
  CHECK(g.direction(16).x == 0.0);
  CHECK(g.direction(16).y == 1.0);
  CHECK(g.direction(32).x == -1.0);
  CHECK(g.direction(48).y == -1.0);
  std::vector<double> v(64);
  for (std::size_t i = 0; i < 64; ++i) v[i] = static_cast<double>(i);
  CHECK(interpolate_periodic(v, g.angle(5)) == 5.0);
  CHECK(interpolate_periodic(v, g.angle(5) + 0.5 * g.step()) == doctest::Approx(5.5));
  // wraps between the last node and node 0
  CHECK(interpolate_periodic(v, -0.5 * g.step()) == doctest::Approx(31.5));
}
