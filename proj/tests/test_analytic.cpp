#include <doctest.h>

#include <cmath>

#include "ifshull/analytic.hpp"
#include "ifshull/hull.hpp"
#include "ifshull/width.hpp"
#include "support.hpp"

using namespace ifshull;

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

TEST_CASE("rational angle detection") {
  const auto third = detect_rational_angle(kPi / 3);
  REQUIRE(third);
  CHECK(third->l == 1);
  CHECK(third->k == 3);
  const auto neg = detect_rational_angle(-kPi / 2);
  REQUIRE(neg);
  CHECK(neg->l == -1);
  CHECK(neg->k == 2);
  CHECK_FALSE(detect_rational_angle(1.0));
  CHECK_FALSE(detect_rational_angle(kPi / 65.0));
}

TEST_CASE("complex base system validation") {
  CHECK_THROWS_AS(ComplexBaseSystem({1.0, 0.0}, 2), InvalidInput);
  CHECK_THROWS_AS(ComplexBaseSystem({2.0, 0.0}, 1), InvalidInput);
  // declared 2/8 reduces to 1/4
  const ComplexBaseSystem td({1.0, 1.0}, 2, RationalAngle{2, 8});
  REQUIRE(td.rational_angle());
  CHECK(td.rational_angle()->l == 1);
  CHECK(td.rational_angle()->k == 4);
  CHECK_THROWS_AS(ComplexBaseSystem({1.0, 1.0}, 2, RationalAngle{1, 3}), InvalidInput);
  // an irrational declaration wins over auto-detection for equivalent angles: 9/4 pi == 1/4 pi mod 2 pi
  CHECK_NOTHROW(ComplexBaseSystem({1.0, 1.0}, 2, RationalAngle{9, 4}));
}

TEST_CASE("twindragon closed forms (frozen values)") {
  const ComplexBaseSystem td({1.0, 1.0}, 2);
  const Vec2 c = symmetry_center(td);
  CHECK(c.x == doctest::Approx(0.0));
  CHECK(c.y == doctest::Approx(-0.5));
  CHECK(rational_width(td, 0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(rational_width(td, kPi / 2) == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
  const auto series = centered_width(td, 0.0, 1e-14);
  CHECK(std::abs(series.value - 2.0 / 3.0) <= series.error_bound + 1e-15);
  CHECK(hull_perimeter(td) == doctest::Approx(2.0 + 2.0 * kSqrt2).epsilon(1e-14));
  const auto area = hull_area(td, 1e-14);
  CHECK(std::abs(area.value - 5.0 / 3.0) <= area.error_bound + 1e-14);

  const auto exact = exact_polygon(td);
  CHECK(exact.polygon.vertices.size() == 8);
  CHECK(exact.closure_gap <= 1e-12);
  CHECK(polygon_area(exact.polygon) == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
  CHECK(polygon_perimeter(exact.polygon) == doctest::Approx(2.0 + 2.0 * kSqrt2).epsilon(1e-12));
  // the polygon's own support function reproduces the closed form everywhere
  for (double a = 0.05; a < kTwoPi; a += 0.37)
    CHECK(polygon_support_at(exact.polygon.vertices, c, a) == doctest::Approx(rational_width(td, a)).epsilon(1e-12));
}

TEST_CASE("base 2i: a rectangle of area 2/9") {
  const ComplexBaseSystem sys({0.0, 2.0}, 2);
  const auto area = hull_area(sys, 1e-14);
  CHECK(std::abs(area.value - 2.0 / 9.0) <= area.error_bound + 1e-14);
  const auto exact = exact_polygon(sys);
  CHECK(polygon_area(exact.polygon) == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
  CHECK(polygon_perimeter(exact.polygon) == doctest::Approx(hull_perimeter(sys)).epsilon(1e-12));
}

TEST_CASE("width series agrees with a brute-force address oracle for an irrational angle") {
  const std::complex<double> z = std::polar(1.7, 1.0);
  const ComplexBaseSystem sys(z, 3);
  CHECK_FALSE(sys.rational_angle());
  const IFS ifs = complex_base_ifs(z, 3);
  const auto pts = testing::address_points(ifs, 11);
  const Vec2 c = symmetry_center(sys);
  // radius of the attractor about c is below (n-1)/(r-1); depth 11 error is that times r^-11
  const double depth_err = 2.0 / 0.7 * std::pow(1.7, -11.0);
  for (double a : {0.0, 0.8, 2.0, 3.3, 5.0}) {
    const double oracle = testing::max_projection(pts, c, a);
    const auto v = centered_width(sys, a, 1e-12);
    CHECK(v.value >= oracle - 1e-12);
    CHECK(v.value <= oracle + depth_err + v.error_bound);
  }
}

TEST_CASE("irrational polygon approximates the hull from inside") {
  const ComplexBaseSystem sys(std::polar(2.0, 1.0), 2);
  const auto poly = irrational_polygon(sys, 1e-9);
  const auto area = hull_area(sys, 1e-12);
  CHECK(polygon_area(poly.polygon) <= area.value + area.error_bound + 1e-9);
  CHECK(polygon_area(poly.polygon) == doctest::Approx(area.value).epsilon(1e-6));
  CHECK(polygon_perimeter(poly.polygon) == doctest::Approx(hull_perimeter(sys)).epsilon(1e-6));
}

TEST_CASE("equal-matrix width series") {
  const Matrix half = Matrix::from_rows({{0.5, 0.0}, {0.0, 0.5}});
  const std::vector<Vector> corners{{0, 0}, {0.5, 0}, {0, 0.5}, {0.5, 0.5}};
  const auto w = equal_maps_width(half, corners, Vector{1.0, 0.0}, 1e-12);
  CHECK(std::abs(w.value - 1.0) <= w.error_bound + 1e-15);
  const auto diag = equal_maps_width(half, corners, Vector{1.0, 1.0}, 1e-12);
  CHECK(std::abs(diag.value - 2.0) <= diag.error_bound + 1e-15);
  // the transpose matters for a non-normal matrix: compare with the grid solver, whose
  // operator samples off-grid angles and so carries its interpolation slack
  const Matrix a = Matrix::from_rows({{0.3, 0.4}, {0.0, 0.3}});
  const std::vector<Vector> ts{{0, 0}, {1, 0}, {0, 1}};
  std::vector<AffineMap> maps;
  for (const auto& t : ts) maps.emplace_back(a, t);
  const auto grid = solve_width(validate_ifs(maps), 1024, 1e-12);
  for (std::size_t g : {0u, 100u, 300u, 700u}) {
    const Vec2 d = grid.grid.direction(g);
    const auto s = equal_maps_width(a, ts, Vector{d.x, d.y}, 1e-12);
    CHECK(std::abs(s.value - grid.values[g]) <= grid.total_slack() + s.error_bound);
  }
  double wrong = 0.0;
  for (std::size_t g = 0; g < grid.grid.size(); g += 16) {
    const Vec2 d = grid.grid.direction(g);
    const auto s = equal_maps_width(a.transposed(), ts, Vector{d.x, d.y}, 1e-12);
    wrong = std::max(wrong, std::abs(s.value - grid.values[g]));
  }
  CHECK(wrong > 10.0 * grid.total_slack());
  // three dimensions
  const Matrix third = Matrix::from_rows({{1.0 / 3, 0, 0}, {0, 1.0 / 3, 0}, {0, 0, 1.0 / 3}});
  const auto cube = equal_maps_width(third, {{0, 0, 0}, {2.0 / 3, 2.0 / 3, 2.0 / 3}}, Vector{0, 0, 1}, 1e-12);
  CHECK(cube.value == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("perimeter formula is independent of the angle") {
  for (double phi : {0.3, 1.0, 2.0}) {
    const ComplexBaseSystem sys(std::polar(1.5, phi), 3);
    CHECK(hull_perimeter(sys) == doctest::Approx(8.0));
  }
}

TEST_CASE("isodiametric gap") {
  CHECK_THROWS_AS(isodiametric_gap(1.0, 0.5), InvalidInput);
  CHECK(isodiametric_gap(2.0, 0.0) == doctest::Approx(3.0 / kPi).epsilon(1e-14));
  const auto serial = isodiametric_audit(1.05, 4.0, 12, 90, Exec::serial);
  const auto parallel = isodiametric_audit(1.05, 4.0, 12, 90, Exec::parallel);
  REQUIRE(serial.size() == 12 * 90);
  REQUIRE(parallel.size() == serial.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].gap == parallel[i].gap);
    CHECK(serial[i].gap >= -1e-12);
  }
}
