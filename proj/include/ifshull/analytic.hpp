#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "ifshull/hull.hpp"
#include "ifshull/kernels.hpp"
#include "ifshull/linalg.hpp"

namespace ifshull {

/// A truncated series value together with its certified absolute error bound.
struct SeriesValue {
  double value = 0.0;
  double error_bound = 0.0;
  std::size_t terms = 0;
};

/// phi = pi * l / k with gcd(|l|, k) = 1, k >= 1.
struct RationalAngle {
  long l = 0;
  long k = 1;
};

/// The attractor of K z = union_{i<n} (K + i): fractional parts in radix z with digits 0..n-1.
class ComplexBaseSystem {
 public:
  /// Validates |z| > 1 and n >= 2. A declared angle is reduced to lowest terms and checked
  /// against arg z; without one, arg z / pi is tested for a rational with denominator <= 64.
  ComplexBaseSystem(std::complex<double> z, int n, std::optional<RationalAngle> declared = std::nullopt);

  std::complex<double> z() const { return z_; }
  int digits() const { return n_; }
  double modulus() const { return std::abs(z_); }
  double angle() const { return std::arg(z_); }
  const std::optional<RationalAngle>& rational_angle() const { return rational_; }

 private:
  std::complex<double> z_;
  int n_;
  std::optional<RationalAngle> rational_;
};

/// Detects phi / pi = l / k with k <= max_denominator within 1e-12.
std::optional<RationalAngle> detect_rational_angle(double phi, long max_denominator = 64);

/// One edge triangle of the hull: normal angle pi/2 - j*phi, distance a from the centre,
/// and signed extents b (counterclockwise) and c (clockwise) along the edge.
struct TriangleParams {
  int j = 0;
  double angle = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Width of the attractor of {x -> A x + t_i} in direction d, from the series
/// sum_{i>=0} h*((A^T)^i d) with h*(e) = max_j t_j . e. Any dimension.
SeriesValue equal_maps_width(const Matrix& a, const std::vector<Vector>& ts, const Vector& d, double tol);

/// (n - 1) / (2 (z - 1))
Vec2 symmetry_center(const ComplexBaseSystem& sys);

/// h(alpha) = (n-1)/2 * sum_{j>=1} r^{-j} |cos(alpha + j phi)| around the symmetry centre.
SeriesValue centered_width(const ComplexBaseSystem& sys, double alpha, double tol);

/// Finite form of centered_width for phi = pi l / k.
double rational_width(const ComplexBaseSystem& sys, double alpha);

struct ExactPolygon {
  HullPolygon polygon;
  std::vector<TriangleParams> triangles;
  /// Edge directions that coincided modulo 2 pi and were merged.
  std::size_t merged_edges = 0;
  double closure_gap = 0.0;
};

/// Polygon assembled from the k edge triangles and their antipodes. Requires a rational angle.
ExactPolygon exact_polygon(const ComplexBaseSystem& sys);

/// Hull of the truncated infinite edge family; support function within tol of the true width.
ExactPolygon irrational_polygon(const ComplexBaseSystem& sys, double tol);

/// 2 (n - 1) / (r - 1), independent of phi.
double hull_perimeter(const ComplexBaseSystem& sys);

/// (n-1)^2 / (r^2 - 1) * sum_{v>0} |sin(v phi)| r^{-v}
SeriesValue hull_area(const ComplexBaseSystem& sys, double tol);

/// (1/pi)(r+1)/(r-1) - sum_{j>0} |sin(j phi)| r^{-j}; nonnegative by the isoperimetric inequality.
double isodiametric_gap(double r, double phi);

struct AuditRow {
  double r = 0.0;
  double phi = 0.0;
  double gap = 0.0;
};

/// r log-spaced over [r_min, r_max] (r_count values), phi = 2 pi q / phi_count.
std::vector<AuditRow> isodiametric_audit(double r_min = 1.05, double r_max = 4.0, std::size_t r_count = 60,
                                         std::size_t phi_count = 720, Exec exec = Exec::parallel);

}  // namespace ifshull
