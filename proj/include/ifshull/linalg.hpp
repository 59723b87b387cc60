#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifshull {

/// Error raised for malformed or out-of-contract inputs.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Error raised when an internal guard trips (should be unreachable for valid input).
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Vector = std::vector<double>;

/// Square m x m matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {}
  Matrix(std::size_t dim, std::vector<double> row_major);

  static Matrix identity(std::size_t dim);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
  const std::vector<double>& data() const { return a_; }

  bool all_finite() const;
  Matrix transposed() const;
  Vector apply(const Vector& x) const;
  Vector apply_transposed(const Vector& x) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// Plain 2D point / direction used by the planar modules.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2 a, Vec2 b) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline Vec2 to_vec2(const Vector& v) { return {v.at(0), v.at(1)}; }
inline Vector to_vector(Vec2 v) { return {v.x, v.y}; }

double dot(const Vector& a, const Vector& b);
double norm(const Vector& a);
bool all_finite(const Vector& v);

/// Solve M x = b by Gaussian elimination with partial pivoting.
Vector solve_linear(Matrix m, Vector b);

/// Angle normalized into [0, 2*pi).
double wrap_angle(double angle);

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

}  // namespace ifshull
