#include "ifshull/linalg.hpp"

#include <algorithm>
#include <utility>

namespace ifshull {

Matrix::Matrix(std::size_t dim, std::vector<double> row_major) : dim_(dim), a_(std::move(row_major)) {
  if (a_.size() != dim_ * dim_) {
    throw InvalidInput("matrix data size does not match dimension");
  }
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t dim = rows.size();
  if (dim == 0) throw InvalidInput("matrix must have at least one row");
  Matrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (rows[r].size() != dim) throw InvalidInput("matrix must be square");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool Matrix::all_finite() const {
  return std::all_of(a_.begin(), a_.end(), [](double v) { return std::isfinite(v); });
}

Matrix Matrix::transposed() const {
  Matrix t(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& x) const {
  Vector y(dim_, 0.0);
  for (std::size_t r = 0; r < dim_; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) s += (*this)(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

Vector Matrix::apply_transposed(const Vector& x) const {
  Vector y(dim_, 0.0);
  for (std::size_t c = 0; c < dim_; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) s += (*this)(r, c) * x[r];
    y[c] = s;
  }
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw InvalidInput("matrix dimension mismatch");
  const std::size_t m = a.dim();
  Matrix p(m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k < m; ++k) {
      const double ark = a(r, k);
      for (std::size_t c = 0; c < m; ++c) p(r, c) += ark * b(k, c);
    }
  return p;
}

double dot(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vector& a) { return std::sqrt(dot(a, a)); }

bool all_finite(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

Vector solve_linear(Matrix m, Vector b) {
  const std::size_t n = m.dim();
  if (b.size() != n) throw InvalidInput("right-hand side has wrong dimension");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    if (m(piv, col) == 0.0) throw InvalidInput("singular linear system");
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
      std::swap(b[piv], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m(r, col) / m(col, col);
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
      b[r] -= f * b[col];
    }
  }
  Vector x(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= m(i, c) * x[c];
    x[i] = s / m(i, i);
  }
  return x;
}

double wrap_angle(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

}  // namespace ifshull
