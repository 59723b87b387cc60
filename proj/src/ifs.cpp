#include "ifshull/ifs.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

namespace ifshull {

namespace {

double power_iteration_norm(const Matrix& a) {
  const Matrix gram = a.transposed() * a;
  const std::size_t m = a.dim();

  // Start from the heaviest column of A^T A so the start vector cannot be
  // orthogonal to the dominant eigenvector unless A^T A = 0.
  Vector v(m, 0.0);
  double best = -1.0;
  for (std::size_t c = 0; c < m; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r) s += gram(r, c) * gram(r, c);
    if (s > best) {
      best = s;
      for (std::size_t r = 0; r < m; ++r) v[r] = gram(r, c);
    }
  }
  if (best <= 0.0) return 0.0;

  double lambda = 0.0;
  for (int it = 0; it < 100000; ++it) {
    const double nv = norm(v);
    for (double& x : v) x /= nv;
    Vector w = gram.apply(v);
    const double next = dot(v, w);
    v = std::move(w);
    if (std::abs(next - lambda) <= 1e-12 * std::abs(next)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

}  // namespace

double operator_norm(const Matrix& a) {
  if (a.dim() == 0) throw InvalidInput("matrix must be at least 1x1");
  if (!a.all_finite()) throw InvalidInput("matrix has non-finite entries");
  if (a.dim() == 1) return std::abs(a(0, 0));
  if (a.dim() == 2) {
    // Largest eigenvalue of the symmetric A^T A = [[p, q], [q, s]].
    const double p = a(0, 0) * a(0, 0) + a(1, 0) * a(1, 0);
    const double s = a(0, 1) * a(0, 1) + a(1, 1) * a(1, 1);
    const double q = a(0, 0) * a(0, 1) + a(1, 0) * a(1, 1);
    const double lambda = 0.5 * (p + s) + std::hypot(0.5 * (p - s), q);
    return std::sqrt(std::max(lambda, 0.0));
  }
  return power_iteration_norm(a);
}

AffineMap::AffineMap(Matrix a, Vector t) : a_(std::move(a)), t_(std::move(t)) {
  if (t_.size() != a_.dim()) throw InvalidInput("translation dimension does not match matrix");
  if (!all_finite(t_)) throw InvalidInput("translation has non-finite entries");
  c_ = operator_norm(a_);
}

Vector AffineMap::apply(const Vector& x) const {
  Vector y = a_.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += t_[i];
  return y;
}

IFS validate_ifs(std::vector<AffineMap> maps) {
  if (maps.empty()) throw InvalidInput("IFS needs at least one map");
  const std::size_t dim = maps.front().dim();
  double c = 0.0;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].dim() != dim) {
      std::ostringstream msg;
      msg << "dimension mismatch: map " << i + 1 << " has dim " << maps[i].dim() << ", expected " << dim;
      throw InvalidInput(msg.str());
    }
    if (!(maps[i].contraction() < 1.0)) {
      std::ostringstream msg;
      msg << "map " << i + 1 << " not contracting, c_" << i + 1 << "=" << maps[i].contraction();
      throw InvalidInput(msg.str());
    }
    c = std::max(c, maps[i].contraction());
  }
  IFS ifs;
  ifs.maps_ = std::move(maps);
  ifs.dim_ = dim;
  ifs.c_ = c;
  return ifs;
}

Vector map_fixed_point(const AffineMap& map) {
  const std::size_t m = map.dim();
  Matrix lhs = Matrix::identity(m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) lhs(r, c) -= map.linear()(r, c);
  Vector x = solve_linear(lhs, map.translation());

  // One step of iterative refinement on the residual.
  Vector ax = map.apply(x);
  Vector residual(m);
  for (std::size_t i = 0; i < m; ++i) residual[i] = ax[i] - x[i];
  Vector corr = solve_linear(lhs, residual);
  for (std::size_t i = 0; i < m; ++i) x[i] += corr[i];
  return x;
}

PointCloud chaos_game_sample(const IFS& ifs, std::size_t count, std::uint64_t seed, std::size_t burn_in) {
  if (count == 0) throw InvalidInput("chaos game needs count >= 1");
  PointCloud cloud;
  cloud.seed = seed;
  cloud.burn_in = burn_in;
  cloud.points.reserve(count);

  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::uint64_t>(ifs.size());
  Vector x = map_fixed_point(ifs[0]);
  for (std::size_t it = 0; it < burn_in; ++it) x = ifs[static_cast<std::size_t>(rng() % n)].apply(x);
  for (std::size_t k = 0; k < count; ++k) {
    x = ifs[static_cast<std::size_t>(rng() % n)].apply(x);
    cloud.points.push_back(x);
  }
  return cloud;
}

std::vector<Vec2> as_planar(const PointCloud& cloud) {
  std::vector<Vec2> out;
  out.reserve(cloud.points.size());
  for (const Vector& p : cloud.points) out.push_back(to_vec2(p));
  return out;
}

Matrix complex_multiplier(std::complex<double> w) {
  return Matrix(2, {w.real(), -w.imag(), w.imag(), w.real()});
}

IFS complex_base_ifs(std::complex<double> z, int n) {
  if (!(std::abs(z) > 1.0)) throw InvalidInput("complex base needs |z| > 1");
  if (n < 2) throw InvalidInput("complex base needs n >= 2 digits");
  const std::complex<double> w = 1.0 / z;
  std::vector<AffineMap> maps;
  maps.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::complex<double> t = static_cast<double>(i) * w;
    maps.emplace_back(complex_multiplier(w), Vector{t.real(), t.imag()});
  }
  return validate_ifs(std::move(maps));
}

}  // namespace ifshull
