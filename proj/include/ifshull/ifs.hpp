#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ifshull/linalg.hpp"

namespace ifshull {

/// Spectral norm sup_{|x|=1} |Ax|. Closed form for 2x2, power iteration on A^T A otherwise.
double operator_norm(const Matrix& a);

/// One contracting map x -> A x + t. The spectral norm of A is cached at construction.
class AffineMap {
 public:
  AffineMap(Matrix a, Vector t);

  const Matrix& linear() const { return a_; }
  const Vector& translation() const { return t_; }
  double contraction() const { return c_; }
  std::size_t dim() const { return a_.dim(); }

  Vector apply(const Vector& x) const;

 private:
  Matrix a_;
  Vector t_;
  double c_;
};

/// A validated iterated function system: nonempty, shared dimension, every map contracting.
class IFS {
 public:
  const std::vector<AffineMap>& maps() const { return maps_; }
  std::size_t size() const { return maps_.size(); }
  std::size_t dim() const { return dim_; }
  /// max_i c_i
  double contraction() const { return c_; }
  const AffineMap& operator[](std::size_t i) const { return maps_[i]; }

 private:
  friend IFS validate_ifs(std::vector<AffineMap> maps);
  IFS() = default;

  std::vector<AffineMap> maps_;
  std::size_t dim_ = 0;
  double c_ = 0.0;
};

IFS validate_ifs(std::vector<AffineMap> maps);

/// (I - A)^{-1} t, the unique point fixed by the map.
Vector map_fixed_point(const AffineMap& map);

struct PointCloud {
  std::vector<Vector> points;
  std::uint64_t seed = 0;
  std::size_t burn_in = 0;
};

inline constexpr std::size_t kDefaultBurnIn = 64;

/// Random-iteration sampling of the attractor. Starts at the fixed point of maps[0],
/// picks maps uniformly from a mt19937_64 stream, discards burn_in iterates.
PointCloud chaos_game_sample(const IFS& ifs, std::size_t count, std::uint64_t seed,
                             std::size_t burn_in = kDefaultBurnIn);

/// Planar convenience view of a cloud.
std::vector<Vec2> as_planar(const PointCloud& cloud);

/// The n maps x -> (x + i) / z, i = 0..n-1, acting on C = R^2.
IFS complex_base_ifs(std::complex<double> z, int n);

/// 2x2 matrix of multiplication by w on C = R^2.
Matrix complex_multiplier(std::complex<double> w);

}  // namespace ifshull
