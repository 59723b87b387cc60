#include "ifshull/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ifshull/ifs.hpp"

namespace ifshull {

namespace {

// d/dalpha |cos(alpha)| from the right (+1) or left (-1) side.
double abs_cos_slope(double x, int side) {
  const double cs = std::cos(x);
  const double sn = std::sin(x);
  if (std::abs(cs) < 1e-12) return side * std::abs(sn);
  return cs > 0.0 ? -sn : sn;
}

double angular_distance(double a, double b) {
  const double d = std::abs(wrap_angle(a) - wrap_angle(b));
  return std::min(d, kTwoPi - d);
}

// First J with scale * r^{-J} / (r - 1) <= tol.
std::size_t geometric_cutoff(double scale, double r, double tol) {
  std::size_t j = 0;
  double tail = scale / (r - 1.0);
  while (tail > tol && j < 100000) {
    tail /= r;
    ++j;
  }
  return j;
}

struct Edge {
  double angle;
  Vec2 lo;  // clockwise endpoint
  Vec2 hi;  // counterclockwise endpoint
};

Edge make_edge(Vec2 center, const TriangleParams& t, double angle) {
  const Vec2 u = unit(angle);
  const Vec2 v{-u.y, u.x};
  return {wrap_angle(angle), center + t.a * u - t.c * v, center + t.a * u + t.b * v};
}

}  // namespace

std::optional<RationalAngle> detect_rational_angle(double phi, long max_denominator) {
  for (long k = 1; k <= max_denominator; ++k) {
    const double l = std::round(phi * static_cast<double>(k) / kPi);
    if (std::abs(phi - kPi * l / static_cast<double>(k)) <= 1e-12) {
      const long li = static_cast<long>(l);
      const long g = std::gcd(std::abs(li), k);
      return RationalAngle{li / g, k / g};
    }
  }
  return std::nullopt;
}

ComplexBaseSystem::ComplexBaseSystem(std::complex<double> z, int n, std::optional<RationalAngle> declared)
    : z_(z), n_(n) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !(std::abs(z) > 1.0))
    throw InvalidInput("complex base needs finite z with |z| > 1");
  if (n < 2) throw InvalidInput("complex base needs n >= 2");
  if (declared) {
    if (declared->k < 1) throw InvalidInput("rational angle needs k >= 1");
    const long g = std::gcd(std::abs(declared->l), declared->k);
    RationalAngle q{declared->l / g, declared->k / g};
    const double diff = angular_distance(std::arg(z), kPi * static_cast<double>(q.l) / static_cast<double>(q.k));
    if (diff > 1e-12) throw InvalidInput("declared rational angle does not match arg z");
    rational_ = q;
  } else {
    rational_ = detect_rational_angle(std::arg(z));
  }
}

SeriesValue equal_maps_width(const Matrix& a, const std::vector<Vector>& ts, const Vector& d, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("tol must be positive");
  if (ts.empty()) throw InvalidInput("need at least one translation");
  const double c = operator_norm(a);
  if (!(c < 1.0)) throw InvalidInput("matrix is not contracting");
  if (d.size() != a.dim()) throw InvalidInput("direction has wrong dimension");
  double tmax = 0.0;
  for (const Vector& t : ts) {
    if (t.size() != a.dim()) throw InvalidInput("translation has wrong dimension");
    tmax = std::max(tmax, norm(t));
  }

  auto support_star = [&](const Vector& e) {
    double best = dot(ts.front(), e);
    for (const Vector& t : ts) best = std::max(best, dot(t, e));
    return best;
  };

  // |A^i d| h*(unit(A^i d)) = h*(A^i d) by positive homogeneity; zero vectors give 0.
  SeriesValue out;
  Vector e = d;
  // |h*((A^T)^i d)| <= tmax |d| c^i
  double tail = tmax * norm(d) / (1.0 - c);
  while (tail > tol && c > 0.0) {
    out.value += support_star(e);
    e = a.apply_transposed(e);
    tail *= c;
    ++out.terms;
  }
  if (c == 0.0) {
    out.value = support_star(d);
    out.terms = 1;
    tail = 0.0;
  }
  out.error_bound = tail;
  return out;
}

Vec2 symmetry_center(const ComplexBaseSystem& sys) {
  const std::complex<double> x0 = static_cast<double>(sys.digits() - 1) / (2.0 * (sys.z() - 1.0));
  return {x0.real(), x0.imag()};
}

SeriesValue centered_width(const ComplexBaseSystem& sys, double alpha, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("tol must be positive");
  const double r = sys.modulus();
  const double phi = sys.angle();
  const double scale = 0.5 * (sys.digits() - 1);
  const std::size_t terms = geometric_cutoff(scale, r, tol);
  SeriesValue out;
  double w = 1.0;
  for (std::size_t j = 1; j <= terms; ++j) {
    w /= r;
    out.value += w * std::abs(std::cos(alpha + static_cast<double>(j) * phi));
  }
  out.value *= scale;
  out.terms = terms;
  out.error_bound = scale * std::pow(r, -static_cast<double>(terms)) / (r - 1.0);
  return out;
}

double rational_width(const ComplexBaseSystem& sys, double alpha) {
  if (!sys.rational_angle()) throw InvalidInput("rational_width needs a rational angle");
  const long k = sys.rational_angle()->k;
  const double r = sys.modulus();
  const double phi = sys.angle();
  double sum = 0.0;
  double w = 1.0;
  for (long j = 1; j <= k; ++j) {
    w /= r;
    sum += w * std::abs(std::cos(alpha + static_cast<double>(j) * phi));
  }
  return 0.5 * (sys.digits() - 1) / (1.0 - std::pow(r, -static_cast<double>(k))) * sum;
}

ExactPolygon exact_polygon(const ComplexBaseSystem& sys) {
  if (!sys.rational_angle()) throw InvalidInput("exact_polygon needs a rational angle");
  const long k = sys.rational_angle()->k;
  const double r = sys.modulus();
  const double phi = sys.angle();
  const double period = 1.0 - std::pow(r, -static_cast<double>(k));
  const double nm1 = static_cast<double>(sys.digits() - 1);
  const Vec2 center = symmetry_center(sys);

  ExactPolygon out;
  std::vector<Edge> edges;
  for (long j = 1; j <= k; ++j) {
    TriangleParams t;
    t.j = static_cast<int>(j);
    t.angle = kPi / 2.0 - static_cast<double>(j) * phi;
    t.a = rational_width(sys, t.angle);
    const double jump = nm1 * std::pow(r, -static_cast<double>(j)) / period;
    double smooth = 0.0;
    for (long i = 1; i <= k; ++i) {
      if (i == j) continue;
      const double x = t.angle + static_cast<double>(i) * phi;
      if (std::abs(std::cos(x)) < 1e-12) continue;
      smooth += std::pow(r, -static_cast<double>(i)) * abs_cos_slope(x, +1);
    }
    smooth *= 0.5 * nm1 / period;
    // b + c = jump, b - c = 2 * smooth
    t.b = smooth + 0.5 * jump;
    t.c = 0.5 * jump - smooth;
    out.triangles.push_back(t);
    edges.push_back(make_edge(center, t, t.angle));
    edges.push_back(make_edge(center, t, t.angle + kPi));
  }

  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.angle < b.angle; });
  std::vector<Edge> merged;
  for (const Edge& e : edges) {
    if (!merged.empty() && angular_distance(merged.back().angle, e.angle) < 1e-12) {
      Edge& m = merged.back();
      const Vec2 v{-std::sin(m.angle), std::cos(m.angle)};
      if (dot(e.lo, v) < dot(m.lo, v)) m.lo = e.lo;
      if (dot(e.hi, v) > dot(m.hi, v)) m.hi = e.hi;
      ++out.merged_edges;
      continue;
    }
    merged.push_back(e);
  }
  if (merged.size() > 1 && angular_distance(merged.front().angle, merged.back().angle) < 1e-12) {
    merged.front().lo = merged.back().lo;
    merged.pop_back();
    ++out.merged_edges;
  }

  double radius = 0.0;
  std::vector<Vec2> points;
  for (const Edge& e : merged) {
    radius = std::max({radius, norm(e.lo - center), norm(e.hi - center)});
    points.push_back(e.lo);
    points.push_back(e.hi);
  }
  for (std::size_t m = 0; m < merged.size(); ++m) {
    const Edge& next = merged[(m + 1) % merged.size()];
    out.closure_gap = std::max(out.closure_gap, norm(next.lo - merged[m].hi));
  }
  if (out.closure_gap > 1e-9 * std::max(radius, 1.0)) {
    throw InternalError("edge chain does not close (gap " + std::to_string(out.closure_gap) + ")");
  }
  out.polygon = make_polygon(center, std::move(points), 1e-9 * std::max(radius, 1e-300));
  return out;
}

ExactPolygon irrational_polygon(const ComplexBaseSystem& sys, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("tol must be positive");
  const double r = sys.modulus();
  const double phi = sys.angle();
  const double nm1 = static_cast<double>(sys.digits() - 1);
  const Vec2 center = symmetry_center(sys);
  const std::size_t edges = std::max<std::size_t>(1, geometric_cutoff(nm1, r, tol));
  const double inner_tol = 1e-3 * tol;
  const std::size_t terms = geometric_cutoff(0.5 * nm1, r, inner_tol);

  ExactPolygon out;
  std::vector<Vec2> points;
  for (std::size_t j = 1; j <= edges; ++j) {
    TriangleParams t;
    t.j = static_cast<int>(j);
    t.angle = kPi / 2.0 - static_cast<double>(j) * phi;
    t.a = centered_width(sys, t.angle, inner_tol).value;
    double right = 0.0;
    double left = 0.0;
    double w = 1.0;
    for (std::size_t i = 1; i <= terms; ++i) {
      w /= r;
      const double x = t.angle + static_cast<double>(i) * phi;
      right += w * abs_cos_slope(x, +1);
      left += w * abs_cos_slope(x, -1);
    }
    t.b = 0.5 * nm1 * right;
    t.c = -0.5 * nm1 * left;
    out.triangles.push_back(t);
    for (double angle : {t.angle, t.angle + kPi}) {
      const Edge e = make_edge(center, t, angle);
      points.push_back(e.lo);
      points.push_back(e.hi);
    }
  }
  double radius = 0.0;
  for (const Vec2& p : points) radius = std::max(radius, norm(p - center));
  out.polygon = make_polygon(center, std::move(points), 1e-9 * std::max(radius, 1e-300));
  return out;
}

double hull_perimeter(const ComplexBaseSystem& sys) {
  return 2.0 * static_cast<double>(sys.digits() - 1) / (sys.modulus() - 1.0);
}

SeriesValue hull_area(const ComplexBaseSystem& sys, double tol) {
  if (!(tol > 0.0)) throw InvalidInput("tol must be positive");
  const double r = sys.modulus();
  const double phi = sys.angle();
  const double nm1 = static_cast<double>(sys.digits() - 1);
  const double scale = nm1 * nm1 / (r * r - 1.0);
  const std::size_t terms = geometric_cutoff(scale, r, tol);
  SeriesValue out;
  double w = 1.0;
  for (std::size_t v = 1; v <= terms; ++v) {
    w /= r;
    out.value += w * std::abs(std::sin(static_cast<double>(v) * phi));
  }
  out.value *= scale;
  out.terms = terms;
  out.error_bound = scale * std::pow(r, -static_cast<double>(terms)) / (r - 1.0);
  return out;
}

double isodiametric_gap(double r, double phi) {
  if (!(r > 1.0)) throw InvalidInput("isodiametric gap needs r > 1");
  const double bound = (r + 1.0) / (r - 1.0) / kPi;
  // Sum until the geometric tail r^{-J}/(r-1) falls below machine precision of the bound.
  const std::size_t terms = geometric_cutoff(1.0, r, 1e-17 * bound);
  double sum = 0.0;
  double w = 1.0;
  for (std::size_t j = 1; j <= terms; ++j) {
    w /= r;
    sum += w * std::abs(std::sin(static_cast<double>(j) * phi));
  }
  return bound - sum;
}

std::vector<AuditRow> isodiametric_audit(double r_min, double r_max, std::size_t r_count, std::size_t phi_count,
                                         Exec exec) {
  if (!(r_min > 1.0) || !(r_max >= r_min) || r_count == 0 || phi_count == 0)
    throw InvalidInput("bad audit grid");
  std::vector<AuditRow> rows(r_count * phi_count);
  const auto total = static_cast<long>(rows.size());
  auto fill = [&](long idx) {
    const std::size_t ri = static_cast<std::size_t>(idx) / phi_count;
    const std::size_t pi = static_cast<std::size_t>(idx) % phi_count;
    const double t = r_count == 1 ? 0.0 : static_cast<double>(ri) / static_cast<double>(r_count - 1);
    const double r = r_min * std::pow(r_max / r_min, t);
    const double phi = kTwoPi * static_cast<double>(pi) / static_cast<double>(phi_count);
    rows[static_cast<std::size_t>(idx)] = {r, phi, isodiametric_gap(r, phi)};
  };
  if (exec == Exec::serial) {
    for (long i = 0; i < total; ++i) fill(i);
    return rows;
  }
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < total; ++i) fill(i);
  return rows;
}

}  // namespace ifshull
