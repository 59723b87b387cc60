#include "ifshull/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ifshull/analytic.hpp"
#include "ifshull/hull.hpp"
#include "ifshull/io.hpp"
#include "ifshull/query.hpp"
#include "ifshull/verify.hpp"

namespace ifshull::cli {

namespace {

struct RunConfig {
  std::string input;
  std::size_t grid = kDefaultGrid;
  double tol = kDefaultTol;
  std::uint64_t seed = 1;
  std::size_t points = 20000;
  std::string out;
  std::string format;
  // query
  std::string point;
  std::optional<int> k;
  std::optional<double> dist;
  std::string c0 = "compact";
  // exact
  std::string angles = "0";
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("not a number: '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw InvalidInput("not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

void validate(const RunConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw InvalidInput("--tol must be positive");
  if (cfg.grid < 64 || cfg.grid % 2 != 0) throw InvalidInput("--grid must be even and >= 64");
}

void check_format(const RunConfig& cfg, const char* expected) {
  if (!cfg.format.empty() && cfg.format != expected)
    throw InvalidInput("--format " + cfg.format + " is not available here (expected " + expected + ")");
}

IfsDocument require_input(const RunConfig& cfg) {
  if (cfg.input.empty()) throw InvalidInput("--input is required");
  return load_ifs(cfg.input);
}

// Writes through `fn` to --out if given, else to `fallback`.
template <class Fn>
void emit(const RunConfig& cfg, std::ostream& fallback, Fn&& fn) {
  if (cfg.out.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw InvalidInput("cannot write " + cfg.out);
  fn(file);
}

Vec2 default_base(const IfsDocument& doc) {
  if (doc.complex_base) return symmetry_center(*doc.complex_base);
  Vec2 c{};
  for (const AffineMap& m : doc.ifs.maps()) c = c + to_vec2(map_fixed_point(m));
  return (1.0 / static_cast<double>(doc.ifs.size())) * c;
}

struct HullOutcome {
  HullPolygon polygon;
  std::string method;
  double area = 0.0;
  double area_bound = 0.0;
  double perimeter = 0.0;
  double perimeter_bound = 0.0;
  double radius = 0.0;
};

HullOutcome compute_hull(const IfsDocument& doc, const RunConfig& cfg) {
  HullOutcome out;
  if (doc.complex_base && doc.complex_base->rational_angle()) {
    auto exact = exact_polygon(*doc.complex_base);
    out.polygon = std::move(exact.polygon);
    out.method = "exact";
    out.area = polygon_area(out.polygon);
    out.perimeter = polygon_perimeter(out.polygon);
    out.area_bound = 1e-9;
    out.perimeter_bound = 1e-9;
    for (const Vec2& v : out.polygon.vertices) out.radius = std::max(out.radius, norm(v - out.polygon.base));
    return out;
  }
  const auto w = rebase_width(solve_width(doc.ifs, cfg.grid, cfg.tol), default_base(doc));
  auto ex = extract_polygon(w);
  out.polygon = std::move(ex.polygon);
  out.method = ex.method == ExtractionMethod::kinks ? "kinks" : "dense";
  out.area = polygon_area(out.polygon);
  out.perimeter = polygon_perimeter(out.polygon);
  // Both functionals are controlled by the sup distance between support functions.
  const double eps = ex.support_deviation + w.total_slack();
  out.perimeter_bound = kTwoPi * eps;
  out.area_bound = out.perimeter * eps + kPi * eps * eps;
  out.radius = circumradius(w);
  return out;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_format(cfg, "csv");
  const auto doc = require_input(cfg);
  const auto w = solve_width(doc.ifs, cfg.grid, cfg.tol);
  emit(cfg, out, [&](std::ostream& os) { write_width_csv(os, w); });
  std::ostream& log = cfg.out.empty() ? err : out;
  log << fmt("iterations=%zu iter_error=%.3e interp_slack=%.3e\n", w.iterations, w.iter_error, w.interp_slack);
  return kExitOk;
}

int cmd_hull(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_format(cfg, "json");
  const auto doc = require_input(cfg);
  const auto hull = compute_hull(doc, cfg);
  emit(cfg, out, [&](std::ostream& os) { os << polygon_to_json(hull.polygon) << "\n"; });
  std::ostream& log = cfg.out.empty() ? err : out;
  log << fmt("method=%s vertices=%zu\n", hull.method.c_str(), hull.polygon.vertices.size());
  log << fmt("area=%.9f +- %.2e\n", hull.area, hull.area_bound);
  log << fmt("perimeter=%.9f +- %.2e\n", hull.perimeter, hull.perimeter_bound);
  return kExitOk;
}

int cmd_render(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  check_format(cfg, "svg");
  const auto doc = require_input(cfg);
  if (doc.ifs.dim() != 2) throw InvalidInput("render needs a 2D IFS");
  const auto hull = compute_hull(doc, cfg);
  const auto cloud = as_planar(chaos_game_sample(doc.ifs, std::max<std::size_t>(cfg.points, 1), cfg.seed));
  SvgScene scene{&hull.polygon, cloud, hull.polygon.base, hull.radius};
  emit(cfg, out, [&](std::ostream& os) { write_svg(os, scene); });
  return kExitOk;
}

int cmd_query(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto doc = require_input(cfg);
  if (cfg.k.has_value() == cfg.dist.has_value()) throw InvalidInput("query needs exactly one of --k or --dist");
  const auto xy = parse_list(cfg.point);
  if (xy.size() != 2) throw InvalidInput("--point must be x,y");
  if (cfg.c0 != "compact" && cfg.c0 != "safe") throw InvalidInput("--c0 must be compact or safe");
  const auto w = solve_width(doc.ifs, cfg.grid, cfg.tol);
  const auto ctx = build_context(doc.ifs, w, std::nullopt, cfg.c0 == "compact" ? C0Policy::compact : C0Policy::safe);
  const Vec2 x{xy[0], xy[1]};
  const QueryResult r = cfg.k ? near(ctx, x, *cfg.k) : near1(ctx, x, *cfg.dist);
  out << (r.value ? "true" : "false") << fmt(" depth=%d calls=%zu complete=%s c0=%.6f slack=%.2e\n", r.depth,
                                              r.calls, r.complete ? "yes" : "no", ctx.c0_bound(), ctx.slack());
  return kExitOk;
}

int cmd_exact(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto doc = require_input(cfg);
  if (!doc.complex_base) throw InvalidInput("exact needs a complex_base input");
  const ComplexBaseSystem& sys = *doc.complex_base;
  const double series_tol = std::min(cfg.tol, 1e-12);
  const Vec2 c = symmetry_center(sys);
  out << fmt("center=(%.6f, %.6f)\n", c.x, c.y);
  if (sys.rational_angle())
    out << fmt("rational_angle=%ld/%ld pi\n", sys.rational_angle()->l, sys.rational_angle()->k);
  for (double a : parse_list(cfg.angles)) {
    if (sys.rational_angle()) {
      out << fmt("width(%.6f)=%.9f (closed form)\n", a, rational_width(sys, a));
    } else {
      const auto v = centered_width(sys, a, series_tol);
      out << fmt("width(%.6f)=%.9f +- %.1e\n", a, v.value, v.error_bound);
    }
  }
  out << fmt("perimeter=%.6f (closed form)\n", hull_perimeter(sys));
  const auto area = hull_area(sys, series_tol);
  out << fmt("area=%.6f +- %.1e\n", area.value, area.error_bound);
  const auto poly = sys.rational_angle() ? exact_polygon(sys) : irrational_polygon(sys, cfg.tol);
  out << "j,phi_j,a_j,b_j,c_j\n";
  for (const TriangleParams& t : poly.triangles)
    out << fmt("%d,%.9f,%.9f,%.9f,%.9f\n", t.j, t.angle, t.a, t.b, t.c);
  return kExitOk;
}

int cmd_audit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto rows = isodiametric_audit();
  double worst = 1e300;
  emit(cfg, out, [&](std::ostream& os) {
    os << "r,phi,gap\n";
    for (const AuditRow& row : rows) {
      os << fmt("%.12g,%.12g,%.12g\n", row.r, row.phi, row.gap);
      worst = std::min(worst, row.gap);
    }
  });
  std::ostream& log = cfg.out.empty() ? err : out;
  log << fmt("rows=%zu min_gap=%.6e\n", rows.size(), worst);
  return worst < -1e-12 ? kExitVerify : kExitOk;
}

int cmd_verify(std::ostream& out) {
  const auto results = run_acceptance(out);
  const bool ok = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
  out << (ok ? "all criteria passed\n" : "verification FAILED\n");
  return ok ? kExitOk : kExitVerify;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--input", cfg.input, "IFS JSON file");
  sub->add_option("--grid", cfg.grid, "number of grid directions (even, >= 64)");
  sub->add_option("--tol", cfg.tol, "target certified iteration error");
  sub->add_option("--seed", cfg.seed, "chaos-game seed");
  sub->add_option("--points", cfg.points, "chaos-game sample count");
  sub->add_option("--out", cfg.out, "output path (default stdout)");
  sub->add_option("--format", cfg.format, "output format: csv|json|svg");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Convex hulls of IFS attractors via the width function"};
  app.require_subcommand(1);
  auto* solve = app.add_subcommand("solve", "solve for the width function, write CSV");
  auto* hull = app.add_subcommand("hull", "extract the hull polygon, write JSON");
  auto* render = app.add_subcommand("render", "write an SVG of hull and attractor samples");
  auto* query = app.add_subcommand("query", "proximity predicates near / near1");
  auto* exact = app.add_subcommand("exact", "closed-form results for a complex-base system");
  auto* audit = app.add_subcommand("audit", "audit the trigonometric inequality on a grid");
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  for (auto* sub : {solve, hull, render, query, exact, audit}) add_common(sub, cfg);
  query->add_option("--point", cfg.point, "query point x,y")->required();
  query->add_option("--k", cfg.k, "recursion depth for near");
  query->add_option("--dist", cfg.dist, "distance threshold for near1");
  query->add_option("--c0", cfg.c0, "C0 bound: compact (R/sqrt 2) or safe (2R)");
  exact->add_option("--angles", cfg.angles, "comma-separated angles in radians");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("ifshull");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    validate(cfg);
    if (solve->parsed()) return cmd_solve(cfg, out, err);
    if (hull->parsed()) return cmd_hull(cfg, out, err);
    if (render->parsed()) return cmd_render(cfg, out, err);
    if (query->parsed()) return cmd_query(cfg, out, err);
    if (exact->parsed()) return cmd_exact(cfg, out, err);
    if (audit->parsed()) return cmd_audit(cfg, out, err);
    if (verify->parsed()) return cmd_verify(out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace ifshull::cli
