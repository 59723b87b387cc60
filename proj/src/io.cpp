#include "ifshull/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace ifshull {

namespace {

using nlohmann::json;

double number(const json& j, const char* what) {
  if (!j.is_number()) throw InvalidInput(std::string("expected a number for ") + what);
  return j.get<double>();
}

AffineMap parse_map(const json& jm, std::size_t dim) {
  if (!jm.is_object() || !jm.contains("A") || !jm.contains("t")) throw InvalidInput("each map needs \"A\" and \"t\"");
  const json& ja = jm.at("A");
  const json& jt = jm.at("t");
  if (!ja.is_array() || ja.size() != dim) throw InvalidInput("\"A\" must have dim rows");
  std::vector<std::vector<double>> rows;
  for (const json& row : ja) {
    if (!row.is_array() || row.size() != dim) throw InvalidInput("\"A\" must be dim x dim");
    std::vector<double> r;
    for (const json& v : row) r.push_back(number(v, "A entry"));
    rows.push_back(std::move(r));
  }
  if (!jt.is_array() || jt.size() != dim) throw InvalidInput("\"t\" must have dim entries");
  Vector t;
  for (const json& v : jt) t.push_back(number(v, "t entry"));
  return AffineMap(Matrix::from_rows(rows), std::move(t));
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

IfsDocument parse_ifs(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed IFS JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("IFS document must be a JSON object");

  if (doc.contains("complex_base")) {
    const json& cb = doc.at("complex_base");
    if (!cb.is_object() || !cb.contains("z") || !cb.contains("n")) throw InvalidInput("complex_base needs z and n");
    const json& jz = cb.at("z");
    if (!jz.is_array() || jz.size() != 2) throw InvalidInput("z must be [re, im]");
    if (!cb.at("n").is_number_integer()) throw InvalidInput("n must be an integer");
    const std::complex<double> z(number(jz[0], "z"), number(jz[1], "z"));
    const int n = cb.at("n").get<int>();
    std::optional<RationalAngle> declared;
    if (cb.contains("rational_angle")) {
      const json& ra = cb.at("rational_angle");
      if (!ra.is_array() || ra.size() != 2 || !ra[0].is_number_integer() || !ra[1].is_number_integer())
        throw InvalidInput("rational_angle must be [l, k]");
      declared = RationalAngle{ra[0].get<long>(), ra[1].get<long>()};
    }
    ComplexBaseSystem sys(z, n, declared);
    return {complex_base_ifs(z, n), sys};
  }

  if (!doc.contains("dim") || !doc.contains("maps")) throw InvalidInput("IFS document needs dim and maps");
  if (!doc.at("dim").is_number_integer() || doc.at("dim").get<long>() < 1) throw InvalidInput("dim must be >= 1");
  const auto dim = doc.at("dim").get<std::size_t>();
  const json& jmaps = doc.at("maps");
  if (!jmaps.is_array()) throw InvalidInput("maps must be an array");
  std::vector<AffineMap> maps;
  for (const json& jm : jmaps) maps.push_back(parse_map(jm, dim));
  return {validate_ifs(std::move(maps)), std::nullopt};
}

IfsDocument load_ifs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ifs(ss.str());
}

std::string ifs_to_json(const IFS& ifs) {
  json doc;
  doc["dim"] = ifs.dim();
  doc["maps"] = json::array();
  for (const AffineMap& m : ifs.maps()) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m.linear()(r, c));
      rows.push_back(row);
    }
    doc["maps"].push_back({{"A", rows}, {"t", m.translation()}});
  }
  return doc.dump();
}

std::string polygon_to_json(const HullPolygon& p) {
  std::string out = "{\"base\":[" + g17(p.base.x) + "," + g17(p.base.y) + "],\"vertices\":[";
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i) out += ",";
    out += "[" + g17(p.vertices[i].x) + "," + g17(p.vertices[i].y) + "]";
  }
  out += "]}";
  return out;
}

void write_svg(std::ostream& os, const SvgScene& scene) {
  const double half = 1.1 * std::max(scene.radius, 1e-9);
  const double size = 2.0 * half;
  // World (x, y) -> SVG (x - left, top - y).
  const double left = scene.base.x - half;
  const double top = scene.base.y + half;
  auto sx = [&](double x) { return fixed6(x - left); };
  auto sy = [&](double y) { return fixed6(top - y); };
  const double dot_r = size / 1000.0;
  const double stroke = size / 400.0;

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fixed6(size) << " " << fixed6(size)
     << "\" width=\"800\" height=\"800\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << fixed6(size) << "\" height=\"" << fixed6(size) << "\" fill=\"white\"/>\n";
  os << "<g fill=\"#1f4e79\" fill-opacity=\"0.6\">\n";
  for (const Vec2& p : scene.cloud)
    os << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"" << fixed6(dot_r) << "\"/>\n";
  os << "</g>\n";
  if (scene.polygon && !scene.polygon->vertices.empty()) {
    const auto& v = scene.polygon->vertices;
    os << "<path d=\"M " << sx(v[0].x) << " " << sy(v[0].y);
    for (std::size_t i = 1; i < v.size(); ++i) os << " L " << sx(v[i].x) << " " << sy(v[i].y);
    os << " Z\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" << fixed6(stroke) << "\"/>\n";
  }
  os << "<circle cx=\"" << sx(scene.base.x) << "\" cy=\"" << sy(scene.base.y) << "\" r=\"" << fixed6(4 * dot_r)
     << "\" fill=\"#27ae60\"/>\n";
  os << "</svg>\n";
}

}  // namespace ifshull
