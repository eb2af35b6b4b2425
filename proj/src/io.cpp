#include "equicut/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "equicut/error.hpp"
#include "equicut/literal.hpp"

namespace equicut {

using nlohmann::ordered_json;

namespace {

ordered_json sides_json(const std::array<TowerReal, 3>& sides) {
  ordered_json arr = ordered_json::array();
  for (const TowerReal& s : sides) arr.push_back(format_number(s));
  return ordered_json{{"sides", arr}};
}

[[noreturn]] void bad_format(const std::string& what) {
  throw Error(ErrorCode::Parse, "dissection file: " + what);
}

TowerReal number_at(const ordered_json& j, const std::string& where) {
  if (!j.is_string()) bad_format(where + " must be a number literal string");
  try {
    return parse_number(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.what(), e.position());
  }
}

std::array<TowerReal, 3> sides_at(const ordered_json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("sides") || !j["sides"].is_array() || j["sides"].size() != 3) {
    bad_format(where + ".sides must be an array of three numbers");
  }
  std::array<TowerReal, 3> out;
  for (std::size_t k = 0; k < 3; ++k) out[k] = number_at(j["sides"][k], where + ".sides[" + std::to_string(k) + "]");
  return out;
}

}  // namespace

std::string dissection_to_json(const Dissection& d) {
  ordered_json pieces = ordered_json::array();
  for (const PlacedTriangle& p : d.pieces) {
    ordered_json verts = ordered_json::array();
    for (const Point& v : p.vertices()) verts.push_back(ordered_json::array({format_number(v.x), format_number(v.y)}));
    pieces.push_back(ordered_json{{"vertices", verts}});
  }
  ordered_json doc;
  doc["region"] = sides_json(d.region_sides);
  doc["declaredTile"] = sides_json(d.tile);
  doc["pieces"] = pieces;
  return doc.dump(2) + "\n";
}

Dissection dissection_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("dissection file: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) bad_format("top level must be an object");
  if (!doc.contains("region")) bad_format("missing region");
  if (!doc.contains("declaredTile")) bad_format("missing declaredTile");
  if (!doc.contains("pieces") || !doc["pieces"].is_array()) bad_format("pieces must be an array");

  std::vector<TowerReal> numbers;
  const auto region_sides = sides_at(doc["region"], "region");
  const auto tile = sides_at(doc["declaredTile"], "declaredTile");
  numbers.insert(numbers.end(), region_sides.begin(), region_sides.end());
  numbers.insert(numbers.end(), tile.begin(), tile.end());

  const auto& pieces = doc["pieces"];
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string where = "pieces[" + std::to_string(i) + "]";
    const auto& p = pieces[i];
    if (!p.is_object() || !p.contains("vertices") || !p["vertices"].is_array() || p["vertices"].size() != 3) {
      bad_format(where + ".vertices must be an array of three points");
    }
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& v = p["vertices"][k];
      if (!v.is_array() || v.size() != 2) bad_format(where + ".vertices[" + std::to_string(k) + "] must be [x, y]");
      numbers.push_back(number_at(v[0], where + " x"));
      numbers.push_back(number_at(v[1], where + " y"));
    }
  }
  if (region_sides[2] != TowerReal(1)) bad_format("region side c must be 1");

  // One shared tower keeps later arithmetic on the fast path.
  unify_towers(numbers);
  const Triangle region(numbers[0], numbers[1]);
  Dissection d{{numbers[0], numbers[1], numbers[2]}, canonical_region(region), {}, {numbers[3], numbers[4], numbers[5]}};
  std::sort(d.tile.begin(), d.tile.end());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::size_t base = 6 + 6 * i;
    d.pieces.emplace_back(Point{numbers[base], numbers[base + 1]}, Point{numbers[base + 2], numbers[base + 3]},
                          Point{numbers[base + 4], numbers[base + 5]});
  }
  return d;
}

namespace svg {

namespace {

std::string decimal(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

}  // namespace

std::string document(const std::vector<Polygon>& polygons) {
  double lo_x = INFINITY, hi_x = -INFINITY, lo_y = INFINITY, hi_y = -INFINITY;
  for (const Polygon& poly : polygons) {
    for (const auto& [x, y] : poly.points) {
      lo_x = std::min(lo_x, x);
      hi_x = std::max(hi_x, x);
      lo_y = std::min(lo_y, y);
      hi_y = std::max(hi_y, y);
    }
  }
  if (!(lo_x <= hi_x)) lo_x = hi_x = lo_y = hi_y = 0;
  const double margin = 0.05 * std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  std::ostringstream out;
  // The group flips y so the exact coordinates can be written unchanged.
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << decimal(lo_x - margin) << ' '
      << decimal(-hi_y - margin) << ' ' << decimal(hi_x - lo_x + 2 * margin) << ' '
      << decimal(hi_y - lo_y + 2 * margin) << "\" width=\"800\" height=\""
      << decimal(std::round(800 * (hi_y - lo_y + 2 * margin) / (hi_x - lo_x + 2 * margin))) << "\">\n";
  out << "<style>polygon{vector-effect:non-scaling-stroke;stroke-linejoin:round}"
         ".region{fill:none;stroke:#000;stroke-width:2}"
         ".piece{fill:#cfe0f5;stroke:#1f4e8c;stroke-width:1}"
         ".hole{fill:#fff;stroke:#1f4e8c;stroke-width:1}"
         ".cell{fill:#f3e2c0;stroke:#9a7b3c;stroke-width:0.5}"
         ".boundary{fill:none;stroke:#b0261c;stroke-width:2}</style>\n";
  out << "<g transform=\"scale(1,-1)\">\n";
  for (const Polygon& poly : polygons) {
    out << "<polygon class=\"" << poly.css_class << "\" points=\"";
    for (std::size_t i = 0; i < poly.points.size(); ++i) {
      out << (i ? " " : "") << decimal(poly.points[i].first) << ',' << decimal(poly.points[i].second);
    }
    out << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace svg

std::string dissection_to_svg(const Dissection& d) {
  std::vector<svg::Polygon> polys;
  const auto to_poly = [](const PlacedTriangle& t, const char* cls) {
    svg::Polygon p{{}, cls};
    for (const Point& v : t.vertices()) p.points.emplace_back(v.x.approx(), v.y.approx());
    return p;
  };
  for (const PlacedTriangle& t : d.pieces) polys.push_back(to_poly(t, "piece"));
  polys.push_back(to_poly(d.region, "region"));
  return svg::document(polys);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "cannot read " + path);
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
}

}  // namespace equicut
