#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "equicut/dissect.hpp"

namespace equicut {

// Dissection file format; every number is a literal string in the
// parse_number grammar:
//
//   { "region": {"sides": [a, b, "1"]},
//     "declaredTile": {"sides": [s1, s2, s3]},
//     "pieces": [{"vertices": [[x, y], [x, y], [x, y]]}, ...] }
//
// The region is placed canonically from its sides; c must be exactly 1.
// Output uses canonical number formatting, so load followed by save
// reproduces an emitted file byte for byte.
std::string dissection_to_json(const Dissection& d);
Dissection dissection_from_json(std::string_view text);

// One polygon per piece plus the region outline. Coordinates are decimal
// renderings for display and are never read back.
std::string dissection_to_svg(const Dissection& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

// Shared SVG helpers.
namespace svg {

struct Polygon {
  std::vector<std::pair<double, double>> points;
  std::string css_class;
};

// Document with a y-up viewBox fitted around the polygons.
std::string document(const std::vector<Polygon>& polygons);

}  // namespace svg

}  // namespace equicut
