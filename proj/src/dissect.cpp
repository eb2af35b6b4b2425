#include "equicut/dissect.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "equicut/error.hpp"

namespace equicut {

PlacedTriangle canonical_region(const Triangle& t) {
  auto v = canonical_vertices(t);
  return PlacedTriangle(v[0], v[1], v[2]);
}

Dissection standard_dissection(const Triangle& t, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "standard dissection needs n >= 1");
  const auto sides = t.exact_sides();
  const PlacedTriangle region = canonical_region(t);
  const TowerReal step = TowerReal(Rational(1, static_cast<long>(n)));
  const Point e1 = (region[1] - region[0]).scaled(step);
  const Point e2 = (region[2] - region[0]).scaled(step);

  std::vector<std::vector<Point>> lattice(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i + j <= n; ++i) {
      lattice[j].push_back(region[0] + e1.scaled(TowerReal(static_cast<long>(i))) +
                           e2.scaled(TowerReal(static_cast<long>(j))));
    }
  }

  Dissection d{sides, region, {}, {}};
  d.pieces.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i + j < n; ++i) d.pieces.emplace_back(lattice[j][i], lattice[j][i + 1], lattice[j + 1][i]);
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t i = 0; i + j + 1 < n; ++i) {
      d.pieces.emplace_back(lattice[j][i + 1], lattice[j + 1][i + 1], lattice[j + 1][i]);
    }
  }
  for (std::size_t k = 0; k < 3; ++k) d.tile[k] = sides[k] * step;
  std::sort(d.tile.begin(), d.tile.end());
  return d;
}

const char* to_string(FailureKind k) {
  switch (k) {
    case FailureKind::PieceOverlap: return "piece-overlap";
    case FailureKind::PieceOutsideRegion: return "piece-outside-region";
    case FailureKind::AreaMismatch: return "area-mismatch";
    case FailureKind::CongruenceMismatch: return "congruence-mismatch";
  }
  return "?";
}

namespace {

struct Box {
  double lo_x, hi_x, lo_y, hi_y;
};

Box bounding_box(const PlacedTriangle& t) {
  Box b{INFINITY, -INFINITY, INFINITY, -INFINITY};
  for (const Point& p : t.vertices()) {
    const Interval x = p.x.enclose(64);
    const Interval y = p.y.enclose(64);
    b.lo_x = std::min(b.lo_x, x.lower());
    b.hi_x = std::max(b.hi_x, x.upper());
    b.lo_y = std::min(b.lo_y, y.lower());
    b.hi_y = std::max(b.hi_y, y.upper());
  }
  return b;
}

// Rigorous: boxes are outward-rounded, so strict separation here implies the
// closed triangles are disjoint.
bool boxes_apart(const Box& a, const Box& b) {
  return a.hi_x < b.lo_x || b.hi_x < a.lo_x || a.hi_y < b.lo_y || b.hi_y < a.lo_y;
}

std::string squared_sides_text(const PlacedTriangle& t) {
  std::string s;
  for (const TowerReal& x : t.sorted_squared_sides()) s += (s.empty() ? "" : ", ") + std::to_string(x.approx());
  return "squared sides (" + s + ")";
}

}  // namespace

VerificationReport verify_dissection(const Dissection& d, const VerifyOptions& options) {
  VerificationReport report;
  const std::size_t m = d.pieces.size();

  std::array<TowerReal, 3> tile_sq;
  for (std::size_t k = 0; k < 3; ++k) tile_sq[k] = d.tile[k] * d.tile[k];
  std::sort(tile_sq.begin(), tile_sq.end());

  for (std::size_t i = 0; i < m; ++i) {
    const PlacedTriangle& p = d.pieces[i];
    if (p.sorted_squared_sides() != tile_sq) {
      report.failures.push_back({FailureKind::CongruenceMismatch, i, Failure::npos,
                                 "piece is not congruent to the tile: " + squared_sides_text(p)});
    } else if (options.direct_only && i > 0 && !directly_congruent(d.pieces[0], p)) {
      report.failures.push_back(
          {FailureKind::CongruenceMismatch, i, Failure::npos, "piece is a mirror image of piece 0"});
    }
    for (std::size_t k = 0; k < 3; ++k) {
      if (point_in_triangle(p[k], d.region) == Containment::Outside) {
        report.failures.push_back({FailureKind::PieceOutsideRegion, i, Failure::npos,
                                   "vertex " + std::to_string(k) + " lies outside the region"});
        break;
      }
    }
  }

  std::vector<Box> boxes;
  boxes.reserve(m);
  for (const PlacedTriangle& p : d.pieces) boxes.push_back(bounding_box(p));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (boxes_apart(boxes[i], boxes[j])) continue;
      if (interiors_overlap(d.pieces[i], d.pieces[j])) {
        report.failures.push_back({FailureKind::PieceOverlap, i, j, "piece interiors intersect"});
      }
    }
  }

  TowerReal total;
  for (const PlacedTriangle& p : d.pieces) total += p.area();
  const TowerReal region_area = d.region.area();
  if (total != region_area) {
    report.failures.push_back({FailureKind::AreaMismatch, Failure::npos, Failure::npos,
                               "piece areas sum to " + std::to_string(total.approx()) + ", region area is " +
                                   std::to_string(region_area.approx())});
  }

  std::sort(report.failures.begin(), report.failures.end(), [](const Failure& a, const Failure& b) {
    return std::tie(a.kind, a.piece, a.other) < std::tie(b.kind, b.piece, b.other);
  });
  report.valid = report.failures.empty();
  return report;
}

namespace {

using Triple = std::array<Point, 3>;

Triple canonical_triple(const PlacedTriangle& t) {
  Triple v = t.vertices();
  std::sort(v.begin(), v.end(), lex_less);
  return v;
}

bool triple_less(const Triple& a, const Triple& b) {
  for (std::size_t k = 0; k < 3; ++k) {
    const int c = compare(a[k], b[k]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::vector<Triple> sorted_triples(const std::vector<PlacedTriangle>& pieces) {
  std::vector<Triple> out;
  out.reserve(pieces.size());
  for (const PlacedTriangle& p : pieces) out.push_back(canonical_triple(p));
  std::sort(out.begin(), out.end(), triple_less);
  return out;
}

}  // namespace

StandardCheck is_standard(const Dissection& d) {
  const std::size_t m = d.pieces.size();
  std::size_t n = 0;
  while ((n + 1) * (n + 1) <= m) ++n;
  if (n == 0 || n * n != m) return {false, std::to_string(m) + " pieces is not a perfect square"};
  const Triangle region(d.region_sides[0], d.region_sides[1]);
  const Dissection reference = standard_dissection(region, n);
  if (sorted_triples(d.pieces) != sorted_triples(reference.pieces)) {
    return {false, "pieces differ from the standard lattice of order " + std::to_string(n)};
  }
  return {true, "matches the standard lattice of order " + std::to_string(n)};
}

}  // namespace equicut
