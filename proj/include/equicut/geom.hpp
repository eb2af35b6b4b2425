#pragma once

#include <array>
#include <cstddef>

#include "equicut/tower.hpp"

namespace equicut {

struct Point {
  TowerReal x;
  TowerReal y;

  friend bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }
  friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
  Point operator-() const { return {-x, -y}; }
  Point scaled(const TowerReal& k) const { return {x * k, y * k}; }
};

// Lexicographic order on (x, y).
int compare(const Point& p, const Point& q);
bool lex_less(const Point& p, const Point& q);

TowerReal cross(const Point& u, const Point& v);
TowerReal dot(const Point& u, const Point& v);
TowerReal squared_distance(const Point& p, const Point& q);

// Sign of (q - p) x (r - p).
int orientation(const Point& p, const Point& q, const Point& r);

struct Segment {
  Point a;
  Point b;
};

enum class SegmentRelation { Disjoint, TouchAtEndpoint, OverlapCollinear, Cross };
const char* to_string(SegmentRelation r);

// TouchAtEndpoint covers every single-point contact involving an endpoint,
// including T-junctions. Cross means the segments meet at one point interior
// to both. Throws Degenerate for a zero-length segment.
SegmentRelation segment_interior_intersects(const Segment& s1, const Segment& s2);

// Whether the segment has a point strictly inside the open triangle with
// counterclockwise vertices a, b, c.
bool segment_meets_open_triangle(const Segment& s, const Point& a, const Point& b, const Point& c);

// Counterclockwise turn from u to v, an angle in [0, 2pi), kept as the
// unnormalized vector (u.v, u x v). Comparisons are exact and ignore lengths.
struct Turn {
  TowerReal dot;
  TowerReal cross;
};
Turn turn(const Point& u, const Point& v);
int compare(const Turn& s, const Turn& t);

class PlacedTriangle {
 public:
  // Vertices are reordered counterclockwise; collinear input throws
  // Degenerate.
  PlacedTriangle(Point p, Point q, Point r);

  const std::array<Point, 3>& vertices() const { return v_; }
  const Point& operator[](std::size_t i) const { return v_[i]; }

  // Squared length of edge v[i] -> v[i+1].
  const TowerReal& edge_squared(std::size_t i) const { return edge_sq_[i]; }
  // Squared side lengths, ascending.
  const std::array<TowerReal, 3>& sorted_squared_sides() const { return sorted_sq_; }

  TowerReal area() const;

 private:
  std::array<Point, 3> v_;
  std::array<TowerReal, 3> edge_sq_;
  std::array<TowerReal, 3> sorted_sq_;
};

enum class Containment { Inside, OnBoundary, Outside };
const char* to_string(Containment c);

Containment point_in_triangle(const Point& p, const PlacedTriangle& t);

// Whether the open interiors of two triangles intersect. Exact separating-axis
// test over the six edge lines.
bool interiors_overlap(const PlacedTriangle& s, const PlacedTriangle& t);

// p -> R(theta) F p + translation, where F is the reflection y -> -y when
// `reflect` is set.
struct Isometry {
  TowerReal cos{1};
  TowerReal sin{0};
  bool reflect = false;
  Point translation{TowerReal(0), TowerReal(0)};

  static Isometry identity() { return {}; }

  Point apply(const Point& p) const;
  // Linear part only.
  Point apply_linear(const Point& v) const;
  PlacedTriangle apply(const PlacedTriangle& t) const;
  // (f * g)(p) = f(g(p)).
  friend Isometry operator*(const Isometry& f, const Isometry& g);
  Isometry inverse() const;
};

// The isometry with the given chirality sending src.a -> dst.a and
// src.b -> dst.b. Throws LengthMismatch when the lengths differ.
Isometry isometry_mapping_segment(const Segment& src, const Segment& dst, bool reflect);

// Sorted side lengths; square roots are adjoined as needed.
std::array<TowerReal, 3> congruence_class(const PlacedTriangle& t);

bool congruent(const PlacedTriangle& s, const PlacedTriangle& t);
// Congruent by a rotation and translation only.
bool directly_congruent(const PlacedTriangle& s, const PlacedTriangle& t);

}  // namespace equicut
