#include "equicut/geom.hpp"

#include <algorithm>
#include <utility>

#include "equicut/error.hpp"

namespace equicut {

int compare(const Point& p, const Point& q) {
  const int cx = compare(p.x, q.x);
  return cx != 0 ? cx : compare(p.y, q.y);
}

bool lex_less(const Point& p, const Point& q) { return compare(p, q) < 0; }

TowerReal cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
TowerReal dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

TowerReal squared_distance(const Point& p, const Point& q) {
  const Point d = q - p;
  return dot(d, d);
}

int orientation(const Point& p, const Point& q, const Point& r) { return cross(q - p, r - p).sign(); }

const char* to_string(SegmentRelation r) {
  switch (r) {
    case SegmentRelation::Disjoint: return "disjoint";
    case SegmentRelation::TouchAtEndpoint: return "touch-at-endpoint";
    case SegmentRelation::OverlapCollinear: return "overlap-collinear";
    case SegmentRelation::Cross: return "cross";
  }
  return "?";
}

namespace {

// Position of p along the direction of s, for collinear comparisons.
TowerReal projection(const Segment& s, const Point& p) { return dot(p - s.a, s.b - s.a); }

}  // namespace

SegmentRelation segment_interior_intersects(const Segment& s1, const Segment& s2) {
  if (s1.a == s1.b || s2.a == s2.b) throw Error(ErrorCode::Degenerate, "zero-length segment");
  const int o1 = orientation(s1.a, s1.b, s2.a);
  const int o2 = orientation(s1.a, s1.b, s2.b);
  const int o3 = orientation(s2.a, s2.b, s1.a);
  const int o4 = orientation(s2.a, s2.b, s1.b);

  if (o1 == 0 && o2 == 0) {
    // Collinear: compare the projections of s2 onto s1's parameter range.
    const TowerReal len = projection(s1, s1.b);
    TowerReal lo = projection(s1, s2.a);
    TowerReal hi = projection(s1, s2.b);
    if (lo > hi) std::swap(lo, hi);
    const TowerReal start = std::max(lo, TowerReal(0));
    const TowerReal end = std::min(hi, len);
    const int c = compare(start, end);
    if (c > 0) return SegmentRelation::Disjoint;
    return c == 0 ? SegmentRelation::TouchAtEndpoint : SegmentRelation::OverlapCollinear;
  }
  if (o1 * o2 > 0 || o3 * o4 > 0) return SegmentRelation::Disjoint;
  if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return SegmentRelation::Cross;
  // Exactly one endpoint lies on the other segment's line; straddling was
  // ruled out above, so the contact point is that endpoint.
  return SegmentRelation::TouchAtEndpoint;
}

bool segment_meets_open_triangle(const Segment& s, const Point& a, const Point& b, const Point& c) {
  // Clip the parameter range [0, 1] of s against the three open half-planes.
  // The open interval (L, U) is nonempty iff the open segment meets the open
  // triangle; endpoints on the closed segment give the same answer because
  // the half-planes are open.
  TowerReal lo(0);
  TowerReal hi(1);
  const Point d = s.b - s.a;
  const std::array<std::pair<const Point*, const Point*>, 3> edges{{{&a, &b}, {&b, &c}, {&c, &a}}};
  for (const auto& [p, q] : edges) {
    const Point e = *q - *p;
    // Inside iff cross(e, x - p) > 0; along s this is f0 + t * f1.
    const TowerReal f0 = cross(e, s.a - *p);
    const TowerReal f1 = cross(e, d);
    const int s1 = f1.sign();
    if (s1 == 0) {
      if (f0.sign() <= 0) return false;
      continue;
    }
    const TowerReal t = -f0 / f1;
    if (s1 > 0) {
      if (t > lo) lo = t;
    } else {
      if (t < hi) hi = t;
    }
    if (lo >= hi) return false;
  }
  return lo < hi;
}

Turn turn(const Point& u, const Point& v) { return {dot(u, v), cross(u, v)}; }

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half(const Turn& t) {
  const int c = t.cross.sign();
  return (c > 0 || (c == 0 && t.dot.sign() > 0)) ? 0 : 1;
}

}  // namespace

int compare(const Turn& s, const Turn& t) {
  const int hs = half(s);
  const int ht = half(t);
  if (hs != ht) return hs < ht ? -1 : 1;
  const int c = cross(Point{s.dot, s.cross}, Point{t.dot, t.cross}).sign();
  return -c;
}

PlacedTriangle::PlacedTriangle(Point p, Point q, Point r) : v_{std::move(p), std::move(q), std::move(r)} {
  const int o = orientation(v_[0], v_[1], v_[2]);
  if (o == 0) throw Error(ErrorCode::Degenerate, "collinear triangle vertices");
  if (o < 0) std::swap(v_[1], v_[2]);
  for (std::size_t i = 0; i < 3; ++i) edge_sq_[i] = squared_distance(v_[i], v_[(i + 1) % 3]);
  sorted_sq_ = edge_sq_;
  std::sort(sorted_sq_.begin(), sorted_sq_.end());
}

TowerReal PlacedTriangle::area() const { return cross(v_[1] - v_[0], v_[2] - v_[0]) / TowerReal(2); }

const char* to_string(Containment c) {
  switch (c) {
    case Containment::Inside: return "inside";
    case Containment::OnBoundary: return "on-boundary";
    case Containment::Outside: return "outside";
  }
  return "?";
}

Containment point_in_triangle(const Point& p, const PlacedTriangle& t) {
  bool on_edge = false;
  for (std::size_t i = 0; i < 3; ++i) {
    const int o = orientation(t[i], t[(i + 1) % 3], p);
    if (o < 0) return Containment::Outside;
    on_edge = on_edge || o == 0;
  }
  return on_edge ? Containment::OnBoundary : Containment::Inside;
}

namespace {

// Whether the line through edge i of s weakly separates s from t.
bool separates(const PlacedTriangle& s, std::size_t i, const PlacedTriangle& t) {
  const Point& p = s[i];
  const Point& q = s[(i + 1) % 3];
  for (const Point& v : t.vertices()) {
    if (orientation(p, q, v) > 0) return false;
  }
  return true;
}

}  // namespace

bool interiors_overlap(const PlacedTriangle& s, const PlacedTriangle& t) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (separates(s, i, t) || separates(t, i, s)) return false;
  }
  return true;
}

Point Isometry::apply_linear(const Point& v) const {
  const TowerReal vy = reflect ? -v.y : v.y;
  return {cos * v.x - sin * vy, sin * v.x + cos * vy};
}

Point Isometry::apply(const Point& p) const { return apply_linear(p) + translation; }

PlacedTriangle Isometry::apply(const PlacedTriangle& t) const {
  return PlacedTriangle(apply(t[0]), apply(t[1]), apply(t[2]));
}

Isometry operator*(const Isometry& f, const Isometry& g) {
  // F R(theta) = R(-theta) F.
  const TowerReal gs = f.reflect ? -g.sin : g.sin;
  Isometry h;
  h.cos = f.cos * g.cos - f.sin * gs;
  h.sin = f.sin * g.cos + f.cos * gs;
  h.reflect = f.reflect != g.reflect;
  h.translation = f.apply(g.translation);
  return h;
}

Isometry Isometry::inverse() const {
  // (R F)^-1 = F R(-theta); for F set that equals R(theta) F.
  Isometry h;
  h.cos = cos;
  h.sin = reflect ? sin : -sin;
  h.reflect = reflect;
  h.translation = -h.apply_linear(translation);
  return h;
}

Isometry isometry_mapping_segment(const Segment& src, const Segment& dst, bool reflect) {
  Point s = src.b - src.a;
  if (reflect) s.y = -s.y;
  const Point d = dst.b - dst.a;
  const TowerReal len_sq = dot(s, s);
  if (len_sq != dot(d, d)) throw Error(ErrorCode::LengthMismatch, "segments have different lengths");
  if (len_sq.is_zero()) throw Error(ErrorCode::Degenerate, "zero-length segment");
  Isometry f;
  f.cos = dot(s, d) / len_sq;
  f.sin = cross(s, d) / len_sq;
  f.reflect = reflect;
  f.translation = dst.a - f.apply_linear(src.a);
  return f;
}

std::array<TowerReal, 3> congruence_class(const PlacedTriangle& t) {
  std::array<TowerReal, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = sqrt_adjoin(t.sorted_squared_sides()[i]);
  return out;
}

bool congruent(const PlacedTriangle& s, const PlacedTriangle& t) {
  return s.sorted_squared_sides() == t.sorted_squared_sides();
}

bool directly_congruent(const PlacedTriangle& s, const PlacedTriangle& t) {
  // Orientation-preserving maps keep the counterclockwise cyclic order of the
  // edges.
  for (std::size_t k = 0; k < 3; ++k) {
    if (s.edge_squared(0) == t.edge_squared(k) && s.edge_squared(1) == t.edge_squared((k + 1) % 3) &&
        s.edge_squared(2) == t.edge_squared((k + 2) % 3)) {
      return true;
    }
  }
  return false;
}

}  // namespace equicut
