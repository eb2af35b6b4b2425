#include "equicut/boundary.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "equicut/error.hpp"
#include "equicut/io.hpp"

namespace equicut {

namespace {

int direction_index(LatticePoint from, LatticePoint to) {
  const LatticePoint d{to.i - from.i, to.j - from.j};
  for (int k = 0; k < 6; ++k) {
    if (kDirections[static_cast<std::size_t>(k)] == d) return k;
  }
  throw Error(ErrorCode::Degenerate, "boundary edge is not a unit lattice step");
}

LatticePoint step(LatticePoint p, int dir) {
  const LatticePoint d = kDirections[static_cast<std::size_t>(dir)];
  return {p.i + d.i, p.j + d.j};
}

int mod6(int x) { return ((x % 6) + 6) % 6; }

// Clock units turned from direction `in` to direction `out`.
int turn_units(int in, int out) {
  const int delta = mod6(out - in);
  return delta <= 3 ? delta : delta - 6;
}

using Edge = std::pair<LatticePoint, LatticePoint>;

long long twice_signed_area(const std::vector<LatticePoint>& poly) {
  long long s = 0;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const LatticePoint& p = poly[k];
    const LatticePoint& q = poly[(k + 1) % poly.size()];
    s += static_cast<long long>(p.i) * q.j - static_cast<long long>(q.i) * p.j;
  }
  return s;
}

bool lower_left(LatticePoint a, LatticePoint b) { return a.j != b.j ? a.j < b.j : a.i < b.i; }

}  // namespace

LatticeRegion::LatticeRegion(int n, const std::vector<Cell>& cells) : n_(n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "grid order must be at least 1");
  for (const Cell& c : cells) {
    const int max_col = c.orientation == CellOrientation::Up ? c.row : c.row - 1;
    if (c.row < 0 || c.row >= n || c.col < 0 || c.col > max_col) {
      throw Error(ErrorCode::InvalidArgument, "cell (" + std::to_string(c.row) + ", " + std::to_string(c.col) + ", " +
                                                  (c.orientation == CellOrientation::Up ? "up" : "down") +
                                                  ") is outside the grid of order " + std::to_string(n));
    }
    cells_.insert(c);
  }
  if (cells_.empty()) throw Error(ErrorCode::InvalidArgument, "region has no cells");
}

std::array<LatticePoint, 3> LatticeRegion::cell_vertices(const Cell& c) const {
  const int j = n_ - 1 - c.row;
  if (c.orientation == CellOrientation::Up) return {{{c.col, j}, {c.col + 1, j}, {c.col, j + 1}}};
  return {{{c.col + 1, j}, {c.col + 1, j + 1}, {c.col, j + 1}}};
}

bool LatticeRegion::edge_connected() const {
  // Union cells through shared undirected edges.
  std::map<Edge, std::vector<Cell>> by_edge;
  for (const Cell& c : cells_) {
    const auto v = cell_vertices(c);
    for (std::size_t k = 0; k < 3; ++k) by_edge[std::minmax(v[k], v[(k + 1) % 3])].push_back(c);
  }
  std::map<Cell, std::vector<Cell>> adj;
  for (const auto& [e, cs] : by_edge) {
    if (cs.size() == 2) {
      adj[cs[0]].push_back(cs[1]);
      adj[cs[1]].push_back(cs[0]);
    }
  }
  std::set<Cell> seen{*cells_.begin()};
  std::vector<Cell> stack{*cells_.begin()};
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    for (const Cell& d : adj[c]) {
      if (seen.insert(d).second) stack.push_back(d);
    }
  }
  return seen.size() == cells_.size();
}

LatticeRegion parse_region(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Cell> cells;
  int n = -1;
  int max_row = -1;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    const auto fail = [&](const std::string& what) -> void {
      throw Error(ErrorCode::Parse, "region line " + std::to_string(line_no) + ": " + what, line_no);
    };
    std::string extra;
    if (first == "n") {
      if (!(fields >> n) || n < 1 || (fields >> extra)) fail("expected `n <order>`");
      continue;
    }
    Cell c;
    std::string orient;
    try {
      std::size_t used = 0;
      c.row = std::stoi(first, &used);
      if (used != first.size()) fail("bad row");
    } catch (const std::logic_error&) {
      fail("expected `row col up|down`");
    }
    if (!(fields >> c.col >> orient) || (fields >> extra)) fail("expected `row col up|down`");
    if (orient == "up") {
      c.orientation = CellOrientation::Up;
    } else if (orient == "down") {
      c.orientation = CellOrientation::Down;
    } else {
      fail("orientation must be `up` or `down`");
    }
    max_row = std::max(max_row, c.row);
    cells.push_back(c);
  }
  return LatticeRegion(n > 0 ? n : max_row + 1, cells);
}

std::string format_region(const LatticeRegion& r) {
  std::string out = "n " + std::to_string(r.n()) + "\n";
  for (const Cell& c : r.cells()) {
    out += std::to_string(c.row) + " " + std::to_string(c.col) + " " +
           (c.orientation == CellOrientation::Up ? "up" : "down") + "\n";
  }
  return out;
}

std::vector<BoundaryLoop> extract_boundary(const LatticeRegion& r) {
  std::set<Edge> edges;
  for (const Cell& c : r.cells()) {
    const auto v = r.cell_vertices(c);
    for (std::size_t k = 0; k < 3; ++k) edges.insert({v[k], v[(k + 1) % 3]});
  }
  // Outgoing boundary directions per vertex.
  std::map<LatticePoint, std::vector<int>> out;
  std::set<Edge> unused;
  for (const Edge& e : edges) {
    if (edges.count({e.second, e.first})) continue;
    out[e.first].push_back(direction_index(e.first, e.second));
    unused.insert(e);
  }

  std::vector<BoundaryLoop> loops;
  while (!unused.empty()) {
    // Walk unit edges until the first edge comes round again.
    const Edge first = *std::min_element(unused.begin(), unused.end(), [](const Edge& a, const Edge& b) {
      return lower_left(a.first, b.first) || (a.first == b.first && lower_left(a.second, b.second));
    });
    std::vector<LatticePoint> points;
    std::vector<int> dirs;
    Edge e = first;
    do {
      unused.erase(e);
      points.push_back(e.first);
      const int d = direction_index(e.first, e.second);
      dirs.push_back(d);
      const int back = mod6(d + 3);
      const auto& options = out.at(e.second);
      int best = -1;
      for (int o : options) {
        if (best < 0 || mod6(back - o) < mod6(back - best)) best = o;
      }
      e = {e.second, step(e.second, best)};
    } while (e != first);

    // Keep only corners.
    BoundaryLoop loop;
    const std::size_t m = points.size();
    for (std::size_t k = 0; k < m; ++k) {
      const int in = dirs[(k + m - 1) % m];
      if (in == dirs[k]) continue;
      loop.vertices.push_back(points[k]);
      loop.directions.push_back(dirs[k]);
      const int s = turn_units(in, dirs[k]);
      loop.steps.push_back(s);
      loop.angles.push_back(s > 0 ? AngleClass::Convex : AngleClass::Reflex);
    }
    loop.outer = twice_signed_area(loop.vertices) > 0;

    // Rotate to start at the lowest, then leftmost, corner.
    const auto start = std::min_element(loop.vertices.begin(), loop.vertices.end(), lower_left) - loop.vertices.begin();
    std::rotate(loop.vertices.begin(), loop.vertices.begin() + start, loop.vertices.end());
    std::rotate(loop.directions.begin(), loop.directions.begin() + start, loop.directions.end());
    std::rotate(loop.steps.begin(), loop.steps.begin() + start, loop.steps.end());
    std::rotate(loop.angles.begin(), loop.angles.begin() + start, loop.angles.end());
    loops.push_back(std::move(loop));
  }
  std::stable_sort(loops.begin(), loops.end(), [](const BoundaryLoop& a, const BoundaryLoop& b) {
    if (a.outer != b.outer) return a.outer;
    return lower_left(a.vertices.front(), b.vertices.front());
  });
  return loops;
}

int clock_turning(const BoundaryLoop& loop) {
  const std::size_t m = loop.directions.size();
  int total = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const int s = turn_units(loop.directions[(k + m - 1) % m], loop.directions[k]);
    if (s == 0 || s < -2 || s > 2) {
      throw Error(ErrorCode::Degenerate, "malformed loop: step " + std::to_string(s) + " at vertex " + std::to_string(k));
    }
    total += s;
  }
  return total;
}

const char* to_string(LemmaPatternKind k) {
  return k == LemmaPatternKind::TwoConvexAdjacent ? "two-convex-adjacent" : "convex-reflex-convex";
}

std::optional<LemmaPattern> find_lemma_pattern(const BoundaryLoop& loop) {
  const std::size_t m = loop.angles.size();
  const auto convex = [&](std::size_t k) { return loop.angles[k % m] == AngleClass::Convex; };
  for (std::size_t k = 0; k < m; ++k) {
    if (convex(k) && convex(k + 1)) return LemmaPattern{LemmaPatternKind::TwoConvexAdjacent, k};
    if (!convex(k) && convex(k + m - 1) && convex(k + 1)) return LemmaPattern{LemmaPatternKind::ConvexReflexConvex, k};
  }
  return std::nullopt;
}

bool is_simply_connected(const LatticeRegion& r) {
  return r.edge_connected() && extract_boundary(r).size() == 1;
}

Point lattice_to_point(const Triangle& t, int n, LatticePoint p) {
  const auto v = canonical_vertices(t);
  const TowerReal inv(Rational(1, n));
  return v[0] + (v[1] - v[0]).scaled(TowerReal(p.i) * inv) + (v[2] - v[0]).scaled(TowerReal(p.j) * inv);
}

std::string region_to_svg(const LatticeRegion& r, const std::vector<BoundaryLoop>& loops, const Triangle& t) {
  const auto v = canonical_vertices(t);
  const double bx = v[1].x.approx(), cx = v[2].x.approx(), cy = v[2].y.approx();
  const double n = r.n();
  const auto place = [&](LatticePoint p) { return std::make_pair((p.i * bx + p.j * cx) / n, p.j * cy / n); };
  std::vector<svg::Polygon> polys;
  polys.push_back({{place({0, 0}), place({r.n(), 0}), place({0, r.n()})}, "region"});
  for (const Cell& c : r.cells()) {
    svg::Polygon p{{}, "cell"};
    for (const LatticePoint& q : r.cell_vertices(c)) p.points.push_back(place(q));
    polys.push_back(std::move(p));
  }
  for (const BoundaryLoop& loop : loops) {
    svg::Polygon p{{}, "boundary"};
    for (const LatticePoint& q : loop.vertices) p.points.push_back(place(q));
    polys.push_back(std::move(p));
  }
  return svg::document(polys);
}

}  // namespace equicut
