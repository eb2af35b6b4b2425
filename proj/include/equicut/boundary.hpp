#pragma once

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "equicut/geom.hpp"
#include "equicut/trispace.hpp"

namespace equicut {

// Lattice point (i, j) stands for A + i (B - A)/n + j (C - A)/n.
struct LatticePoint {
  int i = 0;
  int j = 0;
  auto operator<=>(const LatticePoint&) const = default;
};

enum class CellOrientation { Up, Down };

// Rows are counted from the apex C. Row r holds up cells c = 0..r and down
// cells c = 0..r-1. With J = n - 1 - r:
//   up   (r, c): (c, J), (c + 1, J), (c, J + 1)
//   down (r, c): (c + 1, J), (c + 1, J + 1), (c, J + 1)
struct Cell {
  int row = 0;
  int col = 0;
  CellOrientation orientation = CellOrientation::Up;
  auto operator<=>(const Cell&) const = default;
};

// A nonempty set of cells of the standard n-grid.
class LatticeRegion {
 public:
  // Throws InvalidArgument for out-of-range cells or an empty set.
  LatticeRegion(int n, const std::vector<Cell>& cells);

  int n() const { return n_; }
  const std::set<Cell>& cells() const { return cells_; }

  // Counterclockwise lattice vertices of a cell.
  std::array<LatticePoint, 3> cell_vertices(const Cell& c) const;

  // Cells sharing an edge form one component.
  bool edge_connected() const;

 private:
  int n_;
  std::set<Cell> cells_;
};

// Text format: one `row col up|down` per line; an optional `n N` line fixes
// the grid order (default: largest row + 1); `#` starts a comment.
LatticeRegion parse_region(std::string_view text);
std::string format_region(const LatticeRegion& r);

// Lattice edge directions in counterclockwise order:
//   0: (1, 0)  1: (0, 1)  2: (-1, 1)  3: (-1, 0)  4: (0, -1)  5: (1, -1)
// Consecutive directions are one clock unit apart.
inline constexpr std::array<LatticePoint, 6> kDirections{
    {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

enum class AngleClass { Convex, Reflex };

// A closed boundary walk with the region on its left. Only vertices where the
// direction changes are stored.
struct BoundaryLoop {
  std::vector<LatticePoint> vertices;
  // directions[k] is the direction of the edge vertices[k] -> vertices[k+1].
  std::vector<int> directions;
  // Clock units turned at vertices[k]: +1, +2 where the region angle is below
  // pi, -1, -2 where it exceeds pi.
  std::vector<int> steps;
  std::vector<AngleClass> angles;
  // Counterclockwise loop bounding a component from outside; holes run
  // clockwise.
  bool outer = true;
};

// Outer loops first, then holes; each loop starts at its lowest, then
// leftmost, vertex. At a vertex where the region touches itself the walk
// takes the first boundary edge clockwise from the reversed incoming edge, so
// every loop keeps the region on one side.
std::vector<BoundaryLoop> extract_boundary(const LatticeRegion& r);

// Sum of the per-vertex steps recomputed from the edge directions. Throws
// Degenerate when a step falls outside {-2, -1, +1, +2}.
int clock_turning(const BoundaryLoop& loop);

enum class LemmaPatternKind { TwoConvexAdjacent, ConvexReflexConvex };
const char* to_string(LemmaPatternKind k);

struct LemmaPattern {
  LemmaPatternKind kind;
  // TwoConvexAdjacent: vertices index and index + 1 are convex.
  // ConvexReflexConvex: vertex index is reflex, both neighbours convex.
  std::size_t index;
};

// First index in traversal order; at each index TwoConvexAdjacent is checked
// first. nullopt would contradict the lemma for an outer loop.
std::optional<LemmaPattern> find_lemma_pattern(const BoundaryLoop& loop);

// Edge-connected with a single boundary loop.
bool is_simply_connected(const LatticeRegion& r);

// Exact position of a lattice point for the canonical placement of t.
Point lattice_to_point(const Triangle& t, int n, LatticePoint p);

// Cells, plus each loop as an outline, drawn over the triangle t.
std::string region_to_svg(const LatticeRegion& r, const std::vector<BoundaryLoop>& loops, const Triangle& t);

}  // namespace equicut
