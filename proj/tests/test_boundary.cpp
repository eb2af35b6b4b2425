#include <algorithm>
#include <random>

#include "doctest.h"
#include "equicut/boundary.hpp"
#include "equicut/error.hpp"
#include "support/regions.hpp"

using namespace equicut;
using equicut::testing::all_cells;
using equicut::testing::all_small_regions;
using equicut::testing::random_simply_connected_region;

namespace {

constexpr auto Up = CellOrientation::Up;
constexpr auto Down = CellOrientation::Down;

LatticeRegion without(int n, Cell removed) {
  std::vector<Cell> cells;
  for (const Cell& c : all_cells(n)) {
    if (c != removed) cells.push_back(c);
  }
  return LatticeRegion(n, cells);
}

void check_steps(const BoundaryLoop& loop) {
  REQUIRE(loop.steps.size() == loop.vertices.size());
  for (std::size_t k = 0; k < loop.steps.size(); ++k) {
    const int s = loop.steps[k];
    REQUIRE((s == 1 || s == 2 || s == -1 || s == -2));
    REQUIRE((s > 0) == (loop.angles[k] == AngleClass::Convex));
  }
}

}  // namespace

TEST_CASE("full triangle") {
  const LatticeRegion r(2, all_cells(2));
  const auto loops = extract_boundary(r);
  REQUIRE(loops.size() == 1);
  const BoundaryLoop& loop = loops[0];
  CHECK(loop.outer);
  REQUIRE(loop.vertices.size() == 3);
  CHECK(loop.vertices[0] == LatticePoint{0, 0});
  CHECK(loop.vertices[1] == LatticePoint{2, 0});
  CHECK(loop.vertices[2] == LatticePoint{0, 2});
  for (AngleClass a : loop.angles) CHECK(a == AngleClass::Convex);
  CHECK(loop.steps == std::vector<int>{2, 2, 2});
  CHECK(clock_turning(loop) == 6);
  const auto pattern = find_lemma_pattern(loop);
  REQUIRE(pattern);
  CHECK(pattern->kind == LemmaPatternKind::TwoConvexAdjacent);
  CHECK(pattern->index == 0);
}

TEST_CASE("single cells") {
  for (Cell c : {Cell{0, 0, Up}, Cell{2, 1, Down}}) {
    const auto loops = extract_boundary(LatticeRegion(3, {c}));
    REQUIRE(loops.size() == 1);
    CHECK(loops[0].vertices.size() == 3);
    CHECK(clock_turning(loops[0]) == 6);
  }
}

TEST_CASE("parallelogram of two cells") {
  const auto loops = extract_boundary(LatticeRegion(2, {{1, 0, Up}, {1, 0, Down}}));
  REQUIRE(loops.size() == 1);
  CHECK(loops[0].vertices.size() == 4);
  for (AngleClass a : loops[0].angles) CHECK(a == AngleClass::Convex);
  CHECK(clock_turning(loops[0]) == 6);
  const auto pattern = find_lemma_pattern(loops[0]);
  REQUIRE(pattern);
  CHECK(pattern->kind == LemmaPatternKind::TwoConvexAdjacent);
  CHECK(pattern->index == 0);
}

TEST_CASE("staircase cells address the full order-2 triangle") {
  // Rows count from the apex, so these four cells are the whole n = 2 grid.
  const LatticeRegion r(2, {{0, 0, Up}, {1, 0, Up}, {1, 1, Up}, {1, 0, Down}});
  const auto loops = extract_boundary(r);
  REQUIRE(loops.size() == 1);
  CHECK(loops[0].vertices.size() == 3);
  const auto pattern = find_lemma_pattern(loops[0]);
  REQUIRE(pattern);
  CHECK(pattern->kind == LemmaPatternKind::TwoConvexAdjacent);
  CHECK(pattern->index == 0);
}

TEST_CASE("holes") {
  // n = 4: up(2, 1) has vertices (1,1), (2,1), (1,2), all interior.
  // n = 5: down(3, 1) has vertices (2,1), (2,2), (1,2), all interior.
  for (const auto& [n, cell] : {std::pair{4, Cell{2, 1, Up}}, std::pair{5, Cell{3, 1, Down}}}) {
    const LatticeRegion r = without(n, cell);
    const auto loops = extract_boundary(r);
    REQUIRE(loops.size() == 2);
    CHECK(loops[0].outer);
    CHECK(loops[0].vertices.size() == 3);
    CHECK(clock_turning(loops[0]) == 6);
    CHECK_FALSE(loops[1].outer);
    CHECK(loops[1].vertices.size() == 3);
    CHECK(clock_turning(loops[1]) == -6);
    for (AngleClass a : loops[1].angles) CHECK(a == AngleClass::Reflex);
    CHECK(r.edge_connected());
    CHECK_FALSE(is_simply_connected(r));
  }
  // Every down cell of the order-3 grid touches the outer edge; removing one
  // cuts off a corner cell instead of leaving a hole.
  const LatticeRegion cut = without(3, {2, 0, Down});
  const auto loops = extract_boundary(cut);
  REQUIRE(loops.size() == 2);
  CHECK(loops[0].outer);
  CHECK(loops[1].outer);
  CHECK_FALSE(cut.edge_connected());
}

TEST_CASE("pinched region keeps one loop through the pinch") {
  // Order 4 without the corner cells at A and without up(2, 1): the removed
  // down(3, 0) and up(2, 1) meet only at (1, 1), so the hole touches the
  // outside there and the walk passes (1, 1) twice.
  std::vector<Cell> cells;
  for (const Cell& c : all_cells(4)) {
    if (c != Cell{2, 1, Up} && c != Cell{3, 0, Up} && c != Cell{3, 0, Down}) cells.push_back(c);
  }
  const LatticeRegion r(4, cells);
  CHECK(r.edge_connected());
  const auto loops = extract_boundary(r);
  REQUIRE(loops.size() == 1);
  CHECK(loops[0].outer);
  CHECK(std::count(loops[0].vertices.begin(), loops[0].vertices.end(), LatticePoint{1, 1}) == 2);
  CHECK(clock_turning(loops[0]) == 6);
  check_steps(loops[0]);
  CHECK(find_lemma_pattern(loops[0]));
}

TEST_CASE("text format") {
  const LatticeRegion r = parse_region("# two cells\nn 3\n1 0 up\n1 0 down  # comment\n\n");
  CHECK(r.n() == 3);
  CHECK(r.cells().size() == 2);
  CHECK(parse_region(format_region(r)).cells() == r.cells());
  CHECK(parse_region("0 0 up\n2 1 down\n").n() == 3);
  CHECK_THROWS_AS(parse_region("0 0 sideways"), Error);
  CHECK_THROWS_AS(parse_region("0 1 up"), Error);
  CHECK_THROWS_AS(parse_region("1 1 down"), Error);
  CHECK_THROWS_AS(parse_region("# nothing\n"), Error);
  CHECK_THROWS_AS(parse_region("x 0 up"), Error);
}

TEST_CASE("clock turning rejects malformed loops") {
  BoundaryLoop loop;
  loop.directions = {0, 3, 0, 3};
  CHECK_THROWS_AS(clock_turning(loop), Error);
}

TEST_CASE("turning and lemma pattern on small and random regions") {
  std::size_t simply_connected = 0;
  for (const LatticeRegion& r : all_small_regions(4, 6)) {
    if (!is_simply_connected(r)) continue;
    ++simply_connected;
    const auto loops = extract_boundary(r);
    check_steps(loops[0]);
    REQUIRE(clock_turning(loops[0]) == 6);
    REQUIRE(find_lemma_pattern(loops[0]));
  }
  // Edge-connected subsets of the order-4 grid with at most 6 cells, counted
  // by a separate brute-force enumeration; none of them can enclose a hole.
  CHECK(simply_connected == 314);

  std::mt19937_64 rng(21);
  for (int k = 0; k < 50; ++k) {
    const LatticeRegion r = random_simply_connected_region(rng, 6, 7 + static_cast<std::size_t>(k % 20));
    const auto loops = extract_boundary(r);
    REQUIRE(loops.size() == 1);
    check_steps(loops[0]);
    REQUIRE(clock_turning(loops[0]) == 6);
    REQUIRE(find_lemma_pattern(loops[0]));
  }
}

TEST_CASE("svg") {
  const LatticeRegion r(2, all_cells(2));
  const std::string svg = region_to_svg(r, extract_boundary(r), Triangle(TowerReal(1), TowerReal(1)));
  CHECK(svg.find("class=\"boundary\"") != std::string::npos);
  CHECK(lattice_to_point(Triangle(TowerReal(1), TowerReal(1)), 2, {1, 1}).x == TowerReal(Rational(3, 4)));
}
