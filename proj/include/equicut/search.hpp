#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "equicut/dissect.hpp"
#include "equicut/trispace.hpp"

namespace equicut {

// Zero means unlimited.
struct SearchLimits {
  std::uint64_t max_nodes = 0;
  std::size_t max_results = 0;
  std::chrono::milliseconds time_budget{0};
};

// Optional pruning rules. Exact containment of every placed piece is always
// enforced, so each rule only trades nodes for work.
struct PruneOptions {
  // The tile corner fits inside the frontier angle.
  bool angle_fit = true;
  // The angle left over at the vertex is zero or at least the smallest tile
  // angle.
  bool remainder = true;
  // The side laid along the frontier edge stops at a convex end vertex.
  bool overshoot = true;
};

struct SearchSpec {
  // Exact tier required.
  Triangle region;
  // Exact tile side lengths in counterclockwise order. Without reflections
  // every piece is a rotated and translated copy of that triangle.
  std::array<TowerReal, 3> tile;
  std::size_t pieces = 1;
  bool allow_reflections = true;
  // Keep one representative per orbit of the region's symmetry group.
  bool symmetry_quotient = false;
  SearchLimits limits;
  PruneOptions prunes;
  // Worker threads for the subtrees below the root; 0 picks the hardware
  // concurrency.
  unsigned workers = 1;
};

struct SearchResult {
  // Sorted canonically: pieces by lexicographic vertex triples, dissections
  // by their piece lists.
  std::vector<Dissection> dissections;
  // No limit was hit, so the list is exhaustive up to the dedup policy.
  bool complete = true;
  std::uint64_t nodes = 0;
  // Placements that passed the enabled prunes and reached the exact
  // containment check.
  std::uint64_t candidates = 0;
  // m * tile area differs from the region area; the search was skipped.
  bool area_mismatch = false;
};

// Depth-first search for every dissection of the region into `pieces` copies
// of the tile. Each node places the unique piece that has a corner at the
// smallest-angle frontier vertex and a side along its outgoing frontier edge.
// Throws InvalidArgument for a numeric region, a degenerate tile or zero
// pieces.
SearchResult search_dissections(const SearchSpec& spec);

// The region scaled by 1 / sqrt(m), as counterclockwise edge lengths
// (c, a, b) / sqrt(m) of the canonical placement.
std::array<TowerReal, 3> similar_tile(const Triangle& region, std::size_t m);

struct TileSearch {
  std::array<TowerReal, 3> tile;
  // "similar" for the scaled region, "extra k" for the k-th extra tile.
  std::string label;
  bool skipped = false;
  std::string notice;
  SearchResult result;
};

struct CountSearchOptions {
  bool allow_reflections = true;
  bool symmetry_quotient = false;
  SearchLimits limits;
  unsigned workers = 1;
};

// Runs the search with the similar tile and with every extra tile whose area
// is the region area / m. Other extra tiles are skipped with a notice.
std::vector<TileSearch> search_for_count(const Triangle& region, std::size_t m,
                                         const std::vector<std::array<TowerReal, 3>>& extra_tiles = {},
                                         const CountSearchOptions& options = {});

}  // namespace equicut
