#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "equicut/geom.hpp"
#include "equicut/trispace.hpp"

namespace equicut {

// A region triangle in canonical placement cut into pieces that are all
// congruent to `tile`.
struct Dissection {
  // Exact sides (a, b, c = 1) of the region.
  std::array<TowerReal, 3> region_sides;
  PlacedTriangle region;
  std::vector<PlacedTriangle> pieces;
  // Sorted side lengths of the tile.
  std::array<TowerReal, 3> tile;
};

// Region placed canonically from exact sides (a, b, 1).
PlacedTriangle canonical_region(const Triangle& t);

// Lattice subdivision into n^2 pieces by lines parallel to the sides: point
// (i, j) is A + i (B - A)/n + j (C - A)/n. Upward cells come first in (j, i)
// order, then downward cells. Throws InvalidArgument for n = 0.
Dissection standard_dissection(const Triangle& t, std::size_t n);

enum class FailureKind { PieceOverlap, PieceOutsideRegion, AreaMismatch, CongruenceMismatch };
const char* to_string(FailureKind k);

struct Failure {
  FailureKind kind;
  // Offending piece, and the second piece for overlaps; npos when the failure
  // concerns the dissection as a whole.
  std::size_t piece;
  std::size_t other;
  std::string detail;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct VerificationReport {
  bool valid = true;
  // Sorted by (kind, piece, other).
  std::vector<Failure> failures;
};

struct VerifyOptions {
  // Require every piece to be directly congruent to piece 0.
  bool direct_only = false;
};

// Containment of each piece in the convex region, pairwise interior
// disjointness, exact area sum and congruence to the tile together imply the
// pieces cover the region.
VerificationReport verify_dissection(const Dissection& d, const VerifyOptions& options = {});

struct StandardCheck {
  bool standard = false;
  std::string reason;
};

// Multiset equality of canonicalized vertex triples with
// standard_dissection(region, n) where pieces.size() = n^2.
StandardCheck is_standard(const Dissection& d);

}  // namespace equicut
