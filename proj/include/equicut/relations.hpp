#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equicut/kelement.hpp"
#include "equicut/trispace.hpp"

namespace equicut {

// Which coefficient vectors count as nondegenerate.
enum class RelationMask {
  NotAllZero,
  LeadingPairNonzero,  // (q1, q2) != (0, 0)
};

struct RelationQuery {
  std::vector<Quantity> values;
  int height = 1;
  // Squarefree radicands d; coefficients range over n * sqrt(d) with
  // 1 <= |n| <= height. {1} gives integer coefficients.
  std::vector<long> basis_radicands{1};
  Precision precision_bits = kDefaultPrecision;
  RelationMask mask = RelationMask::NotAllZero;
};

enum class RelationStatus { FoundCertified, FoundCandidate, NoneUpToHeight, Undecided };
const char* to_string(RelationStatus s);

enum class Certification { Exact, IntervalOnly };
const char* to_string(Certification c);

using CoefficientVector = std::vector<KElement>;
std::string to_string(const CoefficientVector& q);

struct Witness {
  CoefficientVector coefficients;
  Certification certification = Certification::IntervalOnly;
};

struct RelationReport {
  RelationStatus status = RelationStatus::NoneUpToHeight;
  // Sorted lexicographically by coefficient value.
  std::vector<Witness> witnesses;
  // Combinations whose enclosure kept 0 at kMaxPrecision without shrinking.
  std::vector<CoefficientVector> undecided;
  int height = 0;
  std::uint64_t combinations = 0;
};

// Exhaustive search over coefficient vectors of height <= H, normalized so the
// first nonzero coefficient is positive and the integer parts have gcd 1.
// Every reported nonzero combination was certified by an enclosure excluding
// 0 or, for exact inputs, by an exact sign test. Throws InvalidArgument on a
// malformed query.
RelationReport find_relations(const RelationQuery& query);

// Relations q1 alpha + q2 beta + q3 gamma = 0 with integer q.
RelationReport angle_relation_report(const Triangle& t, int height, Precision bits = kDefaultPrecision);

// Relations q1 a + q2 b + q3 = 0 over K with (q1, q2) != (0, 0). A side that
// is exactly in K over the basis yields a direct certified witness.
RelationReport side_relation_report(const Triangle& t, int height, const std::vector<long>& basis_radicands,
                                    Precision bits = kDefaultPrecision);

}  // namespace equicut
