#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

#include "equicut/geom.hpp"
#include "equicut/interval.hpp"
#include "equicut/tower.hpp"

namespace equicut {

// Produces an enclosure whose width shrinks as the precision grows.
using Refiner = std::function<Interval(Precision)>;

// A real quantity that is either exact or only known through enclosures.
class Quantity {
 public:
  Quantity(TowerReal exact);  // NOLINT(implicit)
  static Quantity numeric(Refiner refine);

  bool is_exact() const { return exact_.has_value(); }
  // Throws InvalidArgument for numeric quantities.
  const TowerReal& exact() const;
  Interval enclose(Precision bits = kDefaultPrecision) const;
  double approx() const;

 private:
  Quantity() = default;
  std::optional<TowerReal> exact_;
  Refiner refine_;
};

enum class Tier { Exact, Numeric };

// Triangle with sides a = |BC|, b = |CA| and c = |AB| = 1. The strict
// triangle inequalities hold: certified exactly for the exact tier, by
// enclosure for the numeric tier.
class Triangle {
 public:
  Triangle(Quantity a, Quantity b);

  const Quantity& a() const { return a_; }
  const Quantity& b() const { return b_; }
  Tier tier() const { return a_.is_exact() && b_.is_exact() ? Tier::Exact : Tier::Numeric; }
  bool is_exact() const { return tier() == Tier::Exact; }

  // Exact sides (a, b, 1); requires the exact tier.
  std::array<TowerReal, 3> exact_sides() const;

 private:
  Quantity a_;
  Quantity b_;
};

// Canonical placement A = (0, 0), B = (1, 0), C above the x-axis.
std::array<Point, 3> canonical_vertices(const Triangle& t);

struct AnglePair {
  Quantity alpha;
  Quantity beta;
};

// Law of sines with gamma = pi - alpha - beta. Throws Degenerate when the pair
// is certainly outside the open angle simplex.
Triangle sides_from_angles(const AnglePair& p);

struct TriangleAngles {
  // Exact cosines (cos A, cos B, cos C), present for the exact tier.
  std::optional<std::array<TowerReal, 3>> cosines;
  Quantity alpha;
  Quantity beta;
  Quantity gamma;
};

TriangleAngles angles_from_sides(const Triangle& t);

enum class SampleMode { UniformM, UniformN };
const char* to_string(SampleMode m);

struct SampleInfo {
  // Draws of the rejection sampler, including the accepted one.
  std::uint64_t attempts = 0;
  // The accepted draw: the sides (a, b) for UniformM, (alpha, beta) / pi for
  // UniformN. Dyadic rationals k / 2^53.
  Rational u;
  Rational v;
};

// Deterministic per seed. UniformM draws (a, b) from the unit square and
// keeps a + b > 1. UniformN draws (alpha, beta) = pi * (u, v) with u + v < 1
// and maps them through sides_from_angles. Both return the numeric tier: a
// sample stands for a generic real point, not for the dyadic rational that
// happens to represent it.
Triangle sample_triangle(std::uint64_t seed, SampleMode mode, SampleInfo* info = nullptr);

}  // namespace equicut
