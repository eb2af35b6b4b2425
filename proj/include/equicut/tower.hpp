#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equicut/interval.hpp"
#include "equicut/rational.hpp"

namespace equicut {

struct TowerLevel;

// A square-root tower Q(sqrt r1)(sqrt r2)...; null is Q itself. Levels are
// immutable and shared, so equal pointers mean identical towers.
using Tower = std::shared_ptr<const TowerLevel>;

struct TowerLevel {
  Tower parent;
  // Radicand as coefficients over the parent tower; nonnegative and not a
  // square in the parent field.
  std::vector<Rational> radicand;
  std::size_t depth = 0;
};

std::size_t depth(const Tower& t);

// Exact real number in a square-root tower.
//
// Coefficients are stored flat: an element at depth k has 2^k rationals, the
// low half is p and the high half q in p + q*sqrt(r_k), recursively. Values
// are trimmed so the top generator always has a nonzero coefficient, which
// makes the representation unique within a tower chain.
class TowerReal {
 public:
  TowerReal() : coeffs_(1) {}
  TowerReal(const Rational& q) : coeffs_{q} {}  // NOLINT(implicit)
  TowerReal(long n) : coeffs_{Rational(n)} {}   // NOLINT(implicit)
  TowerReal(Tower tower, std::vector<Rational> coeffs);

  const Tower& tower() const { return tower_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  std::size_t depth() const { return equicut::depth(tower_); }

  bool is_zero() const;
  bool is_rational() const { return !tower_; }
  const Rational& rational_part() const { return coeffs_[0]; }
  // Requires is_rational().
  const Rational& as_rational() const;

  int sign() const;

  friend TowerReal operator+(const TowerReal& x, const TowerReal& y);
  friend TowerReal operator-(const TowerReal& x, const TowerReal& y);
  friend TowerReal operator*(const TowerReal& x, const TowerReal& y);
  friend TowerReal operator/(const TowerReal& x, const TowerReal& y);
  TowerReal operator-() const;
  TowerReal& operator+=(const TowerReal& y) { return *this = *this + y; }
  TowerReal& operator-=(const TowerReal& y) { return *this = *this - y; }
  TowerReal& operator*=(const TowerReal& y) { return *this = *this * y; }
  TowerReal& operator/=(const TowerReal& y) { return *this = *this / y; }

  TowerReal inverse() const;
  TowerReal square() const { return *this * *this; }

  friend bool operator==(const TowerReal& x, const TowerReal& y);
  friend int compare(const TowerReal& x, const TowerReal& y);
  friend bool operator<(const TowerReal& x, const TowerReal& y) { return compare(x, y) < 0; }
  friend bool operator>(const TowerReal& x, const TowerReal& y) { return compare(x, y) > 0; }
  friend bool operator<=(const TowerReal& x, const TowerReal& y) { return compare(x, y) <= 0; }
  friend bool operator>=(const TowerReal& x, const TowerReal& y) { return compare(x, y) >= 0; }

  // Rigorous enclosure of the real value.
  Interval enclose(Precision bits = kDefaultPrecision) const;
  double approx() const;

  // Re-express in `target`, which must contain this value's tower as a prefix.
  TowerReal lifted_to(const Tower& target) const;

 private:
  void trim();

  Tower tower_;
  std::vector<Rational> coeffs_;
};

// Nonnegative square root. Reuses the current tower when x is already a square
// there (decided exactly via the p + q*sqrt(r) criterion, recursively);
// otherwise adjoins sqrt(x) as a new level. Rational radicands are reduced to
// their squarefree kernel first. Throws NegativeRadicand for x < 0.
TowerReal sqrt_adjoin(const TowerReal& x, std::uint64_t trial_bound = kDefaultTrialBound);

// Square root within x's own tower, if it exists there.
std::optional<TowerReal> sqrt_in_tower(const TowerReal& x);

// Smallest tower containing all the given towers (merging where needed).
Tower common_tower(std::span<const TowerReal> values);

// Lift every value into one shared tower so later arithmetic takes the
// pointer-equality fast path.
void unify_towers(std::span<TowerReal> values);

bool same_tower(const Tower& a, const Tower& b);

}  // namespace equicut
