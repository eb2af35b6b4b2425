#pragma once

#include <map>
#include <optional>
#include <string>

#include "equicut/rational.hpp"
#include "equicut/tower.hpp"

namespace equicut {

// Element of the field generated by the square roots of all naturals, in the
// normal form sum of c_d * sqrt(d) over squarefree d (d = 1 is the rational
// part). Zero coefficients are never stored, so two elements are equal iff
// their term maps are equal.
class KElement {
 public:
  using Terms = std::map<Integer, Rational>;

  KElement() = default;
  KElement(const Rational& q);  // NOLINT(implicit)
  KElement(long n) : KElement(Rational(n)) {}  // NOLINT(implicit)

  // c * sqrt(n) for a natural n; the square part of n is pulled out.
  static KElement sqrt_of(const Integer& n, const Rational& c = Rational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_part() const;

  friend KElement operator+(const KElement& x, const KElement& y);
  friend KElement operator-(const KElement& x, const KElement& y);
  friend KElement operator*(const KElement& x, const KElement& y);
  friend KElement operator/(const KElement& x, const KElement& y);
  KElement operator-() const;
  KElement inverse() const;

  friend bool operator==(const KElement& x, const KElement& y) { return x.terms_ == y.terms_; }

  TowerReal to_tower() const;
  // Defined when every radicand in x's tower is rational.
  static std::optional<KElement> from_tower(const TowerReal& x);

  std::string to_string() const;

 private:
  void add_term(const Integer& d, const Rational& c);

  Terms terms_;
};

}  // namespace equicut
