#pragma once

#include <string>

#include <mpfr.h>

#include "equicut/rational.hpp"

namespace equicut {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 256;
inline constexpr Precision kMaxPrecision = 4096;

// Closed interval [lo, hi] with MPFR endpoints. Every operation rounds the
// lower endpoint down and the upper endpoint up, so the result encloses the
// exact image of any point of the operands.
class Interval {
 public:
  explicit Interval(Precision bits = kDefaultPrecision);
  Interval(const Rational& q, Precision bits);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval pi(Precision bits);
  static Interval hull(const Interval& a, const Interval& b);
  // The whole real line; used when a divisor straddles zero.
  static Interval entire(Precision bits);

  Precision precision() const { return mpfr_get_prec(lo_); }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;
  Interval scaled(long k) const;

  // Square root of the nonnegative part; lower endpoint is clamped at 0.
  Interval sqrt() const;
  // Arc cosine of the part inside [-1, 1].
  Interval acos() const;
  // Valid for arguments enclosed in [0, pi]; falls back to [-1, 1] otherwise.
  Interval sin() const;
  Interval cos() const;

  bool contains_zero() const;
  bool certainly_positive() const;
  bool certainly_negative() const;
  bool contains(const Interval& other) const;
  bool is_finite() const;

  double lower() const;  // rounded down
  double upper() const;  // rounded up
  double mid() const;
  // Upper bound on max(|x - mid()|) over the interval, as a double.
  double radius_from_mid() const;
  double width() const;

  std::string to_string(int digits = 20) const;

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace equicut
