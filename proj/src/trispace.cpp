#include "equicut/trispace.hpp"

#include <random>
#include <utility>

#include "equicut/error.hpp"

namespace equicut {

namespace {

constexpr Precision kGuardBits = 32;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform dyadic rational k / 2^53 with 0 < k < 2^53.
Rational open_unit_dyadic(std::mt19937_64& rng) {
  std::uint64_t k = 0;
  while (k == 0) k = rng() >> 11;
  Rational q(Integer(std::to_string(k)), Integer(1) << 53);
  q.canonicalize();
  return q;
}

// Certifies x > 0 by refining up to kMaxPrecision.
bool certainly_positive(const Refiner& f) {
  for (Precision bits = kDefaultPrecision; bits <= kMaxPrecision; bits *= 2) {
    const Interval iv = f(bits);
    if (iv.certainly_positive()) return true;
    if (!iv.contains_zero()) return false;
  }
  return false;
}

}  // namespace

Quantity::Quantity(TowerReal exact) : exact_(std::move(exact)) {}

Quantity Quantity::numeric(Refiner refine) {
  Quantity q;
  q.refine_ = std::move(refine);
  return q;
}

const TowerReal& Quantity::exact() const {
  if (!exact_) throw Error(ErrorCode::InvalidArgument, "quantity is only known numerically");
  return *exact_;
}

Interval Quantity::enclose(Precision bits) const { return exact_ ? exact_->enclose(bits) : refine_(bits); }

double Quantity::approx() const { return exact_ ? exact_->approx() : refine_(64).mid(); }

Triangle::Triangle(Quantity a, Quantity b) : a_(std::move(a)), b_(std::move(b)) {
  if (is_exact()) {
    const TowerReal& x = a_.exact();
    const TowerReal& y = b_.exact();
    if ((x + 1 - y).sign() <= 0 || (y + 1 - x).sign() <= 0 || (x + y - 1).sign() <= 0) {
      throw Error(ErrorCode::Degenerate, "sides violate the strict triangle inequality");
    }
    return;
  }
  const Quantity& x = a_;
  const Quantity& y = b_;
  const auto one = [](Precision bits) { return Interval(Rational(1), bits); };
  const bool ok = certainly_positive([&](Precision p) { return x.enclose(p) + one(p) - y.enclose(p); }) &&
                  certainly_positive([&](Precision p) { return y.enclose(p) + one(p) - x.enclose(p); }) &&
                  certainly_positive([&](Precision p) { return x.enclose(p) + y.enclose(p) - one(p); });
  if (!ok) throw Error(ErrorCode::Degenerate, "sides violate the strict triangle inequality");
}

std::array<TowerReal, 3> Triangle::exact_sides() const { return {a_.exact(), b_.exact(), TowerReal(1)}; }

std::array<Point, 3> canonical_vertices(const Triangle& t) {
  const auto [a, b, c] = t.exact_sides();
  // |AC| = b, |BC| = a with A, B on the x-axis.
  const TowerReal x = (b * b - a * a + 1) / TowerReal(2);
  const TowerReal y = sqrt_adjoin(b * b - x * x);
  return {Point{TowerReal(0), TowerReal(0)}, Point{TowerReal(1), TowerReal(0)}, Point{x, y}};
}

Triangle sides_from_angles(const AnglePair& p) {
  const auto gamma_at = [p](Precision bits) {
    return Interval::pi(bits) - p.alpha.enclose(bits) - p.beta.enclose(bits);
  };
  if (!certainly_positive([&](Precision bits) { return p.alpha.enclose(bits); }) ||
      !certainly_positive([&](Precision bits) { return p.beta.enclose(bits); }) || !certainly_positive(gamma_at)) {
    throw Error(ErrorCode::Degenerate, "angles outside the open simplex alpha, beta > 0, alpha + beta < pi");
  }
  const auto side = [p, gamma_at](const Quantity& angle) {
    return Quantity::numeric([angle, gamma_at](Precision bits) {
      const Precision work = bits + kGuardBits;
      return angle.enclose(work).sin() / gamma_at(work).sin();
    });
  };
  return Triangle(side(p.alpha), side(p.beta));
}

TriangleAngles angles_from_sides(const Triangle& t) {
  if (t.is_exact()) {
    const auto [a, b, c] = t.exact_sides();
    const TowerReal a2 = a * a;
    const TowerReal b2 = b * b;
    const std::array<TowerReal, 3> cosines{(b2 + 1 - a2) / (TowerReal(2) * b), (a2 + 1 - b2) / (TowerReal(2) * a),
                                           (a2 + b2 - 1) / (TowerReal(2) * a * b)};
    const auto angle = [](const TowerReal& cosine) {
      return Quantity::numeric([cosine](Precision bits) { return cosine.enclose(bits + kGuardBits).acos(); });
    };
    return {cosines, angle(cosines[0]), angle(cosines[1]), angle(cosines[2])};
  }
  const Quantity a = t.a();
  const Quantity b = t.b();
  // Law of cosines on enclosures; index 0, 1, 2 selects the angle at A, B, C.
  const auto angle = [a, b](int which) {
    return Quantity::numeric([a, b, which](Precision bits) {
      const Precision work = bits + kGuardBits;
      const Interval x = a.enclose(work);
      const Interval y = b.enclose(work);
      const Interval one(Rational(1), work);
      const Interval x2 = x * x;
      const Interval y2 = y * y;
      Interval cosine(work);
      switch (which) {
        case 0: cosine = (y2 + one - x2) / y.scaled(2); break;
        case 1: cosine = (x2 + one - y2) / x.scaled(2); break;
        default: cosine = (x2 + y2 - one) / (x * y).scaled(2); break;
      }
      return cosine.acos();
    });
  };
  return {std::nullopt, angle(0), angle(1), angle(2)};
}

const char* to_string(SampleMode m) { return m == SampleMode::UniformM ? "uniform-M" : "uniform-N"; }

Triangle sample_triangle(std::uint64_t seed, SampleMode mode, SampleInfo* info) {
  std::mt19937_64 rng(splitmix64(seed));
  std::uint64_t attempts = 0;
  while (true) {
    ++attempts;
    const Rational u = open_unit_dyadic(rng);
    const Rational v = open_unit_dyadic(rng);
    if (mode == SampleMode::UniformM ? u + v <= 1 : u + v >= 1) continue;
    if (info) *info = {attempts, u, v};
    if (mode == SampleMode::UniformM) {
      const auto side = [](Rational k) {
        return Quantity::numeric([k](Precision bits) { return Interval(k, bits); });
      };
      return Triangle(side(u), side(v));
    }
    const auto scaled_pi = [](Rational k) {
      return Quantity::numeric([k](Precision bits) { return Interval::pi(bits) * Interval(k, bits); });
    };
    return sides_from_angles(AnglePair{scaled_pi(u), scaled_pi(v)});
  }
}

}  // namespace equicut
