#include "equicut/kelement.hpp"

#include "equicut/error.hpp"

namespace equicut {

KElement::KElement(const Rational& q) {
  if (sgn(q) != 0) terms_[Integer(1)] = q;
}

KElement KElement::sqrt_of(const Integer& n, const Rational& c) {
  if (n < 0) throw Error(ErrorCode::NegativeRadicand, "square root of a negative number");
  KElement r;
  if (n == 0 || sgn(c) == 0) return r;
  const SquarefreeSplit split = squarefree_split(n);
  r.add_term(split.kernel, c * Rational(split.root));
  return r;
}

void KElement::add_term(const Integer& d, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool KElement::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational KElement::rational_part() const {
  auto it = terms_.find(Integer(1));
  return it == terms_.end() ? Rational(0) : it->second;
}

KElement operator+(const KElement& x, const KElement& y) {
  KElement r = x;
  for (const auto& [d, c] : y.terms_) r.add_term(d, c);
  return r;
}

KElement operator-(const KElement& x, const KElement& y) { return x + (-y); }

KElement KElement::operator-() const {
  KElement r;
  for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
  return r;
}

KElement operator*(const KElement& x, const KElement& y) {
  KElement r;
  for (const auto& [d1, c1] : x.terms_) {
    for (const auto& [d2, c2] : y.terms_) {
      // sqrt(d1) sqrt(d2) = g sqrt(d1 d2 / g^2) for squarefree d1, d2.
      Integer g;
      mpz_gcd(g.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
      const Integer d = (d1 / g) * (d2 / g);
      r.add_term(d, c1 * c2 * Rational(g));
    }
  }
  return r;
}

KElement KElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  // Multiply by sign-flip conjugates one prime at a time until the
  // denominator is rational: (u + v sqrt p)(u - v sqrt p) = u^2 - p v^2 has no
  // sqrt p left.
  KElement num(1);
  KElement den = *this;
  while (!den.is_rational()) {
    const Integer p = smallest_prime_factor(den.terms_.rbegin()->first);
    KElement conj;
    for (const auto& [d, c] : den.terms_) {
      const bool has_p = mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()) != 0;
      conj.add_term(d, has_p ? Rational(-c) : c);
    }
    num = num * conj;
    den = den * conj;
  }
  const Rational q = den.rational_part();
  return num * KElement(1 / q);
}

KElement operator/(const KElement& x, const KElement& y) { return x * y.inverse(); }

TowerReal KElement::to_tower() const {
  TowerReal acc;
  for (const auto& [d, c] : terms_) {
    if (d == 1) {
      acc += TowerReal(c);
    } else {
      acc += sqrt_adjoin(TowerReal(Rational(d))) * TowerReal(c);
    }
  }
  return acc;
}

std::optional<KElement> KElement::from_tower(const TowerReal& x) {
  std::vector<const TowerLevel*> chain;
  for (const TowerLevel* t = x.tower().get(); t; t = t->parent.get()) chain.push_back(t);
  std::vector<Rational> radicands(chain.size());
  for (const TowerLevel* t : chain) {
    for (std::size_t i = 1; i < t->radicand.size(); ++i) {
      if (sgn(t->radicand[i]) != 0) return std::nullopt;
    }
    radicands[t->depth - 1] = t->radicand[0];
  }
  KElement r;
  const auto coeffs = x.coeffs();
  for (std::size_t mask = 0; mask < coeffs.size(); ++mask) {
    if (sgn(coeffs[mask]) == 0) continue;
    Rational prod(1);
    for (std::size_t bit = 0; bit < radicands.size(); ++bit) {
      if ((mask >> bit) & 1U) prod *= radicands[bit];
    }
    // Radicands are positive rationals: sqrt(n/d) = sqrt(n d) / d.
    r = r + sqrt_of(prod.get_num() * prod.get_den(), coeffs[mask] / Rational(prod.get_den()));
  }
  return r;
}

std::string KElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    std::string body;
    if (d == 1) {
      body = equicut::to_string(mag);
    } else if (mag == 1) {
      body = "sqrt(" + d.get_str() + ")";
    } else {
      body = equicut::to_string(mag) + "*sqrt(" + d.get_str() + ")";
    }
    if (first) {
      if (negative) out += (d == 1 || mag != 1) ? "-" : "-1*";
      out += body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace equicut
