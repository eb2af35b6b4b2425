#include "equicut/rational.hpp"

#include "equicut/error.hpp"

namespace equicut {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::NegativeRadicand: return "negative radicand";
    case ErrorCode::DivisionByZero: return "division by zero";
    case ErrorCode::FactorizationBound: return "factorization bound exceeded";
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Degenerate: return "degenerate input";
    case ErrorCode::LengthMismatch: return "length mismatch";
    case ErrorCode::Io: return "i/o error";
  }
  return "unknown error";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw Error(ErrorCode::Parse, "bad rational: " + text);
  if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

int sign(const Rational& q) {
  const int s = sgn(q);
  return s > 0 ? 1 : (s < 0 ? -1 : 0);
}

SquarefreeSplit squarefree_split(const Integer& n_in, std::uint64_t bound) {
  if (n_in <= 0) throw Error(ErrorCode::InvalidArgument, "squarefree_split needs n > 0");
  Integer n = n_in;
  Integer root = 1;
  Integer kernel = 1;
  auto strip = [&](const Integer& p) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
      n /= p;
      ++e;
    }
    for (int k = 0; k + 1 < e; k += 2) root *= p;
    if (e % 2 == 1) kernel *= p;
  };
  strip(Integer(2));
  for (std::uint64_t p = 3; p <= bound; p += 2) {
    const Integer pz(static_cast<unsigned long>(p));
    if (pz * pz > n) break;
    strip(pz);
  }
  if (n > 1) {
    const Integer b(static_cast<unsigned long>(bound));
    if (n <= b * b) {
      kernel *= n;  // no factor <= sqrt(n), so n is prime
    } else if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
      // r has no factor <= bound; it may still be composite, but r^2 is
      // fully accounted for either way.
      root *= r;
    } else {
      throw Error(ErrorCode::FactorizationBound,
                  "cannot certify squarefree part of " + n_in.get_str() +
                      " with trial bound " + std::to_string(bound));
    }
  }
  return {root, kernel};
}

Integer smallest_prime_factor(const Integer& n, std::uint64_t bound) {
  if (n <= 1) throw Error(ErrorCode::InvalidArgument, "smallest_prime_factor needs n > 1");
  if (mpz_even_p(n.get_mpz_t()) != 0) return 2;
  for (std::uint64_t p = 3; p <= bound; p += 2) {
    const Integer pz(static_cast<unsigned long>(p));
    if (pz * pz > n) return n;
    if (mpz_divisible_p(n.get_mpz_t(), pz.get_mpz_t()) != 0) return pz;
  }
  const Integer b(static_cast<unsigned long>(bound));
  if (n <= b * b) return n;
  throw Error(ErrorCode::FactorizationBound, "cannot factor " + n.get_str());
}

bool is_squarefree(const Integer& n, std::uint64_t bound) {
  return squarefree_split(n, bound).root == 1;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
    return std::nullopt;
  Integer rn;
  Integer rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return make_rational(rn, rd);
}

}  // namespace equicut
