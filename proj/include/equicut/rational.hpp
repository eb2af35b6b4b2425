#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace equicut {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; values built from raw parts go through make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr std::uint64_t kDefaultTrialBound = 1'000'000;

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
int sign(const Rational& q);

// n = root^2 * kernel with kernel squarefree. Trial division runs up to
// `bound`; a leftover cofactor larger than bound^2 that is not itself a
// perfect square cannot be certified squarefree and raises
// ErrorCode::FactorizationBound.
struct SquarefreeSplit {
  Integer root;
  Integer kernel;
};
SquarefreeSplit squarefree_split(const Integer& n, std::uint64_t bound = kDefaultTrialBound);

// Smallest prime factor of n > 1, by trial division up to `bound`.
Integer smallest_prime_factor(const Integer& n, std::uint64_t bound = kDefaultTrialBound);

bool is_squarefree(const Integer& n, std::uint64_t bound = kDefaultTrialBound);

// Nonnegative rational square root if q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace equicut
