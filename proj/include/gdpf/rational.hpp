#pragma once

// Exact rationals backed by GMP. mpq_class keeps values canonical
// (coprime, positive denominator) after every arithmetic operation.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>
#include <string>
#include <string_view>

namespace gdpf {

using BigInt = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

std::string to_string(const Rational& q);

/// Parses "7", "-3/4". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Rough size used to pick cheap pivots in elimination.
inline std::size_t pivot_cost(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

/// Exact square root when q is a square in Q.
bool rational_sqrt(const Rational& q, Rational& root);

/// Positive divisors of |n| by trial division; nullopt for n = 0 or when n
/// has a prime factor too large to find that way.
std::optional<std::vector<BigInt>> positive_divisors(BigInt n);

}  // namespace gdpf
