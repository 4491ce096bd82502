#ifndef VCPCERT_RATIONAL_HPP
#define VCPCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

namespace vcpcert {

// Exact scalar types. mpq_class keeps values in lowest terms with positive
// denominator after every operation; nothing in this library ever rounds.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// lcm of the denominators of a rational vector (1 for the empty vector).
BigInt denominator_lcm(std::span<const Rational> values);

// gcd of the absolute values of an integer vector (0 for the empty/zero vector).
BigInt content(std::span<const BigInt> values);

}  // namespace vcpcert

#endif
