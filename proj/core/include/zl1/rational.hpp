#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace zl1 {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// base^e for integer e (negative allowed, base != 0 then).
Rational qpow(const Rational& base, long e);

bool is_integer(const Rational& q);

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& q);

// Exact k-th root (k >= 1) of a nonnegative rational, if it exists in Q.
std::optional<Rational> exact_kth_root(const Rational& q, unsigned long k);

// base^(num/den) when the result is rational; nullopt otherwise.
// base must be > 0, or >= 0 with a positive exponent.
std::optional<Rational> exact_rational_pow(const Rational& base, const Rational& expo);

// Parse "a/b" or "a" or a decimal like "3.5" into an exact rational.
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& q);

}  // namespace zl1
