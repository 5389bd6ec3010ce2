#include <zl1/rational.hpp>

#include <zl1/errors.hpp>

#include <cstdlib>

namespace zl1 {

Rational qpow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (e < 0 && base == 0) throw Error("qpow: zero base with negative exponent");
  Rational b = e < 0 ? Rational(1) / base : base;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational r;
  mpz_pow_ui(r.get_num().get_mpz_t(), b.get_num().get_mpz_t(), n);
  mpz_pow_ui(r.get_den().get_mpz_t(), b.get_den().get_mpz_t(), n);
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& q) {
  return q.get_den() == 1 ||
         mpz_divisible_p(q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
}

std::optional<Rational> exact_kth_root(const Rational& q, unsigned long k) {
  if (q < 0) return std::nullopt;
  if (k == 1) return q;
  Integer num_root, den_root;
  // mpz_root returns nonzero iff the root is exact.
  if (!mpz_root(num_root.get_mpz_t(), q.get_num().get_mpz_t(), k)) return std::nullopt;
  if (!mpz_root(den_root.get_mpz_t(), q.get_den().get_mpz_t(), k)) return std::nullopt;
  return Rational(num_root, den_root);
}

std::optional<Rational> exact_sqrt(const Rational& q) { return exact_kth_root(q, 2); }

std::optional<Rational> exact_rational_pow(const Rational& base, const Rational& expo) {
  if (base == 0) {
    if (expo > 0) return Rational(0);
    if (expo == 0) return Rational(1);
    throw Error("exact_rational_pow: 0 with nonpositive exponent");
  }
  if (!expo.get_num().fits_slong_p() || !expo.get_den().fits_ulong_p()) return std::nullopt;
  long num = expo.get_num().get_si();
  unsigned long den = expo.get_den().get_ui();
  Rational t = qpow(base, num);
  if (den == 1) return t;
  return exact_kth_root(t, den);
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational");
  auto dot = s.find('.');
  try {
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      size_t frac_len = s.size() - dot - 1;
      if (digits.empty() || frac_len == 0) throw ParseError("bad decimal: " + s);
      Integer num(digits);
      Integer den = ipow(Integer(10), frac_len);
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    Rational r(s);
    r.canonicalize();
    if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational: " + s);
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace zl1
