#pragma once

#include <zl1/interval.hpp>
#include <zl1/rational.hpp>

#include <map>
#include <string>

namespace zl1 {

// An exact element of a cyclotomic field Q(zeta_n), stored in a canonical
// basis so that equality is a coefficient comparison.
//
// Representation invariants:
//   * the conductor n is minimal for the element and never == 2 (mod 4);
//   * coefficients are indexed by exponents k with zeta_n^k in the basis
//     obtained by eliminating, for each prime p | n, one residue class of
//     the leading base-p digit of the exponent's p-part (the class 0 for odd
//     p, the class 1 for p = 2);
//   * no zero coefficients are stored; the zero element has conductor 1.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1) {}
  Cyclotomic(const Rational& q);  // NOLINT: implicit by design
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}
  Cyclotomic(const Integer& v) : Cyclotomic(Rational(v)) {}

  // zeta_n^k (k may be any integer; reduced mod n).
  static Cyclotomic root_of_unity(long n, long k);

  long conductor() const { return n_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return n_ == 1; }
  Rational rational_value() const;  // requires is_rational()
  bool is_real() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(const Rational& s) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  bool operator==(const Cyclotomic& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  Cyclotomic conjugate() const;
  // z * conjugate(z); always fixed by conjugation and nonnegative.
  Cyclotomic abs_squared() const;

  // Certified enclosure of the value of a self-conjugate element.
  RealInterval real_enclosure(int precision_bits) const;
  // Certified enclosure of |z|, width <= 2^-precision_bits; degenerate
  // (exact) when |z| is rational.
  RealInterval abs_enclosure(int precision_bits) const;

  // Deterministic total order (not the real order); used for reproducible
  // row ordering of character tables.
  static int cmp(const Cyclotomic& a, const Cyclotomic& b);

  // Display format "c0 + c1*z(n)^k + ..."; parse accepts the same shape.
  std::string str() const;
  static Cyclotomic parse(const std::string& s);

  const std::map<long, Rational>& coefficients() const { return c_; }

 private:
  void normalize();
  void strip_two_mod_four();
  void reduce_basis();
  bool shrink_conductor_once();

  long n_;
  std::map<long, Rational> c_;
};

inline Cyclotomic operator*(const Rational& s, const Cyclotomic& z) { return z * s; }

// Exact three-way comparison of two self-conjugate cyclotomics as real
// numbers: equality is decided algebraically, strict order by certified
// interval refinement (terminates for distinct algebraic numbers).
int compare_real(const Cyclotomic& a, const Cyclotomic& b);

}  // namespace zl1
