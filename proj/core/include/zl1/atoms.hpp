#pragma once

#include <zl1/character.hpp>
#include <zl1/metrics.hpp>

#include <memory>
#include <string>
#include <vector>

namespace zl1 {

enum class AtomKind {
  AffNonlinear,
  AffLinear,
  Steinberg,
  DihedralTwoDim,
  AbelianLinear,
  HeisenbergChar,
  TensorPower,
};

// Closed-form character data for one (group, irreducible character) pair of
// a parametric family. Atoms answer every per-index question of the
// analysis (order, degree, mcr, lp terms, idempotency flags) without
// materializing the group, and can be materialized for cross-validation
// when the order is within the table bound.
class FamilyAtom {
 public:
  static FamilyAtom aff_nonlinear(const Integer& q);  // q >= 3 prime power
  static FamilyAtom aff_linear(const Integer& q, long which);  // 0 <= which < q-1
  static FamilyAtom steinberg(int n);                 // SL(2, 2^n), n >= 2
  static FamilyAtom stegmeir(long p);                 // odd prime p
  static FamilyAtom dihedral_two_dim(long m, long k);
  static FamilyAtom abelian_linear(std::vector<long> orders, std::vector<long> exps);
  static FamilyAtom heisenberg_char(long p, long which);
  static FamilyAtom tensor_power(const FamilyAtom& base, long k);

  AtomKind kind() const { return kind_; }
  const Integer& group_order() const { return group_order_; }
  const Integer& degree() const { return degree_; }
  // Exact by construction; dihedral atoms are restricted to the parameters
  // with rational mcr (m/gcd(k,m) even or 3).
  const Rational& mcr() const { return mcr_; }
  bool char_is_aic() const { return char_is_aic_; }
  bool group_is_abelian() const { return group_abelian_; }
  bool group_is_aic() const { return group_aic_; }

  // (degree^-1 ||chi||_s)^s; exact rational for even integer s on every
  // kind, and for any integer s when the character's absolute values are
  // rational (all kinds except dihedral parameters with surd values).
  ExactOrInterval lp_term(const Rational& s,
                          int precision_bits = kDefaultPrecisionBits) const;

  // Canonical atom expression, e.g. "aff(5).nonlinear".
  std::string syntax() const;

  // Explicit (group, character) pair reproducing all closed forms; throws
  // OrderBound when group_order exceeds the bound.
  std::pair<GroupPtr, Character> materialize(
      int order_bound = kCharacterTableOrderBound) const;

 private:
  FamilyAtom() = default;

  AtomKind kind_ = AtomKind::AbelianLinear;
  Integer q_ = 0;     // aff field size / heisenberg prime / sl2 field size
  int n_ = 0;         // steinberg exponent
  long which_ = 0;    // character selector
  long m_ = 0, k_ = 0;  // dihedral parameters
  std::vector<long> orders_, exps_;  // abelian data
  std::shared_ptr<FamilyAtom> base_;  // tensor power base
  long power_ = 1;

  Integer group_order_, degree_;
  Rational mcr_;
  bool char_is_aic_ = false, group_abelian_ = false, group_aic_ = false;
};

// Atom expression parser: aff(q).nonlinear | aff(q).linear[j] |
// sl2(2^n).steinberg | stegmeir(p) | heis(p).char[j] | tensor(atom, k) |
// abelian(n1 x n2 x ...).char[j1,j2,...] | dihedral(m).char[k]
FamilyAtom parse_atom(const std::string& expr);

// The affine group of F_q acting on q points, order q(q-1).
GroupPtr aff_group(long q);
// SL(2, q) as an explicit multiplication table, order q(q^2-1).
GroupPtr sl2_group(long q, int order_bound = kCharacterTableOrderBound);

}  // namespace zl1
