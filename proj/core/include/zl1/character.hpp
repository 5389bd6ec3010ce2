#pragma once

#include <zl1/cyclotomic.hpp>
#include <zl1/group.hpp>

#include <string>
#include <vector>

namespace zl1 {

// A class function with cyclotomic values, one per conjugacy class of the
// underlying group (indexed consistently with FiniteGroup::classes()).
struct Character {
  GroupPtr group;
  std::vector<Cyclotomic> values;
  std::string label;

  long degree() const;  // value on the identity class; a positive integer
  const Cyclotomic& value_on_class(int k) const { return values[k]; }
  const Cyclotomic& value_at(Elem x) const {
    return values[group->classes().class_of[x]];
  }
};

struct CharacterTable {
  GroupPtr group;
  std::vector<Character> irreducibles;  // one per class, deterministic order

  int count() const { return static_cast<int>(irreducibles.size()); }
};

// Exact table of irreducible characters via the Burnside-Dixon method:
// split the common eigenvectors of the class matrices over a prime field
// F_p (p = 1 mod exponent, p > 2*ceil(sqrt(|G|))), then lift eigenvalue
// multiplicities to Q(zeta_exponent) by discrete Fourier inversion mod p.
// The result is validated (orthogonality, degree identities) before return.
CharacterTable character_table(const GroupPtr& g,
                               int order_bound = kCharacterTableOrderBound);

// The |G/G'| degree-1 characters, lifted from the dual of the abelianization.
std::vector<Character> linear_characters(const GroupPtr& g,
                                         int order_bound = kCharacterTableOrderBound);

// (1/|G|) sum_k |C_k| a(C_k) conj(b(C_k)).
Cyclotomic inner_product(const Character& a, const Character& b);

// The outer product character on an explicit direct product.
Character tensor_character(const GroupPtr& product, const Character& left,
                           const Character& right);

// Throws InternalInconsistency when any orthogonality relation or degree
// identity fails. character_table always calls this; exposed for tests.
void validate_table(const CharacterTable& table);

}  // namespace zl1
