#pragma once

#include <zl1/errors.hpp>

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace zl1 {

using Elem = int;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct ConjugacyClasses {
  // classes[0] == {0}; the rest ordered by (size, smallest element).
  std::vector<std::vector<Elem>> classes;
  std::vector<int> class_of;        // element -> class index
  std::vector<Elem> representatives;  // smallest element of each class
  std::vector<int> inverse_class;   // class of rep^-1

  int count() const { return static_cast<int>(classes.size()); }
  long size(int k) const { return static_cast<long>(classes[k].size()); }
};

struct Subgroup {
  std::vector<Elem> elements;  // sorted, contains 0
  bool is_normal = false;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(Elem x) const;
};

// Default catalogue bounds.
inline constexpr int kStructureOrderBound = 20000;
inline constexpr int kCharacterTableOrderBound = 2000;
inline constexpr int kOracleOrderBound = 500;

// A finite group materialized as a full multiplication table over element
// indices 0..order-1, with index 0 the identity. Immutable after
// construction; structural invariants are cached lazily and are safe to read
// concurrently.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  // Validates the table (identity, inverses, associativity via Light's test
  // over a greedy generating set) and relabels the identity to index 0 if
  // needed. Throws NotAGroup with a witness, or OrderBound.
  static GroupPtr from_multiplication_table(const std::vector<std::vector<int>>& table,
                                            std::string name = "",
                                            int order_bound = kStructureOrderBound);

  // Enumerates the closure of the given permutations of {0..degree-1} and
  // materializes the multiplication table. Throws OrderBound if the closure
  // exceeds the bound.
  static GroupPtr from_permutation_generators(int degree,
                                              const std::vector<std::vector<int>>& generators,
                                              std::string name = "",
                                              int order_bound = kStructureOrderBound);

  static GroupPtr trivial();
  static GroupPtr cyclic(int n);
  static GroupPtr dihedral(int m);  // order 2m, m >= 1
  static GroupPtr symmetric(int n);  // n <= 8
  static GroupPtr alternating(int n);
  static GroupPtr quaternion8();
  static GroupPtr heisenberg(int p);  // upper unitriangular 3x3 over F_p
  static GroupPtr abelian(const std::vector<int>& cyclic_orders);

  static GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h,
                                 int order_bound = kStructureOrderBound);

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  Elem commutator(Elem a, Elem b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  Elem power(Elem a, long k) const;

  int element_order(Elem a) const;
  long exponent() const;
  bool is_abelian() const;

  const ConjugacyClasses& classes() const;
  const Subgroup& center() const;
  const Subgroup& derived_subgroup() const;
  // Length of the upper central series when it reaches the whole group;
  // nullopt for non-nilpotent groups. The trivial group has class 0.
  std::optional<int> nilpotency_class() const;

  // Class-sum structure constants a[i][j][k]: the number of (x, y) in
  // C_i x C_j with x*y equal to a fixed element of C_k. Shared by the
  // character-table computation and the central convolution.
  const std::vector<long long>& class_constants() const;
  long long class_constant(int i, int j, int k) const;

  Subgroup subgroup_closure(std::vector<Elem> generators) const;
  bool is_subgroup_normal(const std::vector<Elem>& elements) const;

  // Quotient by a normal subgroup: the quotient group and the projection
  // map element -> quotient element.
  std::pair<GroupPtr, std::vector<Elem>> quotient(const Subgroup& normal) const;

  struct ProductStructure {
    GroupPtr left, right;
    // pair (a, b) -> a * |right| + b
  };
  const std::optional<ProductStructure>& product_structure() const { return product_; }
  Elem pair_index(Elem a, Elem b) const;

 private:
  FiniteGroup(int n, std::vector<int> table, std::string name);
  static GroupPtr wrap(int n, std::vector<int> table, std::string name);

  int n_;
  std::vector<int> table_;  // row-major n x n
  std::vector<int> inv_;
  std::string name_;
  std::optional<ProductStructure> product_;

  mutable std::once_flag classes_once_, center_once_, derived_once_, const_once_;
  mutable ConjugacyClasses classes_;
  mutable Subgroup center_, derived_;
  mutable std::vector<long long> class_constants_;
};

}  // namespace zl1
