#include <zl1/character.hpp>

#include <zl1/errors.hpp>

namespace zl1 {

long Character::degree() const {
  const Cyclotomic& v = values.at(0);
  if (!v.is_rational() || !is_integer(v.rational_value())) {
    throw InternalInconsistency("character degree is not a rational integer");
  }
  return static_cast<long>(v.rational_value().get_num().get_si());
}

Cyclotomic inner_product(const Character& a, const Character& b) {
  if (a.group.get() != b.group.get()) throw GroupMismatch("inner_product: different groups");
  const auto& cc = a.group->classes();
  Cyclotomic acc;
  for (int k = 0; k < cc.count(); ++k) {
    acc += a.values[k] * b.values[k].conjugate() * Rational(cc.size(k));
  }
  return acc * Rational(1, a.group->order());
}

Character tensor_character(const GroupPtr& product, const Character& left,
                           const Character& right) {
  const auto& ps = product->product_structure();
  if (!ps) throw NotAProduct(product->name() + " has no product structure");
  if (ps->left.get() != left.group.get() || ps->right.get() != right.group.get()) {
    throw GroupMismatch("tensor_character: factor characters do not match the product");
  }
  const auto& cc = product->classes();
  Character out;
  out.group = product;
  out.label = left.label + "(x)" + right.label;
  out.values.resize(cc.count());
  const int nh = ps->right->order();
  for (int k = 0; k < cc.count(); ++k) {
    Elem rep = cc.representatives[k];
    out.values[k] = left.value_at(rep / nh) * right.value_at(rep % nh);
  }
  return out;
}

void validate_table(const CharacterTable& table) {
  const auto& g = *table.group;
  const auto& cc = g.classes();
  const int r = cc.count();
  if (table.count() != r) {
    throw InternalInconsistency("character count differs from class count");
  }
  // Row orthogonality and degree sanity.
  Integer degree_square_sum = 0;
  for (int i = 0; i < r; ++i) {
    const long d = table.irreducibles[i].degree();
    if (d <= 0) throw InternalInconsistency("nonpositive degree");
    if (g.order() % d != 0) {
      throw InternalInconsistency("degree " + std::to_string(d) + " does not divide the order");
    }
    degree_square_sum += Integer(d) * Integer(d);
    for (int j = i; j < r; ++j) {
      Cyclotomic ip = inner_product(table.irreducibles[i], table.irreducibles[j]);
      if (ip != Cyclotomic(i == j ? 1 : 0)) {
        throw InternalInconsistency("row orthogonality fails at (" + std::to_string(i) +
                                    ", " + std::to_string(j) + ")");
      }
    }
  }
  if (degree_square_sum != g.order()) {
    throw InternalInconsistency("sum of squared degrees differs from the order");
  }
  // Column orthogonality: sum_chi chi(C_k) conj(chi(C_l)) = |G|/|C_k| [k=l].
  for (int k = 0; k < r; ++k) {
    for (int l = k; l < r; ++l) {
      Cyclotomic acc;
      for (int i = 0; i < r; ++i) {
        acc += table.irreducibles[i].values[k] * table.irreducibles[i].values[l].conjugate();
      }
      Rational centralizer(g.order(), cc.size(k));
      centralizer.canonicalize();
      Cyclotomic expect(k == l ? centralizer : Rational(0));
      if (acc != expect) {
        throw InternalInconsistency("column orthogonality fails at (" + std::to_string(k) +
                                    ", " + std::to_string(l) + ")");
      }
    }
  }
}

std::vector<Character> linear_characters(const GroupPtr& g, int order_bound) {
  const auto& derived = g->derived_subgroup();
  auto [ab, proj] = g->quotient(derived);
  CharacterTable t = character_table(ab, order_bound);
  const auto& cc = g->classes();
  std::vector<Character> out;
  for (const auto& chi : t.irreducibles) {
    if (chi.degree() != 1) {
      throw InternalInconsistency("abelianization produced a nonlinear character");
    }
    Character lifted;
    lifted.group = g;
    lifted.label = chi.label;
    lifted.values.resize(cc.count());
    for (int k = 0; k < cc.count(); ++k) {
      lifted.values[k] = chi.value_at(proj[cc.representatives[k]]);
    }
    out.push_back(std::move(lifted));
  }
  return out;
}

}  // namespace zl1
