#include <zl1/central.hpp>

#include <zl1/errors.hpp>

namespace zl1 {

namespace {

void check_same_group(const CentralElement& a, const CentralElement& b) {
  if (a.group.get() != b.group.get()) {
    throw GroupMismatch("central elements live on different groups");
  }
}

}  // namespace

CentralElement CentralElement::zero(const GroupPtr& g) {
  return CentralElement{g, std::vector<Cyclotomic>(g->classes().count())};
}

CentralElement CentralElement::delta_e(const GroupPtr& g) {
  CentralElement f = zero(g);
  f.coeffs[0] = Cyclotomic(Rational(1));
  return f;
}

CentralElement CentralElement::class_indicator(const GroupPtr& g, int class_index) {
  CentralElement f = zero(g);
  f.coeffs.at(class_index) = Cyclotomic(Rational(1));
  return f;
}

CentralElement CentralElement::operator+(const CentralElement& o) const {
  check_same_group(*this, o);
  CentralElement out = *this;
  for (size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += o.coeffs[i];
  return out;
}

CentralElement CentralElement::operator-(const CentralElement& o) const {
  check_same_group(*this, o);
  CentralElement out = *this;
  for (size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] -= o.coeffs[i];
  return out;
}

CentralElement CentralElement::operator*(const Rational& s) const {
  CentralElement out = *this;
  for (auto& c : out.coeffs) c = c * s;
  return out;
}

bool CentralElement::operator==(const CentralElement& o) const {
  return group.get() == o.group.get() && coeffs == o.coeffs;
}

CentralElement convolve(const CentralElement& a, const CentralElement& b) {
  check_same_group(a, b);
  const auto& g = *a.group;
  const int r = g.classes().count();
  CentralElement out = CentralElement::zero(a.group);
  for (int i = 0; i < r; ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (int j = 0; j < r; ++j) {
      if (b.coeffs[j].is_zero()) continue;
      Cyclotomic prod = a.coeffs[i] * b.coeffs[j];
      for (int k = 0; k < r; ++k) {
        long long c = g.class_constant(i, j, k);
        if (c != 0) out.coeffs[k] += prod * Rational(static_cast<long>(c));
      }
    }
  }
  return out;
}

Cyclotomic gelfand_value(const Character& chi, const CentralElement& f) {
  if (chi.group.get() != f.group.get()) {
    throw GroupMismatch("gelfand_value: character and element on different groups");
  }
  const auto& cc = chi.group->classes();
  Cyclotomic acc;
  for (int i = 0; i < cc.count(); ++i) {
    if (f.coeffs[i].is_zero()) continue;
    acc += f.coeffs[i] * chi.values[cc.inverse_class[i]] * Rational(cc.size(i));
  }
  return acc * Rational(1, static_cast<unsigned long>(chi.degree()));
}

CentralElement minimal_central_idempotent(const Character& chi) {
  const auto& cc = chi.group->classes();
  CentralElement f = CentralElement::zero(chi.group);
  Rational scale(chi.degree(), chi.group->order());
  scale.canonicalize();
  for (int i = 0; i < cc.count(); ++i) f.coeffs[i] = chi.values[i] * scale;
  return f;
}

CentralElement kernel_identity_u(const Character& chi) {
  return CentralElement::delta_e(chi.group) - minimal_central_idempotent(chi);
}

ExactOrInterval l1_norm(const CentralElement& f, int precision_bits) {
  const auto& cc = f.group->classes();
  ExactOrInterval total = ExactOrInterval::from_exact(Rational(0));
  for (int i = 0; i < cc.count(); ++i) {
    ExactOrInterval a = abs_value(f.coeffs[i], precision_bits);
    total = total + a * ExactOrInterval::from_exact(Rational(cc.size(i)));
  }
  return total;
}

std::vector<int> product_class_map(const GroupPtr& product) {
  const auto& ps = product->product_structure();
  if (!ps) throw NotAProduct(product->name() + " has no product structure");
  const auto& cl = ps->left->classes();
  const auto& cr = ps->right->classes();
  const auto& cp = product->classes();
  if (cp.count() != cl.count() * cr.count()) {
    throw InternalInconsistency("product class count does not factor");
  }
  std::vector<int> map(static_cast<size_t>(cl.count()) * cr.count());
  std::vector<char> hit(cp.count(), 0);
  for (int i = 0; i < cl.count(); ++i) {
    for (int j = 0; j < cr.count(); ++j) {
      Elem pair = product->pair_index(cl.representatives[i], cr.representatives[j]);
      int k = cp.class_of[pair];
      if (hit[k]) throw InternalInconsistency("product classes do not separate factor pairs");
      hit[k] = 1;
      if (cp.size(k) != cl.size(i) * cr.size(j)) {
        throw InternalInconsistency("product class size does not factor");
      }
      map[static_cast<size_t>(i) * cr.count() + j] = k;
    }
  }
  return map;
}

CentralElement tensor_central(const GroupPtr& product, const CentralElement& a,
                              const CentralElement& b) {
  const auto& ps = product->product_structure();
  if (!ps || ps->left.get() != a.group.get() || ps->right.get() != b.group.get()) {
    throw NotAProduct("tensor_central: factors do not match the product");
  }
  auto map = product_class_map(product);
  const int rr = ps->right->classes().count();
  CentralElement out = CentralElement::zero(product);
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    for (size_t j = 0; j < b.coeffs.size(); ++j) {
      out.coeffs[map[i * rr + j]] = a.coeffs[i] * b.coeffs[j];
    }
  }
  return out;
}

CentralElement include_factor(const GroupPtr& product, const CentralElement& a,
                              Factor which) {
  const auto& ps = product->product_structure();
  if (!ps) throw NotAProduct(product->name() + " has no product structure");
  const GroupPtr& other = which == Factor::Left ? ps->right : ps->left;
  CentralElement e = CentralElement::delta_e(other);
  return which == Factor::Left ? tensor_central(product, a, e)
                               : tensor_central(product, e, a);
}

CentralElement project_factor(const CentralElement& f, Factor which) {
  const auto& ps = f.group->product_structure();
  if (!ps) throw NotAProduct(f.group->name() + " has no product structure");
  auto map = product_class_map(f.group);
  const auto& cl = ps->left->classes();
  const auto& cr = ps->right->classes();
  const GroupPtr& keep = which == Factor::Left ? ps->left : ps->right;
  CentralElement out = CentralElement::zero(keep);
  for (int i = 0; i < cl.count(); ++i) {
    for (int j = 0; j < cr.count(); ++j) {
      const Cyclotomic& c = f.coeffs[map[static_cast<size_t>(i) * cr.count() + j]];
      if (c.is_zero()) continue;
      // Augmentation of the dropped factor's indicator is its class size.
      if (which == Factor::Left) {
        out.coeffs[i] += c * Rational(cr.size(j));
      } else {
        out.coeffs[j] += c * Rational(cl.size(i));
      }
    }
  }
  return out;
}

bool tensor_center_check(const GroupPtr& g, const GroupPtr& h, int order_bound) {
  auto product = FiniteGroup::direct_product(g, h, order_bound);
  auto map = product_class_map(product);  // validates dimension and sizes
  (void)map;
  // l^1 multiplicativity on a deterministic family of rational tensors.
  const int rg = g->classes().count(), rh = h->classes().count();
  CentralElement a = CentralElement::zero(g), b = CentralElement::zero(h);
  for (int i = 0; i < rg; ++i) a.coeffs[i] = Cyclotomic(Rational(((i * 7) % 5) - 2));
  for (int j = 0; j < rh; ++j) b.coeffs[j] = Cyclotomic(Rational(((j * 5) % 7) - 3));
  ExactOrInterval na = l1_norm(a), nb = l1_norm(b);
  ExactOrInterval nt = l1_norm(tensor_central(product, a, b));
  if (!na.exact || !nb.exact || !nt.exact) return false;
  return *nt.exact == *na.exact * *nb.exact;
}

}  // namespace zl1
