#include <zl1/catalogue.hpp>

#include <zl1/atoms.hpp>
#include <zl1/central.hpp>
#include <zl1/errors.hpp>
#include <zl1/gf.hpp>
#include <zl1/group_io.hpp>
#include <zl1/metrics.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace zl1 {

namespace {

// All abelian groups of order n, as multisets of prime-power cyclic factors.
void abelian_groups_of_order(int n, std::vector<std::vector<int>>& out) {
  std::map<int, int> factor;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    while (m % p == 0) factor[p]++, m /= p;
  }
  if (m > 1) factor[m]++;
  std::vector<std::vector<std::vector<int>>> per_prime;
  for (auto [p, e] : factor) {
    // partitions of e, as exponent lists
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
      if (remaining == 0) {
        parts.push_back(cur);
        return;
      }
      for (int k = std::min(remaining, maxpart); k >= 1; --k) {
        cur.push_back(k);
        self(self, remaining - k, k);
        cur.pop_back();
      }
    };
    rec(rec, e, e);
    std::vector<std::vector<int>> factors;
    for (const auto& part : parts) {
      std::vector<int> fs;
      for (int k : part) {
        int pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        fs.push_back(pk);
      }
      factors.push_back(fs);
    }
    per_prime.push_back(std::move(factors));
  }
  std::vector<int> cur;
  auto combine = [&](auto&& self, size_t i) -> void {
    if (i == per_prime.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& choice : per_prime[i]) {
      size_t before = cur.size();
      cur.insert(cur.end(), choice.begin(), choice.end());
      self(self, i + 1);
      cur.resize(before);
    }
  };
  combine(combine, 0);
}

}  // namespace

std::vector<CatalogueEntry> builtin_catalogue(int small_bound, int parametric_bound) {
  std::vector<CatalogueEntry> out;
  auto add = [&](const GroupPtr& g) { out.push_back({g->name(), g}); };

  for (int n = 1; n <= small_bound; ++n) {
    std::vector<std::vector<int>> shapes;
    abelian_groups_of_order(n, shapes);
    for (auto& shape : shapes) {
      std::sort(shape.begin(), shape.end());
      add(FiniteGroup::abelian(shape));
    }
  }
  for (int m = 3; 2 * m <= small_bound; ++m) add(FiniteGroup::dihedral(m));
  add(FiniteGroup::symmetric(3));
  add(FiniteGroup::symmetric(4));
  add(FiniteGroup::alternating(4));
  add(FiniteGroup::alternating(5));
  add(FiniteGroup::quaternion8());
  add(FiniteGroup::heisenberg(2));
  add(FiniteGroup::heisenberg(3));
  for (long q : {3, 4, 5, 7, 8, 9}) add(aff_group(q));

  // Parametric materializations above the small bound.
  for (long q : {11, 13, 16, 17, 19}) {
    if (q * (q - 1) <= parametric_bound) add(aff_group(q));
  }
  for (long q : {3, 4, 5, 7}) {
    if (q * (q * q - 1) <= parametric_bound) add(sl2_group(q, parametric_bound));
  }
  if (125 <= parametric_bound) add(FiniteGroup::heisenberg(5));
  if (343 <= parametric_bound) add(FiniteGroup::heisenberg(7));

  // A few direct products exercising the tensor structure.
  auto d4 = FiniteGroup::dihedral(4);
  auto s3 = FiniteGroup::symmetric(3);
  auto q8 = FiniteGroup::quaternion8();
  auto aff3 = aff_group(3);
  add(FiniteGroup::direct_product(d4, s3));
  add(FiniteGroup::direct_product(d4, d4));
  add(FiniteGroup::direct_product(aff3, aff3));
  add(FiniteGroup::direct_product(q8, FiniteGroup::cyclic(2)));
  add(FiniteGroup::direct_product(d4, q8));
  return out;
}

GroupPtr parse_group_expr(const std::string& expr) {
  // Products split on " x " at the top level.
  size_t pos = expr.find(" x ");
  if (pos != std::string::npos) {
    GroupPtr left = parse_group_expr(expr.substr(0, pos));
    GroupPtr right = parse_group_expr(expr.substr(pos + 3));
    return FiniteGroup::direct_product(left, right);
  }
  std::string s = expr;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw ParseError("empty group expression");
  auto starts = [&](const std::string& w) { return s.rfind(w, 0) == 0; };
  auto arg = [&](size_t prefix_len) -> std::string {
    if (s[prefix_len] != '(' || s.back() != ')') {
      throw ParseError("expected (...) in group expression: " + s);
    }
    return s.substr(prefix_len + 1, s.size() - prefix_len - 2);
  };
  if (starts("file:")) return read_multiplication_table_file(s.substr(5));
  if (starts("perms:")) return read_permutation_generators_file(s.substr(6));
  if (starts("aff(")) return aff_group(std::stol(arg(3)));
  if (starts("sl2(")) return sl2_group(std::stol(arg(3)));
  if (starts("heis(")) return FiniteGroup::heisenberg(std::stoi(arg(4)));
  if (starts("abelian(")) {
    std::string inner = arg(7);
    std::vector<int> orders;
    std::istringstream is(inner);
    std::string tok;
    while (std::getline(is, tok, 'x')) orders.push_back(std::stoi(tok));
    return FiniteGroup::abelian(orders);
  }
  if (s == "q8") return FiniteGroup::quaternion8();
  if (s.size() >= 2 && (s[0] == 'c' || s[0] == 'd' || s[0] == 's' || s[0] == 'a') &&
      std::isdigit(static_cast<unsigned char>(s[1]))) {
    int n = std::stoi(s.substr(1));
    switch (s[0]) {
      case 'c':
        return FiniteGroup::cyclic(n);
      case 'd':
        return FiniteGroup::dihedral(n);
      case 's':
        return FiniteGroup::symmetric(n);
      case 'a':
        return FiniteGroup::alternating(n);
    }
  }
  throw ParseError("unrecognized group expression: " + expr);
}

namespace {

void push(std::vector<CheckResult>& out, const std::string& check, bool pass,
          std::string detail = "") {
  out.push_back({check, pass, std::move(detail)});
}

}  // namespace

std::vector<CheckResult> sweep_group(const GroupPtr& g, int precision_bits) {
  std::vector<CheckResult> out;
  const auto& cc = g->classes();

  // Class equation and the singleton-class description of the centre.
  long class_sum = 0;
  for (int k = 0; k < cc.count(); ++k) class_sum += cc.size(k);
  push(out, "class-equation", class_sum == g->order());
  {
    std::vector<Elem> singletons;
    for (int k = 0; k < cc.count(); ++k) {
      if (cc.size(k) == 1) singletons.push_back(cc.representatives[k]);
    }
    std::sort(singletons.begin(), singletons.end());
    push(out, "centre-is-singleton-classes", singletons == g->center().elements);
  }

  CharacterTable table;
  try {
    table = character_table(g);
    push(out, "orthogonality", true);
  } catch (const InternalInconsistency& e) {
    push(out, "orthogonality", false, e.what());
    return out;
  }

  push(out, "linear-count",
       static_cast<long>(linear_characters(g).size()) ==
           g->order() / g->derived_subgroup().order());

  bool l2_ok = true, lower_ok = true, rider_ok = true, mcr_pos_ok = true, centre_ok = true;
  std::string lower_detail, rider_detail;
  bool aic_group = true;
  for (const auto& chi : table.irreducibles) {
    ExactOrInterval l2 = lp_norm_pth_power(chi, Rational(2), precision_bits);
    l2_ok &= l2.exact && *l2.exact == g->order();

    const bool aic = is_absolutely_idempotent(chi);
    aic_group &= aic;
    const Rational target(g->order());
    const Rational d(chi.degree());
    if (aic) {
      ExactOrInterval l1 = lp_norm_pth_power(chi, Rational(1), precision_bits);
      if (!l1.exact || *l1.exact * d != target) {
        lower_ok = false;
        lower_detail = chi.label + ": absolutely idempotent but d||chi||_1 != |G|";
      }
    } else {
      bool separated = false;
      for (int prec = precision_bits; prec <= kPrecisionCapBits; prec *= 2) {
        ExactOrInterval l1 = lp_norm_pth_power(chi, Rational(1), prec);
        if (l1.exact ? *l1.exact * d > target : l1.bounds.lo() * d > target) {
          separated = true;
          break;
        }
      }
      if (!separated) {
        lower_ok = false;
        lower_detail = chi.label + ": could not certify d||chi||_1 > |G|";
      }
    }

    try {
      if (rider_classification(chi, precision_bits) == RiderClass::GapViolation) {
        rider_ok = false;
        rider_detail = chi.label + ": normalized idempotent norm inside (1, 301/300)";
      }
    } catch (const UndeterminedError& e) {
      rider_ok = false;
      rider_detail = e.what();
    }

    if (g->order() > 1) {
      ExactOrInterval m = mcr(chi, precision_bits);
      if (m.exact && *m.exact == 0) mcr_pos_ok = false;
    }

    Subgroup zc = centre_of_character(chi);
    centre_ok &= zc.is_normal;
    for (Elem z : g->center().elements) centre_ok &= zc.contains(z);
  }
  push(out, "l2-norm-is-order", l2_ok);
  push(out, "l1-lower-bound", lower_ok, lower_detail);
  push(out, "rider-gap", rider_ok, rider_detail);
  push(out, "mcr-positive", mcr_pos_ok);
  push(out, "character-centre-normal", centre_ok);

  // AIC vs nilpotency (both implications checked on the catalogue).
  auto nilp = g->nilpotency_class();
  bool class2_ok = true, nilpotent_ok = true;
  if (nilp && *nilp <= 2 && !aic_group) class2_ok = false;
  if (aic_group && !nilp) nilpotent_ok = false;
  push(out, "class2-implies-aic", class2_ok);
  push(out, "aic-implies-nilpotent", nilpotent_ok);

  // Every nontrivial normal subgroup meets every character support away
  // from the identity; the normal closures of single classes suffice.
  bool support_ok = true;
  for (int k = 1; k < cc.count() && support_ok; ++k) {
    Subgroup n = g->subgroup_closure(cc.classes[k]);
    for (const auto& chi : table.irreducibles) {
      bool meets = false;
      for (Elem x : n.elements) {
        if (x != 0 && !chi.value_at(x).is_zero()) {
          meets = true;
          break;
        }
      }
      if (!meets) {
        support_ok = false;
        break;
      }
    }
  }
  push(out, "normal-meets-support", support_ok);

  // Intersection of the centres of all absolutely idempotent characters.
  if (g->order() > 1) {
    std::vector<char> common(g->order(), 1);
    for (const auto& chi : table.irreducibles) {
      if (!is_absolutely_idempotent(chi)) continue;
      Subgroup zc = centre_of_character(chi);
      std::vector<char> in(g->order(), 0);
      for (Elem x : zc.elements) in[x] = 1;
      for (Elem x = 0; x < g->order(); ++x) common[x] &= in[x];
    }
    long count = std::count(common.begin(), common.end(), char(1));
    push(out, "aic-centres-intersect", count >= 2);
  }

  return out;
}

std::vector<ProblemHit> scan_problem(const Rational& delta,
                                     const std::vector<CatalogueEntry>& catalogue) {
  if (delta < 0 || delta >= Rational(1, 2)) {
    throw Error("scan_problem: delta must lie in [0, 1/2)");
  }
  std::vector<ProblemHit> hits;
  for (const auto& entry : catalogue) {
    CharacterTable t = character_table(entry.group);
    for (const auto& chi : t.irreducibles) {
      Rational margin =
          (Rational(1) + delta) * Rational(chi.degree()) * Rational(chi.degree()) -
          Rational(entry.group->order());
      if (margin >= 0) {
        hits.push_back({entry.name, chi.label, chi.degree(), Integer(entry.group->order()),
                        margin});
      }
    }
  }
  return hits;
}

}  // namespace zl1
