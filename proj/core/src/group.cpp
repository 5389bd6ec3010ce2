#include <zl1/group.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace zl1 {

namespace {

std::string triple(Elem a, Elem b, Elem c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

bool Subgroup::contains(Elem x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

FiniteGroup::FiniteGroup(int n, std::vector<int> table, std::string name)
    : n_(n), table_(std::move(table)), name_(std::move(name)) {
  inv_.assign(n_, -1);
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = 0; b < n_; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0) throw NotAGroup("element " + std::to_string(a) + " has no inverse");
  }
}

GroupPtr FiniteGroup::wrap(int n, std::vector<int> table, std::string name) {
  return GroupPtr(new FiniteGroup(n, std::move(table), std::move(name)));
}

GroupPtr FiniteGroup::from_multiplication_table(const std::vector<std::vector<int>>& table,
                                                std::string name, int order_bound) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroup("empty table");
  if (n > order_bound) {
    throw OrderBound("order " + std::to_string(n) + " exceeds bound " +
                     std::to_string(order_bound));
  }
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) throw NotAGroup("table is not square");
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n) throw NotAGroup("entry out of range at " + triple(i, j, v));
      flat[static_cast<size_t>(i) * n + j] = v;
    }
  }
  // Locate a two-sided identity.
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n; ++j) {
      if (flat[static_cast<size_t>(i) * n + j] != j ||
          flat[static_cast<size_t>(j) * n + i] != j) {
        ok = false;
        break;
      }
    }
    if (ok) e = i;
  }
  if (e < 0) throw NotAGroup("no two-sided identity");
  if (e != 0) {
    // Relabel by the transposition (0 e).
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[e]);
    std::vector<int> relabeled(flat.size());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        relabeled[static_cast<size_t>(i) * n + j] =
            perm[flat[static_cast<size_t>(perm[i]) * n + perm[j]]];
      }
    }
    flat = std::move(relabeled);
  }
  // Inverses.
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n; ++b) {
      if (flat[static_cast<size_t>(a) * n + b] == 0 &&
          flat[static_cast<size_t>(b) * n + a] == 0) {
        found = true;
        break;
      }
    }
    if (!found) throw NotAGroup("element " + std::to_string(a) + " has no two-sided inverse");
  }
  // Associativity via Light's test: it is enough to check triples whose
  // middle element runs over a generating set.
  std::vector<char> reached(n, 0);
  std::vector<int> gens;
  reached[0] = 1;
  int reached_count = 1;
  while (reached_count < n) {
    int g = -1;
    for (int i = 0; i < n; ++i) {
      if (!reached[i]) {
        g = i;
        break;
      }
    }
    gens.push_back(g);
    // Extend the closure with the new generator.
    std::queue<int> work;
    for (int i = 0; i < n; ++i) {
      if (reached[i]) work.push(i);
    }
    while (!work.empty()) {
      int x = work.front();
      work.pop();
      for (int s : gens) {
        int y = flat[static_cast<size_t>(x) * n + s];
        if (!reached[y]) {
          reached[y] = 1;
          ++reached_count;
          work.push(y);
        }
        y = flat[static_cast<size_t>(s) * n + x];
        if (!reached[y]) {
          reached[y] = 1;
          ++reached_count;
          work.push(y);
        }
      }
    }
  }
  for (int s : gens) {
    for (int a = 0; a < n; ++a) {
      const int as = flat[static_cast<size_t>(a) * n + s];
      for (int b = 0; b < n; ++b) {
        const int sb = flat[static_cast<size_t>(s) * n + b];
        if (flat[static_cast<size_t>(as) * n + b] != flat[static_cast<size_t>(a) * n + sb]) {
          throw NotAGroup("associativity fails at " + triple(a, s, b));
        }
      }
    }
  }
  if (name.empty()) name = "G" + std::to_string(n);
  return wrap(n, std::move(flat), std::move(name));
}

GroupPtr FiniteGroup::from_permutation_generators(int degree,
                                                  const std::vector<std::vector<int>>& generators,
                                                  std::string name, int order_bound) {
  if (degree < 1) throw Error("degree must be positive");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree) throw Error("generator has wrong degree");
    std::vector<char> seen(degree, 0);
    for (int v : g) {
      if (v < 0 || v >= degree || seen[v]) throw Error("generator is not a permutation");
      seen[v] = 1;
    }
  }
  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  index.emplace(identity, 0);
  elems.push_back(identity);
  std::queue<int> work;
  work.push(0);
  while (!work.empty()) {
    int i = work.front();
    work.pop();
    for (const auto& g : generators) {
      std::vector<int> prod(degree);
      for (int x = 0; x < degree; ++x) prod[x] = elems[i][g[x]];
      auto [it, inserted] = index.emplace(prod, static_cast<int>(elems.size()));
      if (inserted) {
        if (static_cast<int>(elems.size()) >= order_bound) {
          throw OrderBound("closure exceeds bound " + std::to_string(order_bound));
        }
        elems.push_back(std::move(prod));
        work.push(it->second);
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> prod(degree);
      for (int x = 0; x < degree; ++x) prod[x] = elems[i][elems[j][x]];
      flat[static_cast<size_t>(i) * n + j] = index.at(prod);
    }
  }
  if (name.empty()) name = "perm" + std::to_string(n);
  return wrap(n, std::move(flat), std::move(name));
}

GroupPtr FiniteGroup::trivial() { return cyclic(1); }

GroupPtr FiniteGroup::cyclic(int n) {
  if (n < 1) throw Error("cyclic: order must be positive");
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = (i + j) % n;
  }
  return wrap(n, std::move(flat), "C" + std::to_string(n));
}

GroupPtr FiniteGroup::dihedral(int m) {
  if (m < 1) throw Error("dihedral: m must be positive");
  // 0..m-1 rotations r^i, m..2m-1 reflections r^i s.
  const int n = 2 * m;
  std::vector<int> flat(static_cast<size_t>(n) * n);
  auto set = [&](int a, int b, int c) { flat[static_cast<size_t>(a) * n + b] = c; };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      set(i, j, (i + j) % m);                    // r^i r^j
      set(i, m + j, m + (i + j) % m);            // r^i (r^j s)
      set(m + i, j, m + ((i - j) % m + m) % m);  // (r^i s) r^j = r^{i-j} s
      set(m + i, m + j, ((i - j) % m + m) % m);  // (r^i s)(r^j s) = r^{i-j}
    }
  }
  return wrap(n, std::move(flat), "D" + std::to_string(m));
}

GroupPtr FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 8) throw Error("symmetric: supported degrees are 1..8");
  if (n == 1) return trivial();
  std::vector<std::vector<int>> gens;
  std::vector<int> cycle(n), swap01(n);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  gens.push_back(cycle);
  gens.push_back(swap01);
  return from_permutation_generators(n, gens, "S" + std::to_string(n));
}

GroupPtr FiniteGroup::alternating(int n) {
  if (n < 3 || n > 8) throw Error("alternating: supported degrees are 3..8");
  std::vector<std::vector<int>> gens;
  std::vector<int> c3(n);
  std::iota(c3.begin(), c3.end(), 0);
  c3[0] = 1;
  c3[1] = 2;
  c3[2] = 0;
  gens.push_back(c3);
  if (n > 3) {
    std::vector<int> g(n);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) g[i] = (i + 1) % n;  // n-cycle (even permutation)
    } else {
      g[0] = 0;
      for (int i = 1; i < n; ++i) g[i] = i % (n - 1) + 1;  // (n-1)-cycle fixing 0
    }
    gens.push_back(g);
  }
  return from_permutation_generators(n, gens, "A" + std::to_string(n));
}

GroupPtr FiniteGroup::quaternion8() {
  // i -> (0 1 2 3)(4 5 6 7), j -> (0 4 2 6)(1 7 3 5) on 8 points.
  std::vector<int> i_perm = {1, 2, 3, 0, 5, 6, 7, 4};
  std::vector<int> j_perm = {4, 7, 6, 5, 2, 1, 0, 3};
  return from_permutation_generators(8, {i_perm, j_perm}, "Q8");
}

GroupPtr FiniteGroup::heisenberg(int p) {
  if (p < 2) throw Error("heisenberg: p must be >= 2");
  const int n = p * p * p;
  if (n > kStructureOrderBound) throw OrderBound("heisenberg group too large");
  auto id = [&](int a, int b, int c) { return (a * p + b) * p + c; };
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      for (int c = 0; c < p; ++c) {
        for (int a2 = 0; a2 < p; ++a2) {
          for (int b2 = 0; b2 < p; ++b2) {
            for (int c2 = 0; c2 < p; ++c2) {
              int x = id(a, b, c), y = id(a2, b2, c2);
              // (a,b,c)*(a',b',c') = (a+a', b+b', c+c'+a*b')
              int z = id((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
              flat[static_cast<size_t>(x) * n + y] = z;
            }
          }
        }
      }
    }
  }
  return wrap(n, std::move(flat), "Heis" + std::to_string(p));
}

GroupPtr FiniteGroup::abelian(const std::vector<int>& cyclic_orders) {
  GroupPtr g = trivial();
  std::string name;
  for (int m : cyclic_orders) {
    g = direct_product(g, cyclic(m));
    if (!name.empty()) name += "x";
    name += "C" + std::to_string(m);
  }
  if (name.empty()) name = "C1";
  // Rebuild without the nested product bookkeeping, under a clean name.
  const int n = g->order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[i][j] = g->mul(i, j);
  }
  return from_multiplication_table(table, name);
}

GroupPtr FiniteGroup::direct_product(const GroupPtr& g, const GroupPtr& h, int order_bound) {
  const long long n = static_cast<long long>(g->order()) * h->order();
  if (n > order_bound) {
    throw OrderBound("product order " + std::to_string(n) + " exceeds bound " +
                     std::to_string(order_bound));
  }
  const int ng = g->order(), nh = h->order(), nn = static_cast<int>(n);
  std::vector<int> flat(static_cast<size_t>(nn) * nn);
  for (int a = 0; a < ng; ++a) {
    for (int b = 0; b < nh; ++b) {
      const int x = a * nh + b;
      for (int c = 0; c < ng; ++c) {
        for (int d = 0; d < nh; ++d) {
          flat[static_cast<size_t>(x) * nn + (c * nh + d)] = g->mul(a, c) * nh + h->mul(b, d);
        }
      }
    }
  }
  auto out = wrap(nn, std::move(flat), g->name() + " x " + h->name());
  const_cast<FiniteGroup*>(out.get())->product_ = ProductStructure{g, h};
  return out;
}

Elem FiniteGroup::pair_index(Elem a, Elem b) const {
  if (!product_) throw NotAProduct(name_ + " has no product structure");
  return a * product_->right->order() + b;
}

Elem FiniteGroup::power(Elem a, long k) const {
  if (k < 0) return power(inv(a), -k);
  Elem r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(Elem a) const {
  int k = 1;
  Elem x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

long FiniteGroup::exponent() const {
  long e = 1;
  for (Elem a = 0; a < n_; ++a) e = std::lcm(e, static_cast<long>(element_order(a)));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = a + 1; b < n_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

const ConjugacyClasses& FiniteGroup::classes() const {
  std::call_once(classes_once_, [this] {
    ConjugacyClasses cc;
    cc.class_of.assign(n_, -1);
    std::vector<std::vector<Elem>> raw;
    for (Elem x = 0; x < n_; ++x) {
      if (cc.class_of[x] >= 0) continue;
      std::vector<Elem> cls;
      std::vector<char> in(n_, 0);
      for (Elem g = 0; g < n_; ++g) {
        Elem y = conj(g, x);
        if (!in[y]) {
          in[y] = 1;
          cls.push_back(y);
        }
      }
      std::sort(cls.begin(), cls.end());
      int idx = static_cast<int>(raw.size());
      for (Elem y : cls) cc.class_of[y] = idx;
      raw.push_back(std::move(cls));
    }
    // Deterministic order: identity class first, then by (size, min element).
    std::vector<int> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const bool ia = raw[a][0] == 0, ib = raw[b][0] == 0;
      if (ia != ib) return ia;
      if (raw[a].size() != raw[b].size()) return raw[a].size() < raw[b].size();
      return raw[a][0] < raw[b][0];
    });
    for (int new_idx = 0; new_idx < static_cast<int>(order.size()); ++new_idx) {
      cc.classes.push_back(raw[order[new_idx]]);
      cc.representatives.push_back(raw[order[new_idx]][0]);
      for (Elem y : cc.classes.back()) cc.class_of[y] = new_idx;
    }
    cc.inverse_class.resize(cc.classes.size());
    for (int k = 0; k < cc.count(); ++k) {
      cc.inverse_class[k] = cc.class_of[inv(cc.representatives[k])];
    }
    classes_ = std::move(cc);
  });
  return classes_;
}

const Subgroup& FiniteGroup::center() const {
  std::call_once(center_once_, [this] {
    Subgroup z;
    for (Elem a = 0; a < n_; ++a) {
      bool central = true;
      for (Elem b = 0; b < n_; ++b) {
        if (mul(a, b) != mul(b, a)) {
          central = false;
          break;
        }
      }
      if (central) z.elements.push_back(a);
    }
    z.is_normal = true;
    center_ = std::move(z);
  });
  return center_;
}

Subgroup FiniteGroup::subgroup_closure(std::vector<Elem> generators) const {
  std::vector<char> in(n_, 0);
  in[0] = 1;
  std::vector<Elem> members = {0};
  std::queue<Elem> work;
  work.push(0);
  for (Elem g : generators) {
    if (!in[g]) {
      in[g] = 1;
      members.push_back(g);
      work.push(g);
    }
  }
  while (!work.empty()) {
    Elem x = work.front();
    work.pop();
    for (size_t i = 0; i < members.size(); ++i) {
      Elem y = members[i];
      for (Elem z : {mul(x, y), mul(y, x)}) {
        if (!in[z]) {
          in[z] = 1;
          members.push_back(z);
          work.push(z);
        }
      }
    }
  }
  Subgroup s;
  s.elements = std::move(members);
  std::sort(s.elements.begin(), s.elements.end());
  s.is_normal = is_subgroup_normal(s.elements);
  return s;
}

bool FiniteGroup::is_subgroup_normal(const std::vector<Elem>& elements) const {
  std::vector<char> in(n_, 0);
  for (Elem x : elements) in[x] = 1;
  for (Elem x : elements) {
    for (Elem g = 0; g < n_; ++g) {
      if (!in[conj(g, x)]) return false;
    }
  }
  return true;
}

const Subgroup& FiniteGroup::derived_subgroup() const {
  std::call_once(derived_once_, [this] {
    std::vector<char> seen(n_, 0);
    std::vector<Elem> comms;
    for (Elem a = 0; a < n_; ++a) {
      for (Elem b = 0; b < n_; ++b) {
        Elem c = commutator(a, b);
        if (!seen[c]) {
          seen[c] = 1;
          comms.push_back(c);
        }
      }
    }
    derived_ = subgroup_closure(std::move(comms));
  });
  return derived_;
}

std::optional<int> FiniteGroup::nilpotency_class() const {
  // Upper central series via Z_{i+1} = {x : [x,g] in Z_i for all g}.
  std::vector<char> zi(n_, 0);
  zi[0] = 1;
  int members = 1;
  int step = 0;
  while (members < n_) {
    std::vector<char> znext(n_, 0);
    int next_members = 0;
    for (Elem x = 0; x < n_; ++x) {
      bool in = true;
      for (Elem g = 0; g < n_; ++g) {
        if (!zi[commutator(x, g)]) {
          in = false;
          break;
        }
      }
      if (in) {
        znext[x] = 1;
        ++next_members;
      }
    }
    if (next_members == members) return std::nullopt;  // series stalled
    zi = std::move(znext);
    members = next_members;
    ++step;
  }
  return step;
}

const std::vector<long long>& FiniteGroup::class_constants() const {
  std::call_once(const_once_, [this] {
    const auto& cc = classes();
    const int r = cc.count();
    std::vector<long long> a(static_cast<size_t>(r) * r * r, 0);
    // Count products landing in each class, then divide by the class size:
    // products of two classes hit every element of a target class equally
    // often.
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        std::vector<long long> cnt(r, 0);
        for (Elem x : cc.classes[i]) {
          for (Elem y : cc.classes[j]) ++cnt[cc.class_of[mul(x, y)]];
        }
        for (int k = 0; k < r; ++k) {
          if (cnt[k] % cc.size(k) != 0) {
            throw InternalInconsistency("class constants are not integral");
          }
          a[(static_cast<size_t>(i) * r + j) * r + k] = cnt[k] / cc.size(k);
        }
      }
    }
    class_constants_ = std::move(a);
  });
  return class_constants_;
}

long long FiniteGroup::class_constant(int i, int j, int k) const {
  const int r = classes().count();
  return class_constants()[(static_cast<size_t>(i) * r + j) * r + k];
}

std::pair<GroupPtr, std::vector<Elem>> FiniteGroup::quotient(const Subgroup& normal) const {
  if (!normal.is_normal) throw Error("quotient: subgroup is not normal");
  // Coset of x, labeled by its least member.
  std::vector<Elem> coset_rep(n_, -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n_; ++x) {
    if (coset_rep[x] >= 0) continue;
    Elem least = x;
    std::vector<Elem> coset;
    for (Elem h : normal.elements) coset.push_back(mul(x, h));
    for (Elem y : coset) least = std::min(least, y);
    for (Elem y : coset) coset_rep[y] = least;
    reps.push_back(least);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<int> index_of(n_, -1);
  for (int i = 0; i < static_cast<int>(reps.size()); ++i) index_of[reps[i]] = i;
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      table[i][j] = index_of[coset_rep[mul(reps[i], reps[j])]];
    }
  }
  auto qg = from_multiplication_table(table, name_ + "/N");
  std::vector<Elem> proj(n_);
  for (Elem x = 0; x < n_; ++x) proj[x] = index_of[coset_rep[x]];
  return {qg, proj};
}

}  // namespace zl1
