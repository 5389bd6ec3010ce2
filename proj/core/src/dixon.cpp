#include <zl1/character.hpp>
#include <zl1/errors.hpp>
#include <zl1/gf.hpp>

#include <algorithm>
#include <cmath>
#include <random>

namespace zl1 {

namespace {

using u64 = unsigned long long;

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b % p) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

long dixon_prime(long exponent, long order) {
  const long low = 2 * static_cast<long>(std::ceil(std::sqrt(static_cast<double>(order))));
  for (long p = exponent + 1;; p += exponent) {
    if (p > low && is_prime(p)) return p;
    if (p > (1L << 40)) throw Error("dixon_prime: search runaway");
  }
}

u64 primitive_root(const Fp& F) {
  const u64 p = F.p;
  std::vector<u64> prime_factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) prime_factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : prime_factors) {
      if (F.pow(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error("no primitive root found");
}

using Vec = std::vector<u64>;

// Basis vectors kept in reduced echelon form: distinct pivot columns,
// pivot entries 1, other basis vectors zero at each pivot.
struct Subspace {
  std::vector<Vec> basis;
  std::vector<int> pivots;
};

void rref_insert(const Fp& F, Subspace& s, Vec v) {
  const int r = static_cast<int>(v.size());
  for (size_t i = 0; i < s.basis.size(); ++i) {
    if (v[s.pivots[i]] != 0) {
      u64 c = v[s.pivots[i]];
      for (int j = 0; j < r; ++j) v[j] = F.sub(v[j], F.mul(c, s.basis[i][j]));
    }
  }
  int piv = -1;
  for (int j = 0; j < r; ++j) {
    if (v[j] != 0) {
      piv = j;
      break;
    }
  }
  if (piv < 0) return;
  u64 c = F.inv(v[piv]);
  for (int j = 0; j < r; ++j) v[j] = F.mul(v[j], c);
  for (size_t i = 0; i < s.basis.size(); ++i) {
    if (s.basis[i][piv] != 0) {
      u64 d = s.basis[i][piv];
      for (int j = 0; j < r; ++j) s.basis[i][j] = F.sub(s.basis[i][j], F.mul(d, v[j]));
    }
  }
  s.basis.push_back(std::move(v));
  s.pivots.push_back(piv);
}

// Coordinates of v in the subspace basis; throws if v is outside (the class
// matrices must preserve every intermediate eigenspace).
Vec coords_in(const Fp& F, const Subspace& s, Vec v) {
  Vec coord(s.basis.size(), 0);
  const int r = static_cast<int>(v.size());
  for (size_t i = 0; i < s.basis.size(); ++i) {
    u64 c = v[s.pivots[i]];
    coord[i] = c;
    if (c != 0) {
      for (int j = 0; j < r; ++j) v[j] = F.sub(v[j], F.mul(c, s.basis[i][j]));
    }
  }
  for (int j = 0; j < r; ++j) {
    if (v[j] != 0) throw InternalInconsistency("class matrix does not preserve eigenspace");
  }
  return coord;
}

// Characteristic polynomial of a k x k matrix over F_p via Hessenberg
// reduction (field operations only; valid for any p > k or not).
std::vector<u64> char_poly(const Fp& F, std::vector<Vec> m) {
  const int k = static_cast<int>(m.size());
  // Reduce to upper Hessenberg by similarity transformations.
  for (int col = 0; col < k - 2; ++col) {
    int piv = -1;
    for (int row = col + 1; row < k; ++row) {
      if (m[row][col] != 0) {
        piv = row;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != col + 1) {
      std::swap(m[piv], m[col + 1]);
      for (int i = 0; i < k; ++i) std::swap(m[i][piv], m[i][col + 1]);
    }
    u64 d = F.inv(m[col + 1][col]);
    for (int row = col + 2; row < k; ++row) {
      u64 f = F.mul(m[row][col], d);
      if (f == 0) continue;
      for (int j = 0; j < k; ++j) m[row][j] = F.sub(m[row][j], F.mul(f, m[col + 1][j]));
      for (int i = 0; i < k; ++i) m[i][col + 1] = F.add(m[i][col + 1], F.mul(f, m[i][row]));
    }
  }
  // p_i = det(x I - H[0..i)): expansion along the last row of the leading
  // principal minors of a Hessenberg matrix.
  std::vector<std::vector<u64>> p(k + 1);
  p[0] = {1};
  for (int i = 1; i <= k; ++i) {
    // (x - h_{i-1,i-1}) * p_{i-1}
    std::vector<u64> poly(i + 1, 0);
    for (int t = 0; t < i; ++t) {
      poly[t + 1] = F.add(poly[t + 1], p[i - 1][t]);
      poly[t] = F.sub(poly[t], F.mul(m[i - 1][i - 1], p[i - 1][t]));
    }
    u64 prod = 1;
    for (int j = i - 2; j >= 0; --j) {
      prod = F.mul(prod, m[j + 1][j]);
      u64 c = F.mul(prod, m[j][i - 1]);
      if (c != 0) {
        for (int t = 0; t < j + 1; ++t) poly[t] = F.sub(poly[t], F.mul(c, p[j][t]));
      }
    }
    p[i] = std::move(poly);
  }
  return p[k];
}

u64 eval_poly(const Fp& F, const std::vector<u64>& poly, u64 x) {
  u64 r = 0;
  for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i) r = F.add(F.mul(r, x), poly[i]);
  return r;
}

// Kernel basis of a k x k matrix over F_p.
std::vector<Vec> kernel(const Fp& F, std::vector<Vec> m) {
  const int k = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < k && row < k; ++col) {
    int piv = -1;
    for (int i = row; i < k; ++i) {
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    u64 d = F.inv(m[row][col]);
    for (int j = 0; j < k; ++j) m[row][j] = F.mul(m[row][j], d);
    for (int i = 0; i < k; ++i) {
      if (i != row && m[i][col] != 0) {
        u64 f = m[i][col];
        for (int j = 0; j < k; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[row][j]));
      }
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<char> is_pivot(k, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<Vec> out;
  for (int free = 0; free < k; ++free) {
    if (is_pivot[free]) continue;
    Vec v(k, 0);
    v[free] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = F.sub(0, m[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

CharacterTable character_table(const GroupPtr& g, int order_bound) {
  const int n = g->order();
  if (n > order_bound) {
    throw OrderBound("character table: order " + std::to_string(n) + " exceeds bound " +
                     std::to_string(order_bound));
  }
  const auto& cc = g->classes();
  const int r = cc.count();
  const long e = g->exponent();
  const Fp F{static_cast<u64>(dixon_prime(e, n))};

  // Class matrices (A_i)_{jk} = a_{ijk} mod p; the common eigenvectors are
  // (omega_k)_k with omega_k = |C_k| chi(g_k) / chi(1).
  std::vector<std::vector<Vec>> A(r, std::vector<Vec>(r, Vec(r, 0)));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) {
        A[i][j][k] = static_cast<u64>(g->class_constant(i, j, k) % static_cast<long long>(F.p));
      }
    }
  }
  auto apply = [&](const std::vector<Vec>& M, const Vec& v) {
    Vec out(r, 0);
    for (int j = 0; j < r; ++j) {
      u64 acc = 0;
      for (int k = 0; k < r; ++k) acc = F.add(acc, F.mul(M[j][k], v[k]));
      out[j] = acc;
    }
    return out;
  };

  std::vector<Subspace> spaces(1);
  for (int j = 0; j < r; ++j) {
    Vec v(r, 0);
    v[j] = 1;
    rref_insert(F, spaces[0], std::move(v));
  }

  std::mt19937 rng(20240601u);  // fixed seed: deterministic splits
  auto next_matrix = [&](int round) -> std::vector<Vec> {
    if (round < 3 && r > 1) {
      // Random integer combination of the class matrices.
      std::uniform_int_distribution<u64> dist(0, F.p - 1);
      std::vector<Vec> M(r, Vec(r, 0));
      for (int i = 1; i < r; ++i) {
        u64 c = dist(rng);
        if (c == 0) continue;
        for (int j = 0; j < r; ++j) {
          for (int k = 0; k < r; ++k) M[j][k] = F.add(M[j][k], F.mul(c, A[i][j][k]));
        }
      }
      return M;
    }
    return A[round - 3 + 1];  // systematic sweep guarantees a full split
  };

  const int total_rounds = r + 2;  // 3 random combos + the systematic sweep
  for (int round = 0; round <= total_rounds; ++round) {
    bool any_big = false;
    for (const auto& s : spaces) any_big |= s.basis.size() > 1;
    if (!any_big) break;
    if (round == total_rounds) {
      throw InternalInconsistency("eigenspace splitting did not terminate");
    }
    std::vector<Vec> M = next_matrix(round);
    std::vector<Subspace> next;
    for (auto& s : spaces) {
      const int k = static_cast<int>(s.basis.size());
      if (k == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // Restriction of M to the subspace in basis coordinates.
      std::vector<Vec> R(k);
      for (int i = 0; i < k; ++i) R[i] = coords_in(F, s, apply(M, s.basis[i]));
      // R above has rows = images; transpose to act on coordinate columns.
      std::vector<Vec> Rt(k, Vec(k, 0));
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) Rt[j][i] = R[i][j];
      }
      auto poly = char_poly(F, Rt);
      for (u64 lam = 0; lam < F.p; ++lam) {
        if (eval_poly(F, poly, lam) != 0) continue;
        std::vector<Vec> shifted = Rt;
        for (int i = 0; i < k; ++i) shifted[i][i] = F.sub(shifted[i][i], lam);
        auto ker = kernel(F, shifted);
        if (ker.empty()) continue;
        Subspace sub;
        for (auto& kv : ker) {
          Vec ambient(r, 0);
          for (int i = 0; i < k; ++i) {
            if (kv[i] != 0) {
              for (int j = 0; j < r; ++j) {
                ambient[j] = F.add(ambient[j], F.mul(kv[i], s.basis[i][j]));
              }
            }
          }
          rref_insert(F, sub, std::move(ambient));
        }
        next.push_back(std::move(sub));
      }
    }
    size_t total = 0;
    for (const auto& s : next) total += s.basis.size();
    if (total != static_cast<size_t>(r)) {
      throw InternalInconsistency("eigenspace splitting lost dimensions");
    }
    spaces = std::move(next);
  }

  // Lift each one-dimensional common eigenspace to an exact character.
  const u64 z = F.pow(primitive_root(F), (F.p - 1) / static_cast<u64>(e));
  std::vector<u64> zpow(e);
  for (long t = 0; t < e; ++t) zpow[t] = F.pow(z, static_cast<u64>(t));
  std::vector<u64> hinv(r);
  for (int k = 0; k < r; ++k) hinv[k] = F.inv(static_cast<u64>(cc.size(k) % static_cast<long>(F.p)));

  std::vector<Character> rows;
  for (const auto& s : spaces) {
    Vec w = s.basis[0];
    if (w[0] == 0) throw InternalInconsistency("eigenvector vanishes on the identity class");
    u64 scale = F.inv(w[0]);
    for (auto& x : w) x = F.mul(x, scale);
    // d^2 = |G| / sum_k w_k w_{k*} / h_k.
    u64 S = 0;
    for (int k = 0; k < r; ++k) {
      S = F.add(S, F.mul(F.mul(w[k], w[cc.inverse_class[k]]), hinv[k]));
    }
    if (S == 0) throw InternalInconsistency("degree normalization vanished");
    u64 d2 = F.mul(static_cast<u64>(n % static_cast<long>(F.p)), F.inv(S));
    long d = -1;
    for (u64 t = 1; 2 * t < F.p; ++t) {
      if (F.mul(t, t) == d2) {
        d = static_cast<long>(t);
        break;
      }
    }
    if (d < 0) throw InternalInconsistency("no degree square root below p/2");

    Character chi;
    chi.group = g;
    chi.values.resize(r);
    for (int k = 0; k < r; ++k) {
      // chi(g_k^v) mod p for v = 0..e-1, then invert the DFT.
      std::vector<u64> t(e);
      Elem x = 0;
      for (long v = 0; v < e; ++v) {
        int cls = cc.class_of[x];
        t[v] = F.mul(F.mul(static_cast<u64>(d), w[cls]), hinv[cls]);
        x = g->mul(x, cc.representatives[k]);
      }
      const u64 einv = F.inv(static_cast<u64>(e % static_cast<long>(F.p)));
      Cyclotomic val;
      for (long u = 0; u < e; ++u) {
        u64 acc = 0;
        for (long v = 0; v < e; ++v) {
          long idx = (e - (u * v) % e) % e;  // z^{-uv}
          acc = F.add(acc, F.mul(t[v], zpow[idx]));
        }
        u64 mult = F.mul(acc, einv);
        if (mult == 0) continue;
        if (mult > static_cast<u64>(d)) {
          throw InternalInconsistency("eigenvalue multiplicity exceeds the degree");
        }
        val += Cyclotomic::root_of_unity(e, u) * Rational(static_cast<long>(mult));
      }
      chi.values[k] = std::move(val);
    }
    rows.push_back(std::move(chi));
  }

  std::sort(rows.begin(), rows.end(), [](const Character& a, const Character& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t k = 0; k < a.values.size(); ++k) {
      int c = Cyclotomic::cmp(a.values[k], b.values[k]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  for (size_t i = 0; i < rows.size(); ++i) rows[i].label = "chi" + std::to_string(i);

  CharacterTable table{g, std::move(rows)};
  validate_table(table);
  return table;
}

}  // namespace zl1
