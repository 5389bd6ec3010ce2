#include <zl1/gf.hpp>

#include <algorithm>
#include <string>

namespace zl1 {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<long, int> prime_power_decomposition(long q) {
  if (q < 2) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  for (long p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      long m = q;
      int k = 0;
      while (m % p == 0) m /= p, ++k;
      if (m != 1) throw NotPrimePower(std::to_string(q) + " is not a prime power");
      return {p, k};
    }
  }
  return {q, 1};
}

namespace {

// Polynomials over F_p as digit vectors, least significant first.
using Poly = std::vector<int>;

Poly decode(int x, int p, int len) {
  Poly out(len, 0);
  for (int i = 0; i < len && x > 0; ++i) {
    out[i] = x % p;
    x /= p;
  }
  return out;
}

int encode(const Poly& f, int p) {
  int x = 0;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) x = x * p + f[i];
  return x;
}

// (a * b) mod m, with m monic of degree k.
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, int p, int k) {
  std::vector<int> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (int d = static_cast<int>(prod.size()) - 1; d >= k; --d) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < k; ++i) {
      prod[d - k + i] = ((prod[d - k + i] - c * m[i]) % p + p * p) % p;
    }
  }
  prod.resize(k);
  return prod;
}

bool poly_is_zero(const Poly& f) {
  return std::all_of(f.begin(), f.end(), [](int c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(const Poly& m, int p, int k) {
  for (int d = 1; 2 * d <= k; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long enc = 0; enc < count; ++enc) {
      Poly div = decode(static_cast<int>(enc), p, d + 1);
      div[d] = 1;
      // Remainder of m modulo div.
      Poly rem = m;
      for (int t = static_cast<int>(rem.size()) - 1; t >= d; --t) {
        int c = rem[t];
        if (c == 0) continue;
        rem[t] = 0;
        for (int i = 0; i < d; ++i) {
          rem[t - d + i] = ((rem[t - d + i] - c * div[i]) % p + p * p) % p;
        }
      }
      rem.resize(d);
      if (poly_is_zero(rem)) return false;
    }
  }
  return true;
}

}  // namespace

GaloisField::GaloisField(int q) {
  auto [p, k] = prime_power_decomposition(q);
  q_ = q;
  p_ = static_cast<int>(p);
  k_ = k;
  Poly modulus(k + 1, 0);
  modulus[k] = 1;
  if (k > 1) {
    long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    bool found = false;
    for (long enc = 0; enc < count && !found; ++enc) {
      Poly cand = decode(static_cast<int>(enc), p_, k + 1);
      cand[k] = 1;
      if (is_irreducible(cand, p_, k)) {
        modulus = cand;
        found = true;
      }
    }
    if (!found) throw Error("no irreducible polynomial found");  // unreachable
  }
  add_.resize(static_cast<size_t>(q) * q);
  mul_.resize(static_cast<size_t>(q) * q);
  neg_.resize(q);
  inv_.assign(q, -1);
  for (int a = 0; a < q; ++a) {
    Poly fa = decode(a, p_, k);
    Poly na(k);
    for (int i = 0; i < k; ++i) na[i] = (p_ - fa[i]) % p_;
    neg_[a] = encode(na, p_);
    for (int b = 0; b < q; ++b) {
      Poly fb = decode(b, p_, k);
      Poly s(k);
      for (int i = 0; i < k; ++i) s[i] = (fa[i] + fb[i]) % p_;
      add_[static_cast<size_t>(a) * q + b] = encode(s, p_);
      mul_[static_cast<size_t>(a) * q + b] = encode(mulmod(fa, fb, modulus, p_, k), p_);
    }
  }
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (mul(a, b) == 1) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0) throw Error("field inversion failed; modulus not irreducible?");
  }
}

int GaloisField::inv(int a) const {
  if (a == 0) throw Error("GaloisField: inverse of zero");
  return inv_[a];
}

}  // namespace zl1
