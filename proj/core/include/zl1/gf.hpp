#pragma once

#include <zl1/errors.hpp>

#include <vector>

namespace zl1 {

// Arithmetic tables for a small finite field GF(p^k). Elements are encoded
// as 0..q-1, reading the base-p digits as polynomial coefficients over the
// deterministically chosen (lexicographically least) irreducible modulus.
class GaloisField {
 public:
  // Throws NotPrimePower unless q = p^k with p prime, k >= 1.
  explicit GaloisField(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return k_; }

  int add(int a, int b) const { return add_[static_cast<size_t>(a) * q_ + b]; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;

 private:
  int q_, p_, k_;
  std::vector<int> add_, mul_, neg_, inv_;
};

bool is_prime(long n);
// Returns (p, k) with q = p^k, or throws NotPrimePower.
std::pair<long, int> prime_power_decomposition(long q);

}  // namespace zl1
