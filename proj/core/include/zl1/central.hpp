#pragma once

#include <zl1/character.hpp>
#include <zl1/metrics.hpp>

namespace zl1 {

// An element of the centre of the l^1 group algebra of a finite group,
// written in the basis of conjugacy-class indicator functions.
struct CentralElement {
  GroupPtr group;
  std::vector<Cyclotomic> coeffs;  // one per conjugacy class

  static CentralElement zero(const GroupPtr& g);
  static CentralElement delta_e(const GroupPtr& g);
  static CentralElement class_indicator(const GroupPtr& g, int class_index);

  CentralElement operator+(const CentralElement& o) const;
  CentralElement operator-(const CentralElement& o) const;
  CentralElement operator*(const Rational& s) const;
  bool operator==(const CentralElement& o) const;
};

// Exact convolution via the class-sum structure constants.
CentralElement convolve(const CentralElement& a, const CentralElement& b);

// The algebra character attached to an irreducible group character:
// psi(f) = sum_x f(x) d^-1 chi(x^-1).
Cyclotomic gelfand_value(const Character& chi, const CentralElement& f);

// e_chi = (d/|G|) chi; the identity of the chi-block.
CentralElement minimal_central_idempotent(const Character& chi);

// u = delta_e - e_chi; the identity element of ker psi_chi.
CentralElement kernel_identity_u(const Character& chi);

// sum_C |C| |coeff_C|, certified; exact whenever every |coeff| is rational.
ExactOrInterval l1_norm(const CentralElement& f,
                        int precision_bits = kDefaultPrecisionBits);

enum class Factor { Left, Right };

// Conjugacy classes of an explicit direct product are pairs of factor
// classes; maps (i, j) -> class index of the product, validating the
// correspondence.
std::vector<int> product_class_map(const GroupPtr& product);

// a (x) b on an explicit product.
CentralElement tensor_central(const GroupPtr& product, const CentralElement& a,
                              const CentralElement& b);

// iota(a) = a (x) delta_e: the unital isometric inclusion of one factor.
CentralElement include_factor(const GroupPtr& product, const CentralElement& a,
                              Factor which);

// P(a (x) b) = eps(b) a: the augmentation-against-the-other-factor
// projection; a unital algebra homomorphism with P o iota = id.
CentralElement project_factor(const CentralElement& f, Factor which);

// Verifies dim Zl^1(GxH) = dim Zl^1(G) * dim Zl^1(H), that class indicators
// factor as elementary tensors, and that l^1 norms multiply on elementary
// tensors with rational coefficients. Throws OrderBound above the bound.
bool tensor_center_check(const GroupPtr& g, const GroupPtr& h,
                         int order_bound = kOracleOrderBound);

}  // namespace zl1
