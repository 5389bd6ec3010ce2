#pragma once

#include <zl1/character.hpp>
#include <zl1/interval.hpp>

#include <optional>
#include <string>
#include <vector>

namespace zl1 {

inline constexpr int kDefaultPrecisionBits = 128;
inline constexpr int kPrecisionCapBits = 1024;

// A real quantity carried as an exact rational whenever exactly decidable,
// always with a certified enclosure.
struct ExactOrInterval {
  std::optional<Rational> exact;
  RealInterval bounds;

  static ExactOrInterval from_exact(const Rational& q) {
    return ExactOrInterval{q, RealInterval(q)};
  }
  static ExactOrInterval from_interval(RealInterval iv) {
    if (iv.is_point()) return from_exact(iv.lo());
    return ExactOrInterval{std::nullopt, std::move(iv)};
  }
  bool is_exact() const { return exact.has_value(); }
  std::string str() const;
};

ExactOrInterval operator*(const ExactOrInterval& a, const ExactOrInterval& b);
ExactOrInterval operator+(const ExactOrInterval& a, const ExactOrInterval& b);
ExactOrInterval eoi_pow_ui(const ExactOrInterval& a, unsigned long k);
// base^expo with base >= 0 exact rational.
ExactOrInterval eoi_pow(const Rational& base, const Rational& expo, int precision_bits);

// Decimal rendering with outward rounding (used for reports).
std::string decimal_lower(const Rational& q, int digits);
std::string decimal_upper(const Rational& q, int digits);

// Exact string for small rationals, "~d.dddddddde+xx" for huge ones.
std::string compact_str(const Rational& q);

// |z| as ExactOrInterval: exact when |z|^2 is a rational perfect square.
ExactOrInterval abs_value(const Cyclotomic& z, int precision_bits);

// sum_{x in G} |chi(x)|^p = sum_C |C| * |chi(C)|^p, certified. Exact
// whenever every class term is exactly rational (in particular for even
// integer p, and for integer p with all |chi(C)| rational).
ExactOrInterval lp_norm_pth_power(const Character& chi, const Rational& p,
                                  int precision_bits = kDefaultPrecisionBits);

// sup over non-identity classes of |chi(C)| / degree; 0 for the trivial
// group (sup of an empty set, by convention). Exact 0 and 1 are always
// decided exactly; otherwise exact iff max |chi(C)|^2 has a rational root.
ExactOrInterval mcr(const Character& chi, int precision_bits = kDefaultPrecisionBits);

// {x : |chi(x)| = degree}; a normal subgroup containing the centre.
Subgroup centre_of_character(const Character& chi);

// Exact decision: every |chi(C)|^2 equals 0 or degree^2.
bool is_absolutely_idempotent(const Character& chi);

// d_chi ||chi||_1 = |G|; decided exactly through the absolute-idempotency
// criterion, never through interval comparison.
bool bai_equality(const Character& chi);

enum class RiderClass { UnitNorm, AboveGap, GapViolation };
std::string to_string(RiderClass c);

// Classification of nu = d ||chi||_1 / |G|: exactly 1, certified >= 301/300,
// or certified inside the forbidden gap (loud). Throws UndeterminedError if
// the refinement cap cannot separate nu from the gap boundary.
RiderClass rider_classification(const Character& chi,
                                int precision_bits = kDefaultPrecisionBits,
                                int precision_cap = kPrecisionCapBits);

bool group_is_aic(const CharacterTable& table);
bool group_is_aic(const GroupPtr& g, int order_bound = kCharacterTableOrderBound);

struct CharacterMetrics {
  ExactOrInterval l1_norm;
  Rational l2_norm_squared;
  ExactOrInterval max_char_ratio;
  bool is_aic = false;
  bool bai_equal = false;
  Subgroup centre;
  std::vector<int> support_class_indices;
  RiderClass rider = RiderClass::UnitNorm;
};

CharacterMetrics compute_metrics(const Character& chi,
                                 int precision_bits = kDefaultPrecisionBits);

}  // namespace zl1
