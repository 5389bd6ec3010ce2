#include <zl1/metrics.hpp>

#include <zl1/errors.hpp>

#include <algorithm>
#include <sstream>

namespace zl1 {

namespace {

Cyclotomic cyclo_pow(const Cyclotomic& z, unsigned long k) {
  Cyclotomic r(Rational(1));
  Cyclotomic b = z;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

std::string decimal(const Rational& q, int digits, bool round_up) {
  Integer scale = ipow(Integer(10), digits);
  Rational scaled = q * Rational(scale);
  Integer rounded;
  if (round_up) {
    mpz_cdiv_q(rounded.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
  } else {
    mpz_fdiv_q(rounded.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
  }
  bool neg = rounded < 0;
  Integer mag = neg ? Integer(-rounded) : rounded;
  std::string s = mag.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return (neg ? "-" : "") + s;
}

}  // namespace

std::string decimal_lower(const Rational& q, int digits) { return decimal(q, digits, false); }
std::string decimal_upper(const Rational& q, int digits) { return decimal(q, digits, true); }

std::string compact_str(const Rational& q) {
  if (mpz_sizeinbase(q.get_num().get_mpz_t(), 10) <= 18 &&
      mpz_sizeinbase(q.get_den().get_mpz_t(), 10) <= 18) {
    return q.get_str();
  }
  mpf_class f(q, 64);
  mp_exp_t exp;
  std::string digits = f.get_str(exp, 10, 9);
  bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits.erase(digits.begin());
  if (digits.empty()) return "0";
  std::ostringstream os;
  os << "~" << (neg ? "-" : "") << digits[0] << "." << (digits.size() > 1 ? digits.substr(1) : "0")
     << "e" << (exp - 1 >= 0 ? "+" : "") << exp - 1;
  return os.str();
}

std::string ExactOrInterval::str() const {
  if (exact) return compact_str(*exact);
  const Rational big = qpow(Rational(10), 15);
  if (bounds.hi() >= big || bounds.lo() <= -big) {
    return "[" + compact_str(bounds.lo()) + ", " + compact_str(bounds.hi()) + "]";
  }
  return "[" + decimal_lower(bounds.lo(), 12) + ", " + decimal_upper(bounds.hi(), 12) + "]";
}

ExactOrInterval operator*(const ExactOrInterval& a, const ExactOrInterval& b) {
  if (a.exact && b.exact) return ExactOrInterval::from_exact(*a.exact * *b.exact);
  return ExactOrInterval{std::nullopt, a.bounds * b.bounds};
}

ExactOrInterval operator+(const ExactOrInterval& a, const ExactOrInterval& b) {
  if (a.exact && b.exact) return ExactOrInterval::from_exact(*a.exact + *b.exact);
  return ExactOrInterval{std::nullopt, a.bounds + b.bounds};
}

ExactOrInterval eoi_pow_ui(const ExactOrInterval& a, unsigned long k) {
  if (k == 0) return ExactOrInterval::from_exact(Rational(1));
  if (a.exact) return ExactOrInterval::from_exact(qpow(*a.exact, static_cast<long>(k)));
  RealInterval r(Rational(1));
  for (unsigned long i = 0; i < k; ++i) r *= a.bounds;
  return ExactOrInterval{std::nullopt, r};
}

ExactOrInterval eoi_pow(const Rational& base, const Rational& expo, int precision_bits) {
  if (auto r = exact_rational_pow(base, expo)) return ExactOrInterval::from_exact(*r);
  return ExactOrInterval::from_interval(pow_enclosure(base, expo, precision_bits));
}

ExactOrInterval abs_value(const Cyclotomic& z, int precision_bits) {
  Cyclotomic a2 = z.abs_squared();
  if (a2.is_rational()) {
    if (auto root = exact_sqrt(a2.rational_value())) return ExactOrInterval::from_exact(*root);
  }
  return ExactOrInterval::from_interval(z.abs_enclosure(precision_bits));
}

ExactOrInterval lp_norm_pth_power(const Character& chi, const Rational& p,
                                  int precision_bits) {
  if (p <= 0) throw Error("lp_norm_pth_power: exponent must be positive");
  const auto& cc = chi.group->classes();
  // Even integer exponent: |chi|^p = (chi conj(chi))^{p/2} summed exactly.
  if (is_integer(p) && p.get_num() % 2 == 0) {
    unsigned long half = mpz_class(p.get_num() / 2).get_ui();
    Cyclotomic acc;
    for (int k = 0; k < cc.count(); ++k) {
      acc += cyclo_pow(chi.values[k].abs_squared(), half) * Rational(cc.size(k));
    }
    if (!acc.is_rational()) {
      throw InternalInconsistency("even-power norm sum is not rational");
    }
    return ExactOrInterval::from_exact(acc.rational_value());
  }
  ExactOrInterval total = ExactOrInterval::from_exact(Rational(0));
  for (int k = 0; k < cc.count(); ++k) {
    ExactOrInterval a = abs_value(chi.values[k], precision_bits);
    ExactOrInterval term;
    if (a.exact) {
      term = eoi_pow(*a.exact, p, precision_bits);
    } else {
      term = ExactOrInterval::from_interval(
          pow_enclosure(a.bounds, p, precision_bits));
    }
    total = total + term * ExactOrInterval::from_exact(Rational(cc.size(k)));
  }
  return total;
}

ExactOrInterval mcr(const Character& chi, int precision_bits) {
  const auto& cc = chi.group->classes();
  if (cc.count() == 1) return ExactOrInterval::from_exact(Rational(0));
  // Locate the maximal |chi(C)|^2 over non-identity classes, exactly.
  Cyclotomic best = chi.values[1].abs_squared();
  for (int k = 2; k < cc.count(); ++k) {
    Cyclotomic a2 = chi.values[k].abs_squared();
    if (compare_real(a2, best) > 0) best = a2;
  }
  const Rational d2(chi.degree() * chi.degree());
  if (best.is_rational()) {
    if (auto root = exact_sqrt(best.rational_value())) {
      return ExactOrInterval::from_exact(*root / Rational(chi.degree()));
    }
    RealInterval iv = sqrt_enclosure(best.rational_value(), precision_bits);
    return ExactOrInterval::from_interval(
        iv * RealInterval(Rational(1, static_cast<unsigned long>(chi.degree()))));
  }
  RealInterval sq = best.real_enclosure(precision_bits);
  Rational lo = sq.lo() < 0 ? Rational(0) : sq.lo();
  RealInterval iv = sqrt_enclosure(RealInterval(lo, sq.hi()), precision_bits);
  Rational dinv(1, static_cast<unsigned long>(chi.degree()));
  return ExactOrInterval::from_interval(iv * RealInterval(dinv));
}

Subgroup centre_of_character(const Character& chi) {
  const Cyclotomic d2(Rational(chi.degree() * chi.degree()));
  const auto& g = *chi.group;
  std::vector<Elem> members;
  for (Elem x = 0; x < g.order(); ++x) {
    if (chi.value_at(x).abs_squared() == d2) members.push_back(x);
  }
  // Must be a subgroup; verify closure as a self-check.
  std::vector<char> in(g.order(), 0);
  for (Elem x : members) in[x] = 1;
  for (Elem x : members) {
    for (Elem y : members) {
      if (!in[g.mul(x, y)]) {
        throw InternalInconsistency("centre of character is not closed");
      }
    }
  }
  Subgroup s;
  s.elements = std::move(members);
  s.is_normal = g.is_subgroup_normal(s.elements);
  return s;
}

bool is_absolutely_idempotent(const Character& chi) {
  const Cyclotomic zero;
  const Cyclotomic d2(Rational(chi.degree() * chi.degree()));
  for (const auto& v : chi.values) {
    Cyclotomic a2 = v.abs_squared();
    if (a2 != zero && a2 != d2) return false;
  }
  return true;
}

bool bai_equality(const Character& chi) {
  // d ||chi||_1 = |G| iff |chi| takes values in {0, d}; the decision is made
  // on the exact criterion, never via interval comparison.
  return is_absolutely_idempotent(chi);
}

std::string to_string(RiderClass c) {
  switch (c) {
    case RiderClass::UnitNorm:
      return "UnitNorm";
    case RiderClass::AboveGap:
      return "AboveGap";
    case RiderClass::GapViolation:
      return "GapViolation";
  }
  return "?";
}

RiderClass rider_classification(const Character& chi, int precision_bits,
                                int precision_cap) {
  if (is_absolutely_idempotent(chi)) return RiderClass::UnitNorm;
  const Rational gap(301, 300);
  const Rational scale = Rational(chi.degree()) / Rational(chi.group->order());
  for (int prec = precision_bits; prec <= precision_cap; prec *= 2) {
    ExactOrInterval l1 = lp_norm_pth_power(chi, Rational(1), prec);
    if (l1.exact) {
      return *l1.exact * scale >= gap ? RiderClass::AboveGap : RiderClass::GapViolation;
    }
    if (l1.bounds.lo() * scale >= gap) return RiderClass::AboveGap;
    if (l1.bounds.hi() * scale < gap) return RiderClass::GapViolation;
  }
  throw UndeterminedError("rider_classification: refinement cap reached for " + chi.label);
}

bool group_is_aic(const CharacterTable& table) {
  return std::all_of(table.irreducibles.begin(), table.irreducibles.end(),
                     [](const Character& chi) { return is_absolutely_idempotent(chi); });
}

bool group_is_aic(const GroupPtr& g, int order_bound) {
  return group_is_aic(character_table(g, order_bound));
}

CharacterMetrics compute_metrics(const Character& chi, int precision_bits) {
  CharacterMetrics m;
  m.l1_norm = lp_norm_pth_power(chi, Rational(1), precision_bits);
  ExactOrInterval l2 = lp_norm_pth_power(chi, Rational(2), precision_bits);
  if (!l2.exact) throw InternalInconsistency("l2 norm must be exact");
  m.l2_norm_squared = *l2.exact;
  m.max_char_ratio = mcr(chi, precision_bits);
  m.is_aic = is_absolutely_idempotent(chi);
  m.bai_equal = bai_equality(chi);
  m.centre = centre_of_character(chi);
  for (int k = 0; k < static_cast<int>(chi.values.size()); ++k) {
    if (!chi.values[k].is_zero()) m.support_class_indices.push_back(k);
  }
  m.rider = rider_classification(chi, precision_bits);
  return m;
}

}  // namespace zl1
