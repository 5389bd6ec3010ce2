#include <zl1/interval.hpp>

#include <zl1/errors.hpp>

#include <mpfr.h>

#include <algorithm>
#include <sstream>

namespace zl1 {

namespace {

// Exact conversion: every finite MPFR number is mantissa * 2^e.
Rational to_rational(const mpfr_t x) {
  if (mpfr_zero_p(x)) return Rational(0);
  if (!mpfr_number_p(x)) throw Error("interval: non-finite MPFR value");
  Integer man;
  mpfr_exp_t e = mpfr_get_z_2exp(man.get_mpz_t(), x);
  Rational r(man);
  if (e >= 0) {
    mpz_mul_2exp(r.get_num().get_mpz_t(), r.get_num().get_mpz_t(),
                 static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(r.get_den().get_mpz_t(), r.get_den().get_mpz_t(),
                 static_cast<mp_bitcnt_t>(-e));
  }
  r.canonicalize();
  return r;
}

Rational width_target(int precision_bits) {
  Rational t(1);
  mpz_mul_2exp(t.get_den().get_mpz_t(), t.get_den().get_mpz_t(), precision_bits);
  t.canonicalize();
  return t;
}

struct Mpfr {
  mpfr_t v;
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

// One directed-rounding evaluation of base^expo at working precision wp.
Rational pow_bound(const Rational& base, const Rational& expo, mpfr_prec_t wp,
                   bool lower) {
  const mpfr_rnd_t final_rnd = lower ? MPFR_RNDD : MPFR_RNDU;
  // Monotone in the base: increasing for expo > 0, decreasing for expo < 0.
  const bool base_down = lower == (expo > 0);
  Mpfr b(wp), e(wp), r(wp);
  mpfr_set_q(b.v, base.get_mpq_t(), base_down ? MPFR_RNDD : MPFR_RNDU);
  // Monotone in the exponent: increasing iff base >= 1.
  const bool expo_down = lower == (base >= 1);
  mpfr_set_q(e.v, expo.get_mpq_t(), expo_down ? MPFR_RNDD : MPFR_RNDU);
  mpfr_pow(r.v, b.v, e.v, final_rnd);
  return to_rational(r.v);
}

}  // namespace

RealInterval::RealInterval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw Error("RealInterval: lo > hi");
}

RealInterval RealInterval::operator+(const RealInterval& o) const {
  return RealInterval(lo_ + o.lo_, hi_ + o.hi_);
}

RealInterval RealInterval::operator-(const RealInterval& o) const {
  return RealInterval(lo_ - o.hi_, hi_ - o.lo_);
}

RealInterval RealInterval::operator*(const RealInterval& o) const {
  Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
  return RealInterval(std::min(std::min(a, b), std::min(c, d)),
                      std::max(std::max(a, b), std::max(c, d)));
}

std::string RealInterval::str() const {
  std::ostringstream os;
  if (is_point()) {
    os << lo_.get_str();
  } else {
    os << "[" << lo_.get_str() << ", " << hi_.get_str() << "]";
  }
  return os.str();
}

RealInterval sqrt_enclosure(const Rational& x, int precision_bits) {
  if (x < 0) throw Error("sqrt_enclosure: negative argument");
  if (auto r = exact_sqrt(x)) return RealInterval(*r);
  const Rational target = width_target(precision_bits);
  for (mpfr_prec_t wp = precision_bits + 16;; wp *= 2) {
    Mpfr t(wp), r(wp);
    mpfr_set_q(t.v, x.get_mpq_t(), MPFR_RNDD);
    mpfr_sqrt(r.v, t.v, MPFR_RNDD);
    Rational lo = to_rational(r.v);
    mpfr_set_q(t.v, x.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(r.v, t.v, MPFR_RNDU);
    Rational hi = to_rational(r.v);
    if (hi - lo <= target) return RealInterval(lo, hi);
    if (wp > (1 << 24)) throw Error("sqrt_enclosure: refinement runaway");
  }
}

RealInterval sqrt_enclosure(const RealInterval& x, int precision_bits) {
  Rational lo = x.lo() < 0 ? Rational(0) : x.lo();
  RealInterval a = sqrt_enclosure(lo, precision_bits);
  RealInterval b = sqrt_enclosure(x.hi(), precision_bits);
  return RealInterval(a.lo(), b.hi());
}

RealInterval pow_enclosure(const Rational& base, const Rational& expo,
                           int precision_bits) {
  if (base < 0) throw Error("pow_enclosure: negative base");
  if (expo == 0) return RealInterval(Rational(1));
  if (base == 0) {
    if (expo < 0) throw Error("pow_enclosure: 0 with negative exponent");
    return RealInterval(Rational(0));
  }
  if (auto r = exact_rational_pow(base, expo)) return RealInterval(*r);
  const Rational target = width_target(precision_bits);
  for (mpfr_prec_t wp = precision_bits + 16;; wp *= 2) {
    Rational lo = pow_bound(base, expo, wp, true);
    Rational hi = pow_bound(base, expo, wp, false);
    if (hi - lo <= target) return RealInterval(lo, hi);
    if (wp > (1 << 24)) throw Error("pow_enclosure: refinement runaway");
  }
}

RealInterval pow_enclosure(const RealInterval& base, const Rational& expo,
                           int precision_bits) {
  if (base.is_point()) return pow_enclosure(base.lo(), expo, precision_bits);
  if (expo >= 0) {
    Rational blo = base.lo() < 0 ? Rational(0) : base.lo();
    RealInterval a = pow_enclosure(blo, expo, precision_bits);
    RealInterval b = pow_enclosure(base.hi(), expo, precision_bits);
    return RealInterval(a.lo(), b.hi());
  }
  if (base.lo() <= 0) throw Error("pow_enclosure: negative exponent on interval touching 0");
  RealInterval a = pow_enclosure(base.hi(), expo, precision_bits);
  RealInterval b = pow_enclosure(base.lo(), expo, precision_bits);
  return RealInterval(a.lo(), b.hi());
}

RealInterval cos2pi_enclosure(const Rational& frac, int precision_bits) {
  // Reduce mod 1; cos(2 pi k) cases fall out exactly below for f in {0,1/4,1/2,3/4}.
  Rational f = frac;
  f.canonicalize();
  f -= Integer(mpz_class(f.get_num() / f.get_den()));
  if (f < 0) f += 1;
  if (f == 0) return RealInterval(Rational(1));
  if (f == Rational(1, 2)) return RealInterval(Rational(-1));
  if (f == Rational(1, 4) || f == Rational(3, 4)) return RealInterval(Rational(0));
  if (f == Rational(1, 3) || f == Rational(2, 3)) return RealInterval(Rational(-1, 2));
  if (f == Rational(1, 6) || f == Rational(5, 6)) return RealInterval(Rational(1, 2));
  const Rational target = width_target(precision_bits);
  for (mpfr_prec_t wp = precision_bits + 16;; wp *= 2) {
    Mpfr pi(wp), t(wp), c(wp), q(wp);
    // t_lo <= 2*pi*f <= t_hi, f > 0.
    mpfr_const_pi(pi.v, MPFR_RNDD);
    mpfr_set_q(q.v, f.get_mpq_t(), MPFR_RNDD);
    mpfr_mul(t.v, pi.v, q.v, MPFR_RNDD);
    mpfr_mul_ui(t.v, t.v, 2, MPFR_RNDD);
    Rational t_lo = to_rational(t.v);
    mpfr_const_pi(pi.v, MPFR_RNDU);
    mpfr_set_q(q.v, f.get_mpq_t(), MPFR_RNDU);
    mpfr_mul(t.v, pi.v, q.v, MPFR_RNDU);
    mpfr_mul_ui(t.v, t.v, 2, MPFR_RNDU);
    Rational t_hi = to_rational(t.v);
    Rational delta = t_hi - t_lo;
    // |cos(x) - cos(t_lo)| <= |x - t_lo| <= delta on [t_lo, t_hi].
    mpfr_set_q(t.v, t_lo.get_mpq_t(), MPFR_RNDD);
    mpfr_cos(c.v, t.v, MPFR_RNDD);
    Rational lo = to_rational(c.v) - delta;
    mpfr_cos(c.v, t.v, MPFR_RNDU);
    Rational hi = to_rational(c.v) + delta;
    lo = std::max(lo, Rational(-1));
    hi = std::min(hi, Rational(1));
    if (hi - lo <= target) return RealInterval(lo, hi);
    if (wp > (1 << 24)) throw Error("cos2pi_enclosure: refinement runaway");
  }
}

RealInterval exp_enclosure(const RealInterval& x, int precision_bits) {
  const Rational target = width_target(precision_bits);
  for (mpfr_prec_t wp = precision_bits + 16;; wp *= 2) {
    Mpfr t(wp), r(wp);
    mpfr_set_q(t.v, x.lo().get_mpq_t(), MPFR_RNDD);
    mpfr_exp(r.v, t.v, MPFR_RNDD);
    Rational lo = to_rational(r.v);
    mpfr_set_q(t.v, x.hi().get_mpq_t(), MPFR_RNDU);
    mpfr_exp(r.v, t.v, MPFR_RNDU);
    Rational hi = to_rational(r.v);
    if (hi - lo <= target || wp >= 4096) return RealInterval(lo, hi);
  }
}

RealInterval log_enclosure(const RealInterval& x, int precision_bits) {
  if (x.lo() <= 0) throw Error("log_enclosure: nonpositive argument");
  if (x.is_point() && x.lo() == 1) return RealInterval(Rational(0));
  const Rational target = width_target(precision_bits);
  for (mpfr_prec_t wp = precision_bits + 16;; wp *= 2) {
    Mpfr t(wp), r(wp);
    mpfr_set_q(t.v, x.lo().get_mpq_t(), MPFR_RNDD);
    mpfr_log(r.v, t.v, MPFR_RNDD);
    Rational lo = to_rational(r.v);
    mpfr_set_q(t.v, x.hi().get_mpq_t(), MPFR_RNDU);
    mpfr_log(r.v, t.v, MPFR_RNDU);
    Rational hi = to_rational(r.v);
    if (hi - lo <= target || wp >= 4096) return RealInterval(lo, hi);
  }
}

}  // namespace zl1
