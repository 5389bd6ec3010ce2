#pragma once

#include <zl1/rational.hpp>

#include <optional>
#include <string>

namespace zl1 {

// A closed real interval with exact rational endpoints. Every enclosure
// routine returns an interval that is guaranteed to contain the true value;
// outward rounding everywhere. Transcendental endpoints are produced with
// MPFR under directed rounding and converted to rationals exactly.
class RealInterval {
 public:
  RealInterval() : lo_(0), hi_(0) {}
  explicit RealInterval(const Rational& point) : lo_(point), hi_(point) {}
  RealInterval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RealInterval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }

  RealInterval operator+(const RealInterval& o) const;
  RealInterval operator-(const RealInterval& o) const;
  RealInterval operator*(const RealInterval& o) const;
  RealInterval& operator+=(const RealInterval& o) { return *this = *this + o; }
  RealInterval& operator*=(const RealInterval& o) { return *this = *this * o; }

  std::string str() const;

 private:
  Rational lo_, hi_;
};

// sqrt of a nonnegative rational. Degenerate (exact) when x is a perfect
// square; otherwise width <= 2^-precision_bits.
RealInterval sqrt_enclosure(const Rational& x, int precision_bits);

// Elementwise sqrt of a nonnegative interval (lo clamped at 0).
RealInterval sqrt_enclosure(const RealInterval& x, int precision_bits);

// base^expo for base >= 0 (interval) and exact rational exponent. Returns a
// degenerate interval when the power is exactly rational. base.lo() must be
// positive when expo is negative.
RealInterval pow_enclosure(const RealInterval& base, const Rational& expo,
                           int precision_bits);
RealInterval pow_enclosure(const Rational& base, const Rational& expo,
                           int precision_bits);

// cos(2*pi*frac).
RealInterval cos2pi_enclosure(const Rational& frac, int precision_bits);

// Certified bounds for exp(x) and log(x) (x.lo() > 0 for log).
RealInterval exp_enclosure(const RealInterval& x, int precision_bits);
RealInterval log_enclosure(const RealInterval& x, int precision_bits);

}  // namespace zl1
