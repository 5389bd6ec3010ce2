#include <zl1/errors.hpp>
#include <zl1/interval.hpp>
#include <zl1/rational.hpp>

#include <doctest.h>

using namespace zl1;

TEST_CASE("rational helpers") {
  CHECK(qpow(Rational(3, 2), 3) == Rational(27, 8));
  CHECK(qpow(Rational(2), -2) == Rational(1, 4));
  CHECK(qpow(Rational(5), 0) == 1);
  CHECK(is_integer(Rational(4, 2)));
  CHECK(!is_integer(Rational(1, 3)));

  CHECK(exact_sqrt(Rational(49, 9)) == Rational(7, 3));
  CHECK(!exact_sqrt(Rational(2)).has_value());
  CHECK(exact_kth_root(Rational(27, 8), 3) == Rational(3, 2));
  CHECK(exact_rational_pow(Rational(4), Rational(3, 2)) == Rational(8));
  CHECK(exact_rational_pow(Rational(2), Rational(-1)) == Rational(1, 2));
  CHECK(!exact_rational_pow(Rational(2), Rational(1, 2)).has_value());

  CHECK(parse_rational("3.5") == Rational(7, 2));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("interval arithmetic") {
  RealInterval a(Rational(-2), Rational(3));
  RealInterval b(Rational(-5), Rational(7));
  RealInterval p = a * b;
  CHECK(p.lo() == -15);
  CHECK(p.hi() == 21);
  CHECK((a + b).lo() == -7);
  CHECK((a - b).hi() == 8);
  CHECK(a.contains(Rational(0)));
  CHECK_THROWS_AS(RealInterval(Rational(1), Rational(0)), Error);
}

TEST_CASE("sqrt enclosures") {
  CHECK(sqrt_enclosure(Rational(4), 64).is_point());
  CHECK(sqrt_enclosure(Rational(4), 64).lo() == 2);
  RealInterval r2 = sqrt_enclosure(Rational(2), 128);
  CHECK(r2.lo() * r2.lo() <= 2);
  CHECK(r2.hi() * r2.hi() >= 2);
  CHECK(r2.width() <= qpow(Rational(1, 2), 128));
  // refinement nests
  RealInterval coarse = sqrt_enclosure(Rational(2), 64);
  CHECK(coarse.contains(r2));
}

TEST_CASE("pow enclosures") {
  CHECK(pow_enclosure(Rational(4), Rational(3, 2), 64).is_point());
  CHECK(pow_enclosure(Rational(4), Rational(3, 2), 64).lo() == 8);
  RealInterval t = pow_enclosure(Rational(2), Rational(7, 2), 96);
  // 2^3.5 squared is 128
  CHECK(t.lo() * t.lo() <= 128);
  CHECK(t.hi() * t.hi() >= 128);
  CHECK(t.width() <= qpow(Rational(1, 2), 96));
  // negative exponents on intervals
  RealInterval base(Rational(2), Rational(3));
  RealInterval inv = pow_enclosure(base, Rational(-1), 64);
  CHECK(inv.lo() <= Rational(1, 3));
  CHECK(inv.hi() >= Rational(1, 2));
  CHECK_THROWS_AS(pow_enclosure(RealInterval(Rational(0), Rational(1)), Rational(-1), 64),
                  Error);
}

TEST_CASE("cos2pi enclosures") {
  CHECK(cos2pi_enclosure(Rational(0), 64).lo() == 1);
  CHECK(cos2pi_enclosure(Rational(1, 2), 64).lo() == -1);
  CHECK(cos2pi_enclosure(Rational(1, 4), 64).lo() == 0);
  CHECK(cos2pi_enclosure(Rational(1, 3), 64).lo() == Rational(-1, 2));
  CHECK(cos2pi_enclosure(Rational(1, 6), 64).lo() == Rational(1, 2));
  CHECK(cos2pi_enclosure(Rational(-1, 4), 64).lo() == 0);
  // cos(2 pi / 5) = 0.30901699...
  RealInterval c = cos2pi_enclosure(Rational(1, 5), 96);
  CHECK(c.lo() < Rational(3090170, 10000000));
  CHECK(c.hi() > Rational(3090169, 10000000));
  CHECK(c.width() <= qpow(Rational(1, 2), 96));
}

TEST_CASE("exp and log enclosures") {
  RealInterval e = exp_enclosure(RealInterval(Rational(1)), 80);
  CHECK(e.lo() < Rational(271829, 100000));
  CHECK(e.hi() > Rational(271828, 100000));
  RealInterval l = log_enclosure(RealInterval(Rational(2)), 80);
  CHECK(l.lo() < Rational(69315, 100000));
  CHECK(l.hi() > Rational(69314, 100000));
  CHECK(log_enclosure(RealInterval(Rational(1)), 64).is_point());
}
