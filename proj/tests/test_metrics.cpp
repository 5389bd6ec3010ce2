#include <zl1/atoms.hpp>
#include <zl1/metrics.hpp>

#include <doctest.h>

#include <algorithm>

using namespace zl1;

namespace {

const Character& row_of_degree(const CharacterTable& t, long d) {
  for (const auto& chi : t.irreducibles) {
    if (chi.degree() == d) return chi;
  }
  REQUIRE(false);
  return t.irreducibles.front();
}

}  // namespace

TEST_CASE("metrics on the dihedral two-dimensional character") {
  auto g = FiniteGroup::dihedral(4);
  auto t = character_table(g);
  const Character& sigma = row_of_degree(t, 2);

  ExactOrInterval l1 = lp_norm_pth_power(sigma, Rational(1));
  CHECK(l1.exact == Rational(4));
  CHECK(lp_norm_pth_power(sigma, Rational(2)).exact == Rational(8));
  CHECK(mcr(sigma).exact == Rational(1));
  CHECK(is_absolutely_idempotent(sigma));
  CHECK(bai_equality(sigma));
  CHECK(rider_classification(sigma) == RiderClass::UnitNorm);
  CHECK(centre_of_character(sigma).elements == std::vector<Elem>{0, 2});
  auto m = compute_metrics(sigma);
  CHECK(m.l2_norm_squared == 8);
  CHECK(m.support_class_indices == std::vector<int>{0, 1});
}

TEST_CASE("metrics on the nonlinear character of Aff(5)") {
  auto g = aff_group(5);
  auto t = character_table(g);
  const Character& pi = row_of_degree(t, 4);

  CHECK(lp_norm_pth_power(pi, Rational(1)).exact == Rational(8));
  CHECK(lp_norm_pth_power(pi, Rational(2)).exact == Rational(20));
  // single-factor value of the parametrized s-norm: (q-1)^s + (q-1)
  CHECK(lp_norm_pth_power(pi, Rational(3)).exact == Rational(68));
  CHECK(mcr(pi).exact == Rational(1, 4));
  CHECK(!is_absolutely_idempotent(pi));
  CHECK(!bai_equality(pi));
  CHECK(rider_classification(pi) == RiderClass::AboveGap);
  CHECK(centre_of_character(pi).order() == 1);
  // normalized idempotent norm d ||chi||_1 / |G| = 8/5
  CHECK(Rational(pi.degree()) * *lp_norm_pth_power(pi, Rational(1)).exact /
            Rational(g->order()) ==
        Rational(8, 5));
}

TEST_CASE("linear characters are absolutely idempotent with unit mcr") {
  auto g = FiniteGroup::cyclic(6);
  auto t = character_table(g);
  for (const auto& chi : t.irreducibles) {
    CHECK(lp_norm_pth_power(chi, Rational(1)).exact == Rational(6));
    CHECK(mcr(chi).exact == Rational(1));
    CHECK(is_absolutely_idempotent(chi));
    CHECK(rider_classification(chi) == RiderClass::UnitNorm);
    CHECK(centre_of_character(chi).order() == 6);
  }
}

TEST_CASE("trivial group conventions") {
  auto t = character_table(FiniteGroup::trivial());
  CHECK(mcr(t.irreducibles[0]).exact == Rational(0));
}

TEST_CASE("S3 has a character strictly above the gap") {
  auto g = FiniteGroup::symmetric(3);
  auto t = character_table(g);
  const Character& two = row_of_degree(t, 2);
  CHECK(lp_norm_pth_power(two, Rational(1)).exact == Rational(4));
  CHECK(mcr(two).exact == Rational(1, 2));
  CHECK(!is_absolutely_idempotent(two));
  CHECK(rider_classification(two) == RiderClass::AboveGap);
}

TEST_CASE("interval paths on the pentagon dihedral group") {
  auto g = FiniteGroup::dihedral(5);
  auto t = character_table(g);
  const Character& chi = row_of_degree(t, 2);
  // |chi| takes the irrational values 2cos(2pi/5), 2cos(4pi/5)
  ExactOrInterval l1 = lp_norm_pth_power(chi, Rational(1));
  CHECK(!l1.is_exact());
  // ||chi||_1 = 2 + 2(2cos36 + 2cos72)... known: 2 + 2*sqrt(5) - 2 = hmm;
  // verified independently: 2 + 2*(golden + 1/golden - ...) -- rely on the
  // certified bound instead: d ||chi||_1 > |G| strictly since chi is not
  // absolutely idempotent.
  CHECK(!is_absolutely_idempotent(chi));
  bool separated = false;
  for (int prec = 64; prec <= 1024; prec *= 2) {
    ExactOrInterval v = lp_norm_pth_power(chi, Rational(1), prec);
    if (v.bounds.lo() * 2 > 10) {
      separated = true;
      break;
    }
  }
  CHECK(separated);
  CHECK(rider_classification(chi) == RiderClass::AboveGap);
  ExactOrInterval m = mcr(chi);
  CHECK(!m.is_exact());
  // mcr = cos(pi/5) = 0.80901699...
  CHECK(m.bounds.lo() < Rational(80901700, 100000000));
  CHECK(m.bounds.hi() > Rational(80901699, 100000000));
  CHECK(lp_norm_pth_power(chi, Rational(2)).exact == Rational(10));
}

TEST_CASE("lemma: d||chi||_1 >= |G| with equality iff {0,d}-valued") {
  for (const auto& g :
       {FiniteGroup::dihedral(4), FiniteGroup::symmetric(3), FiniteGroup::quaternion8(),
        FiniteGroup::alternating(4), aff_group(4), FiniteGroup::heisenberg(3),
        FiniteGroup::cyclic(12), FiniteGroup::dihedral(5)}) {
    auto t = character_table(g);
    for (const auto& chi : t.irreducibles) {
      const Rational target(g->order());
      const Rational d(chi.degree());
      if (is_absolutely_idempotent(chi)) {
        ExactOrInterval l1 = lp_norm_pth_power(chi, Rational(1));
        REQUIRE(l1.is_exact());
        CHECK(*l1.exact * d == target);
        CHECK(bai_equality(chi));
      } else {
        bool above = false;
        for (int prec = 128; prec <= 1024 && !above; prec *= 2) {
          ExactOrInterval l1 = lp_norm_pth_power(chi, Rational(1), prec);
          above = l1.is_exact() ? *l1.exact * d > target : l1.bounds.lo() * d > target;
        }
        CHECK(above);
        CHECK(!bai_equality(chi));
      }
      CHECK(lp_norm_pth_power(chi, Rational(2)).exact == target);
      CHECK(rider_classification(chi) != RiderClass::GapViolation);
    }
  }
}

TEST_CASE("class-2 groups are AIC; AIC groups are nilpotent") {
  // nilpotency class <= 2 forces absolute idempotency of every character
  for (const auto& g : {FiniteGroup::dihedral(4), FiniteGroup::quaternion8(),
                        FiniteGroup::heisenberg(2), FiniteGroup::heisenberg(3),
                        FiniteGroup::cyclic(9), FiniteGroup::abelian({2, 2, 3})}) {
    auto nc = g->nilpotency_class();
    REQUIRE(nc.has_value());
    CHECK(*nc <= 2);
    CHECK(group_is_aic(g));
  }
  // catalogue AIC groups are nilpotent (contrapositive on non-nilpotent ones)
  for (const auto& g : {FiniteGroup::symmetric(3), FiniteGroup::symmetric(4),
                        FiniteGroup::alternating(4), FiniteGroup::alternating(5),
                        aff_group(3), aff_group(5)}) {
    CHECK(!g->nilpotency_class().has_value());
    CHECK(!group_is_aic(g));
  }
  // D8 (order 16) is nilpotent of class 3 and not AIC: the implication is
  // one-way only
  auto d8 = FiniteGroup::dihedral(8);
  CHECK(d8->nilpotency_class() == 3);
  CHECK(!group_is_aic(d8));
}

TEST_CASE("mcr of tensor products is the maximum") {
  auto d4 = FiniteGroup::dihedral(4);
  auto s3 = FiniteGroup::symmetric(3);
  auto prod = FiniteGroup::direct_product(d4, s3);
  auto td = character_table(d4);
  auto ts = character_table(s3);
  for (const auto& a : td.irreducibles) {
    for (const auto& b : ts.irreducibles) {
      Character tens = tensor_character(prod, a, b);
      ExactOrInterval lhs = mcr(tens);
      ExactOrInterval ra = mcr(a), rb = mcr(b);
      REQUIRE(lhs.is_exact());
      REQUIRE(ra.is_exact());
      REQUIRE(rb.is_exact());
      CHECK(*lhs.exact == std::max(*ra.exact, *rb.exact));
    }
  }
  // irrational x exact-1: the maximum is exactly 1, decided exactly
  auto d5 = FiniteGroup::dihedral(5);
  auto td5 = character_table(d5);
  auto c2 = FiniteGroup::cyclic(2);
  auto prod2 = FiniteGroup::direct_product(d5, c2);
  auto tc2 = character_table(c2);
  Character tens = tensor_character(prod2, row_of_degree(td5, 2), tc2.irreducibles[1]);
  CHECK(mcr(tens).exact == Rational(1));
}

TEST_CASE("centre of a character is normal and contains the centre") {
  for (const auto& g : {FiniteGroup::dihedral(4), FiniteGroup::quaternion8(),
                        FiniteGroup::heisenberg(3), aff_group(5)}) {
    auto t = character_table(g);
    for (const auto& chi : t.irreducibles) {
      Subgroup z = centre_of_character(chi);
      CHECK(z.is_normal);
      for (Elem x : g->center().elements) CHECK(z.contains(x));
    }
  }
}
