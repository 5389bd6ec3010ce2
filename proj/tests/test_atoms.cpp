#include <zl1/atoms.hpp>
#include <zl1/errors.hpp>
#include <zl1/gf.hpp>
#include <zl1/metrics.hpp>

#include <doctest.h>

using namespace zl1;

namespace {

// Cross-validation contract: every closed-form field of a materializable
// atom agrees exactly with the metrics computed on the explicit group.
void cross_validate(const FamilyAtom& atom, int bound = kCharacterTableOrderBound) {
  CAPTURE(atom.syntax());
  auto [g, chi] = atom.materialize(bound);
  CHECK(Integer(g->order()) == atom.group_order());
  CHECK(Integer(chi.degree()) == atom.degree());
  CHECK(g->is_abelian() == atom.group_is_abelian());
  CHECK(is_absolutely_idempotent(chi) == atom.char_is_aic());
  CHECK(group_is_aic(g) == atom.group_is_aic());
  ExactOrInterval m = mcr(chi);
  REQUIRE(m.is_exact());
  CHECK(*m.exact == atom.mcr());
  for (long s : {1L, 2L, 3L, 4L}) {
    ExactOrInterval closed = atom.lp_term(Rational(s));
    ExactOrInterval computed =
        lp_norm_pth_power(chi, Rational(s)) *
        ExactOrInterval::from_exact(qpow(Rational(chi.degree()), -s));
    REQUIRE(closed.is_exact());
    REQUIRE(computed.is_exact());
    CHECK(*closed.exact == *computed.exact);
  }
}

}  // namespace

TEST_CASE("galois fields") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16}) {
    GaloisField F(q);
    CHECK(F.q() == q);
    for (int a = 0; a < q; ++a) {
      CHECK(F.add(a, F.neg(a)) == 0);
      CHECK(F.mul(a, 1) == a);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(F.mul(a, b) == F.mul(b, a));
        for (int c = 0; c < std::min(q, 5); ++c) {
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
  CHECK_THROWS_AS(GaloisField(6), NotPrimePower);
  CHECK_THROWS_AS(GaloisField(12), NotPrimePower);
}

TEST_CASE("affine atoms") {
  FamilyAtom a5 = FamilyAtom::aff_nonlinear(5);
  CHECK(a5.group_order() == 20);
  CHECK(a5.degree() == 4);
  CHECK(a5.mcr() == Rational(1, 4));
  CHECK(!a5.char_is_aic());
  CHECK(a5.lp_term(Rational(1)).exact == Rational(2));  // 1 + 1
  CHECK(a5.lp_term(Rational(2)).exact == Rational(5, 4));

  FamilyAtom a3 = FamilyAtom::aff_nonlinear(3);
  CHECK(a3.lp_term(Rational(2)).exact == Rational(3, 2));  // |G| / d^2 = 6/4

  CHECK_THROWS_AS(FamilyAtom::aff_nonlinear(2), NotPrimePower);
  CHECK_THROWS_AS(FamilyAtom::aff_nonlinear(6), NotPrimePower);

  FamilyAtom lin = FamilyAtom::aff_linear(5, 2);
  CHECK(lin.degree() == 1);
  CHECK(lin.mcr() == 1);
  CHECK(lin.char_is_aic());
  CHECK(lin.lp_term(Rational(3)).exact == Rational(20));
  CHECK_THROWS_AS(FamilyAtom::aff_linear(5, 4), Error);
}

TEST_CASE("steinberg atoms") {
  FamilyAtom st = FamilyAtom::steinberg(2);
  CHECK(st.group_order() == 60);
  CHECK(st.degree() == 4);
  CHECK(st.mcr() == Rational(1, 4));
  CHECK(st.lp_term(Rational(1)).exact == Rational(12));
  CHECK(st.lp_term(Rational(2)).exact == Rational(15, 4));  // 60/16
  CHECK(st.lp_term(Rational(3)).exact == Rational(27, 16));  // 108/64
  CHECK(st.lp_term(Rational(4)).exact == Rational(75, 64));  // 300/256
  CHECK_THROWS_AS(FamilyAtom::steinberg(1), Error);
  // large indices stay exact through big integers
  FamilyAtom big = FamilyAtom::steinberg(80);
  CHECK(big.degree() == ipow(Integer(2), 80));
  CHECK(big.lp_term(Rational(4)).is_exact());
}

TEST_CASE("stegmeir atoms follow the tensor-power closed form") {
  FamilyAtom s3 = FamilyAtom::stegmeir(3);
  CHECK(s3.group_order() == 36);
  CHECK(s3.degree() == 4);
  CHECK(s3.mcr() == Rational(1, 2));
  CHECK(s3.lp_term(Rational(1)).exact == Rational(4));       // (1+1)^2
  CHECK(s3.lp_term(Rational(2)).exact == Rational(9, 4));    // (3/2)^2
  FamilyAtom s5 = FamilyAtom::stegmeir(5);
  CHECK(s5.lp_term(Rational(2)).exact == qpow(Rational(5, 4), 4));
  CHECK_THROWS_AS(FamilyAtom::stegmeir(2), NotPrime);
  CHECK_THROWS_AS(FamilyAtom::stegmeir(9), NotPrime);
}

TEST_CASE("dihedral atoms") {
  FamilyAtom d4 = FamilyAtom::dihedral_two_dim(4, 1);
  CHECK(d4.mcr() == 1);
  CHECK(d4.char_is_aic());
  CHECK(d4.group_is_aic());
  CHECK(d4.lp_term(Rational(1)).exact == Rational(2));
  CHECK(d4.lp_term(Rational(2)).exact == Rational(2));  // 8 / 4

  FamilyAtom d3 = FamilyAtom::dihedral_two_dim(3, 1);
  CHECK(d3.mcr() == Rational(1, 2));
  CHECK(!d3.char_is_aic());
  CHECK(d3.lp_term(Rational(2)).exact == Rational(3, 2));  // 6/4

  FamilyAtom d6 = FamilyAtom::dihedral_two_dim(6, 1);
  CHECK(d6.mcr() == 1);
  CHECK(!d6.char_is_aic());
  CHECK(!d6.group_is_aic());

  // m/gcd(k,m) = 3 is fine even for even m
  FamilyAtom d12 = FamilyAtom::dihedral_two_dim(12, 4);
  CHECK(d12.mcr() == Rational(1, 2));

  CHECK_THROWS_AS(FamilyAtom::dihedral_two_dim(5, 1), Error);   // irrational mcr
  CHECK_THROWS_AS(FamilyAtom::dihedral_two_dim(10, 2), Error);  // reduces to 5
  CHECK_THROWS_AS(FamilyAtom::dihedral_two_dim(4, 2), Error);   // not irreducible
}

TEST_CASE("heisenberg atoms") {
  for (long p : {2L, 3L, 5L}) {
    FamilyAtom lin = FamilyAtom::heisenberg_char(p, 1 % (p * p));
    CHECK(lin.degree() == 1);
    CHECK(lin.lp_term(Rational(3)).exact == Rational(ipow(Integer(p), 3)));
    FamilyAtom non = FamilyAtom::heisenberg_char(p, p * p);
    CHECK(non.degree() == p);
    CHECK(non.mcr() == 1);
    CHECK(non.char_is_aic());
    for (long s : {1L, 2L, 4L}) CHECK(non.lp_term(Rational(s)).exact == Rational(p));
  }
  CHECK_THROWS_AS(FamilyAtom::heisenberg_char(4, 0), NotPrime);
}

TEST_CASE("abelian and tensor atoms") {
  FamilyAtom triv = FamilyAtom::abelian_linear({1}, {0});
  CHECK(triv.mcr() == 0);
  FamilyAtom ab = FamilyAtom::abelian_linear({2, 4}, {1, 3});
  CHECK(ab.group_order() == 8);
  CHECK(ab.mcr() == 1);
  CHECK(ab.lp_term(Rational(7, 2)).exact == Rational(8));

  FamilyAtom t = FamilyAtom::tensor_power(FamilyAtom::aff_nonlinear(5), 3);
  CHECK(t.group_order() == ipow(Integer(20), 3));
  CHECK(t.degree() == 64);
  CHECK(t.mcr() == Rational(1, 4));
  CHECK(t.lp_term(Rational(2)).exact == qpow(Rational(5, 4), 3));
}

TEST_CASE("lp terms are at least 1 and nonincreasing in s") {
  std::vector<FamilyAtom> atoms = {
      FamilyAtom::aff_nonlinear(5),      FamilyAtom::steinberg(2),
      FamilyAtom::stegmeir(3),           FamilyAtom::dihedral_two_dim(4, 1),
      FamilyAtom::heisenberg_char(3, 9), FamilyAtom::abelian_linear({6}, {1})};
  const Rational nearly_one(999, 1000);
  for (const auto& a : atoms) {
    CAPTURE(a.syntax());
    for (const Rational& s : {Rational(1), Rational(3, 2), Rational(2), Rational(7, 2)}) {
      ExactOrInterval t = a.lp_term(s);
      if (t.is_exact()) {
        CHECK(*t.exact >= 1);
      } else {
        CHECK(t.bounds.hi() >= 1);
        CHECK(t.bounds.lo() >= nearly_one);
      }
    }
    for (long s = 1; s < 4; ++s) {
      ExactOrInterval hi = a.lp_term(Rational(s));
      ExactOrInterval lo = a.lp_term(Rational(s + 1));
      REQUIRE(hi.is_exact());
      REQUIRE(lo.is_exact());
      CHECK(*hi.exact >= *lo.exact);
    }
  }
  // surd-valued dihedral atoms are exact at even exponents only
  FamilyAtom d8 = FamilyAtom::dihedral_two_dim(8, 1);
  CHECK(d8.lp_term(Rational(2)).exact == Rational(4));   // 16 / 4
  CHECK(d8.lp_term(Rational(4)).exact == Rational(3));  // 48 / 16
  ExactOrInterval odd = d8.lp_term(Rational(1));
  CHECK(!odd.is_exact());
  CHECK(odd.bounds.lo() >= Rational(999, 1000));
  CHECK(d8.lp_term(Rational(2)).exact >= d8.lp_term(Rational(4)).exact);
}

TEST_CASE("materialization cross-validates every closed form") {
  for (long q : {3L, 4L, 5L, 7L, 8L, 9L}) cross_validate(FamilyAtom::aff_nonlinear(q));
  cross_validate(FamilyAtom::aff_linear(5, 2));
  cross_validate(FamilyAtom::steinberg(2));
  cross_validate(FamilyAtom::stegmeir(3));
  cross_validate(FamilyAtom::dihedral_two_dim(4, 1));
  cross_validate(FamilyAtom::dihedral_two_dim(3, 1));
  cross_validate(FamilyAtom::dihedral_two_dim(6, 1));
  cross_validate(FamilyAtom::heisenberg_char(2, 4));
  cross_validate(FamilyAtom::heisenberg_char(3, 2));
  cross_validate(FamilyAtom::heisenberg_char(3, 9));
  cross_validate(FamilyAtom::heisenberg_char(5, 26));
  cross_validate(FamilyAtom::abelian_linear({2, 4}, {1, 3}));
  cross_validate(FamilyAtom::tensor_power(FamilyAtom::aff_nonlinear(3), 2));
}

TEST_CASE("materialization respects the order bound") {
  CHECK_THROWS_AS(FamilyAtom::stegmeir(5).materialize(), OrderBound);  // order 160000
  CHECK_THROWS_AS(FamilyAtom::steinberg(4).materialize(), OrderBound);  // order 4080
}

TEST_CASE("sl2 groups") {
  CHECK(sl2_group(2)->order() == 6);
  CHECK(sl2_group(3)->order() == 24);
  auto sl24 = sl2_group(4);
  CHECK(sl24->order() == 60);
  // simple group: trivial centre, no proper normal closure
  CHECK(sl24->center().order() == 1);
  CHECK(sl24->classes().count() == 5);
}

TEST_CASE("atom expression parsing") {
  for (const char* expr :
       {"aff(5).nonlinear", "aff(9).linear[3]", "sl2(2^3).steinberg", "sl2(8).steinberg",
        "stegmeir(7)", "heis(3).char[10]", "dihedral(6).char[1]",
        "abelian(2 x 4 x 3).char[1,2,0]", "tensor(aff(3).nonlinear, 4)"}) {
    FamilyAtom a = parse_atom(expr);
    FamilyAtom b = parse_atom(a.syntax());
    CHECK(a.syntax() == b.syntax());
    CHECK(a.group_order() == b.group_order());
    CHECK(a.lp_term(Rational(2)).exact == b.lp_term(Rational(2)).exact);
  }
  CHECK_THROWS_AS(parse_atom("aff(5)"), ParseError);
  CHECK_THROWS_AS(parse_atom("sl2(6).steinberg"), ParseError);
  CHECK_THROWS_AS(parse_atom("aff(5).nonlinear trailing"), ParseError);
  CHECK_THROWS_AS(parse_atom("nope(3)"), ParseError);
}
