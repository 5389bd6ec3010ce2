#include <zl1/atoms.hpp>
#include <zl1/character.hpp>
#include <zl1/errors.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace zl1;

namespace {

Cyclotomic zeta(long n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

std::multiset<long> degrees(const CharacterTable& t) {
  std::multiset<long> out;
  for (const auto& chi : t.irreducibles) out.insert(chi.degree());
  return out;
}

}  // namespace

TEST_CASE("cyclic groups") {
  auto t1 = character_table(FiniteGroup::trivial());
  CHECK(t1.count() == 1);
  CHECK(t1.irreducibles[0].values[0] == Cyclotomic(1));

  auto t3 = character_table(FiniteGroup::cyclic(3));
  CHECK(degrees(t3) == std::multiset<long>{1, 1, 1});
  // rows are the three duals: (1,1,1), (1, z3, z3^2), (1, z3^2, z3)
  std::set<std::string> rows;
  for (const auto& chi : t3.irreducibles) {
    std::string row;
    for (const auto& v : chi.values) row += v.str() + ";";
    rows.insert(row);
  }
  CHECK(rows.count("1;1;1;") == 1);
  CHECK(rows.count("1;z(3)^1;z(3)^2;") == 1);
  CHECK(rows.count("1;z(3)^2;z(3)^1;") == 1);
}

TEST_CASE("dihedral group of order 8") {
  auto g = FiniteGroup::dihedral(4);
  auto t = character_table(g);
  CHECK(degrees(t) == std::multiset<long>{1, 1, 1, 1, 2});
  const auto& cc = g->classes();
  const Character& sigma = t.irreducibles.back();
  CHECK(sigma.degree() == 2);
  // values 2 at e, -2 on the central class {r^2}, 0 elsewhere
  for (int k = 0; k < cc.count(); ++k) {
    if (k == 0) {
      CHECK(sigma.values[k] == Cyclotomic(2));
    } else if (cc.size(k) == 1) {
      CHECK(sigma.values[k] == Cyclotomic(-2));
    } else {
      CHECK(sigma.values[k].is_zero());
    }
  }
}

TEST_CASE("symmetric group S3") {
  auto g = FiniteGroup::symmetric(3);
  auto t = character_table(g);
  CHECK(degrees(t) == std::multiset<long>{1, 1, 2});
  const Character& two = t.irreducibles.back();
  const auto& cc = g->classes();
  for (int k = 1; k < cc.count(); ++k) {
    if (cc.size(k) == 2) CHECK(two.values[k] == Cyclotomic(-1));  // 3-cycles
    if (cc.size(k) == 3) CHECK(two.values[k].is_zero());          // transpositions
  }
}

TEST_CASE("quaternion group") {
  auto t = character_table(FiniteGroup::quaternion8());
  CHECK(degrees(t) == std::multiset<long>{1, 1, 1, 1, 2});
  const Character& two = t.irreducibles.back();
  std::multiset<std::string> vals;
  for (const auto& v : two.values) vals.insert(v.str());
  CHECK(vals == std::multiset<std::string>{"2", "-2", "0", "0", "0"});
}

TEST_CASE("affine groups match the known pattern") {
  for (long q : {3L, 5L, 7L}) {
    auto g = aff_group(q);
    auto t = character_table(g);
    long linear = 0;
    const Character* big = nullptr;
    for (const auto& chi : t.irreducibles) {
      if (chi.degree() == 1) ++linear;
      if (chi.degree() == q - 1) big = &chi;
    }
    CHECK(linear == q - 1);
    REQUIRE(big != nullptr);
    const auto& cc = g->classes();
    for (int k = 1; k < cc.count(); ++k) {
      if (cc.size(k) == q - 1) {
        CHECK(big->values[k] == Cyclotomic(-1));
      } else {
        CHECK(big->values[k].is_zero());
      }
    }
  }
}

TEST_CASE("alternating group A5 has the golden-ratio rows") {
  auto t = character_table(FiniteGroup::alternating(5));
  CHECK(degrees(t) == std::multiset<long>{1, 3, 3, 4, 5});
  Cyclotomic golden_plus = -(zeta(5, 2) + zeta(5, 3));   // (1+sqrt5)/2
  Cyclotomic golden_minus = -(zeta(5, 1) + zeta(5, 4));  // (1-sqrt5)/2
  int hits_plus = 0, hits_minus = 0;
  for (const auto& chi : t.irreducibles) {
    if (chi.degree() != 3) continue;
    for (const auto& v : chi.values) {
      hits_plus += v == golden_plus;
      hits_minus += v == golden_minus;
    }
  }
  CHECK(hits_plus == 2);
  CHECK(hits_minus == 2);
}

TEST_CASE("heisenberg group mod 3") {
  auto t = character_table(FiniteGroup::heisenberg(3));
  std::multiset<long> expect;
  for (int i = 0; i < 9; ++i) expect.insert(1);
  expect.insert(3);
  expect.insert(3);
  CHECK(degrees(t) == expect);
}

TEST_CASE("linear characters lift from the abelianization") {
  auto d4 = FiniteGroup::dihedral(4);
  auto lins = linear_characters(d4);
  CHECK(lins.size() == 4);
  auto t = character_table(d4);
  for (const auto& lin : lins) {
    bool found = false;
    for (const auto& chi : t.irreducibles) found |= chi.values == lin.values;
    CHECK(found);
  }
  CHECK(linear_characters(aff_group(7)).size() == 6);
  CHECK(linear_characters(FiniteGroup::cyclic(6)).size() == 6);
  CHECK(linear_characters(FiniteGroup::symmetric(4)).size() == 2);
}

TEST_CASE("table determinism") {
  auto a = character_table(FiniteGroup::dihedral(4));
  auto b = character_table(FiniteGroup::dihedral(4));
  REQUIRE(a.count() == b.count());
  for (int i = 0; i < a.count(); ++i) {
    CHECK(a.irreducibles[i].values == b.irreducibles[i].values);
    CHECK(a.irreducibles[i].label == b.irreducibles[i].label);
  }
}

TEST_CASE("validation catches corrupted tables") {
  auto t = character_table(FiniteGroup::symmetric(3));
  CharacterTable broken = t;
  std::swap(broken.irreducibles[0].values[1], broken.irreducibles[0].values[2]);
  CHECK_THROWS_AS(validate_table(broken), InternalInconsistency);
  CharacterTable missing = t;
  missing.irreducibles.pop_back();
  CHECK_THROWS_AS(validate_table(missing), InternalInconsistency);
}

TEST_CASE("order bound") {
  CHECK_THROWS_AS(character_table(FiniteGroup::symmetric(4), /*order_bound=*/10), OrderBound);
}

TEST_CASE("inner products and tensor characters") {
  auto d4 = FiniteGroup::dihedral(4);
  auto s3 = FiniteGroup::symmetric(3);
  auto td = character_table(d4);
  auto ts = character_table(s3);
  for (const auto& chi : td.irreducibles) {
    for (const auto& psi : td.irreducibles) {
      Cyclotomic ip = inner_product(chi, psi);
      CHECK(ip == Cyclotomic(chi.values == psi.values ? 1 : 0));
    }
  }
  auto prod = FiniteGroup::direct_product(d4, s3);
  auto tensor = tensor_character(prod, td.irreducibles.back(), ts.irreducibles.back());
  CHECK(tensor.degree() == 4);
  CHECK(inner_product(tensor, tensor) == Cyclotomic(1));
  // the tensor character appears in the product's table
  auto tp = character_table(prod);
  bool found = false;
  for (const auto& chi : tp.irreducibles) found |= chi.values == tensor.values;
  CHECK(found);
}
