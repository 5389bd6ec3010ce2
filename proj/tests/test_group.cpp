#include <zl1/errors.hpp>
#include <zl1/group.hpp>
#include <zl1/group_io.hpp>

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>

using namespace zl1;

namespace {

std::multiset<long> class_sizes(const GroupPtr& g) {
  std::multiset<long> out;
  for (int k = 0; k < g->classes().count(); ++k) out.insert(g->classes().size(k));
  return out;
}

// Independent oracle: the centre by exhaustive commutation over the table.
std::vector<Elem> brute_center(const GroupPtr& g) {
  std::vector<Elem> out;
  for (Elem a = 0; a < g->order(); ++a) {
    bool ok = true;
    for (Elem b = 0; b < g->order() && ok; ++b) ok = g->mul(a, b) == g->mul(b, a);
    if (ok) out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("multiplication table validation") {
  CHECK(FiniteGroup::from_multiplication_table({{0}})->order() == 1);
  CHECK_THROWS_AS(FiniteGroup::from_multiplication_table({{0, 1}, {0, 1}}), NotAGroup);
  CHECK_THROWS_AS(FiniteGroup::from_multiplication_table({{0, 1}, {1, 2}}), NotAGroup);
  CHECK_THROWS_AS(FiniteGroup::from_multiplication_table({}), NotAGroup);
  // identity relabeling: C2 with identity at index 1
  auto g = FiniteGroup::from_multiplication_table({{1, 0}, {0, 1}});
  CHECK(g->order() == 2);
  CHECK(g->mul(0, 0) == 0);
  CHECK(g->mul(1, 1) == 0);
  // a valid nonabelian table: S3 via its regular structure is covered below
  CHECK_THROWS_AS(
      FiniteGroup::from_multiplication_table({{0, 1}, {1, 0}}, "", /*order_bound=*/1),
      OrderBound);
}

TEST_CASE("dihedral group of the square") {
  auto d4 = FiniteGroup::dihedral(4);
  CHECK(d4->order() == 8);
  CHECK(class_sizes(d4) == std::multiset<long>{1, 1, 2, 2, 2});
  CHECK(d4->center().elements == std::vector<Elem>{0, 2});
  CHECK(d4->derived_subgroup().elements == std::vector<Elem>{0, 2});
  CHECK(d4->derived_subgroup().is_normal);
  CHECK(d4->nilpotency_class() == 2);
  CHECK(d4->exponent() == 4);
  CHECK(!d4->is_abelian());
  CHECK(brute_center(d4) == d4->center().elements);
}

TEST_CASE("symmetric group from permutation generators") {
  auto s3 = FiniteGroup::from_permutation_generators(3, {{1, 2, 0}, {1, 0, 2}});
  CHECK(s3->order() == 6);
  CHECK(class_sizes(s3) == std::multiset<long>{1, 2, 3});
  CHECK(s3->center().order() == 1);
  CHECK(!s3->nilpotency_class().has_value());
  CHECK(brute_center(s3) == s3->center().elements);
  CHECK(s3->derived_subgroup().order() == 3);
  CHECK(s3->exponent() == 6);
}

TEST_CASE("dihedral fingerprint from permutation generators") {
  auto g = FiniteGroup::from_permutation_generators(4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
  CHECK(g->order() == 8);
  CHECK(class_sizes(g) == class_sizes(FiniteGroup::dihedral(4)));
  CHECK(g->nilpotency_class() == 2);
}

TEST_CASE("trivial and bounded closures") {
  CHECK(FiniteGroup::from_permutation_generators(1, {})->order() == 1);
  // S4 has order 24; a bound of 10 must trip
  CHECK_THROWS_AS(FiniteGroup::from_permutation_generators(
                      4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, "", /*order_bound=*/10),
                  OrderBound);
  CHECK_THROWS_AS(FiniteGroup::from_permutation_generators(2, {{0, 0}}), Error);
}

TEST_CASE("affine group of F5 from generators") {
  // x -> x+1 and x -> 2x generate Aff(5) on 5 points
  auto aff5 = FiniteGroup::from_permutation_generators(5, {{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}});
  CHECK(aff5->order() == 20);
  CHECK(class_sizes(aff5) == std::multiset<long>{1, 4, 5, 5, 5});
  CHECK(aff5->derived_subgroup().order() == 5);
  CHECK(!aff5->nilpotency_class().has_value());
}

TEST_CASE("direct products") {
  auto d4 = FiniteGroup::dihedral(4);
  auto s3 = FiniteGroup::symmetric(3);
  auto triv = FiniteGroup::trivial();
  auto p = FiniteGroup::direct_product(triv, s3);
  CHECK(p->order() == 6);
  CHECK(p->classes().count() == 3);

  auto ds = FiniteGroup::direct_product(d4, s3);
  CHECK(ds->order() == 48);
  CHECK(ds->classes().count() == 15);
  CHECK(ds->product_structure().has_value());

  auto c2c2 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  CHECK(c2c2->classes().count() == 4);
  CHECK(c2c2->is_abelian());

  CHECK_THROWS_AS(FiniteGroup::direct_product(d4, s3, /*order_bound=*/40), OrderBound);

  // der(GxH) = der(G) x der(H) and Z(GxH) = Z(G) x Z(H)
  const auto& derp = ds->derived_subgroup();
  CHECK(derp.order() == d4->derived_subgroup().order() * s3->derived_subgroup().order());
  for (Elem a : d4->derived_subgroup().elements) {
    for (Elem b : s3->derived_subgroup().elements) {
      CHECK(derp.contains(ds->pair_index(a, b)));
    }
  }
  const auto& zp = ds->center();
  CHECK(zp.order() == d4->center().order() * s3->center().order());
  for (Elem a : d4->center().elements) {
    for (Elem b : s3->center().elements) CHECK(zp.contains(ds->pair_index(a, b)));
  }
}

TEST_CASE("nilpotency of products") {
  auto d4 = FiniteGroup::dihedral(4);
  auto q8 = FiniteGroup::quaternion8();
  CHECK(FiniteGroup::direct_product(d4, FiniteGroup::cyclic(2))->nilpotency_class() == 2);
  CHECK(FiniteGroup::direct_product(d4, q8)->nilpotency_class() == 2);
  CHECK(!FiniteGroup::direct_product(d4, FiniteGroup::symmetric(3))->nilpotency_class());
}

TEST_CASE("named factories") {
  CHECK(FiniteGroup::cyclic(6)->is_abelian());
  CHECK(FiniteGroup::cyclic(6)->classes().count() == 6);
  CHECK(FiniteGroup::abelian({2, 4})->order() == 8);
  CHECK(FiniteGroup::abelian({2, 4})->exponent() == 4);
  CHECK(FiniteGroup::alternating(4)->order() == 12);
  CHECK(FiniteGroup::alternating(5)->order() == 60);
  CHECK(FiniteGroup::symmetric(4)->order() == 24);

  auto q8 = FiniteGroup::quaternion8();
  CHECK(q8->order() == 8);
  CHECK(class_sizes(q8) == std::multiset<long>{1, 1, 2, 2, 2});
  int order4 = 0;
  for (Elem x = 0; x < 8; ++x) order4 += q8->element_order(x) == 4;
  CHECK(order4 == 6);  // distinguishes Q8 from D4

  auto h3 = FiniteGroup::heisenberg(3);
  CHECK(h3->order() == 27);
  CHECK(h3->nilpotency_class() == 2);
  CHECK(h3->center().order() == 3);
  CHECK(h3->classes().count() == 11);  // p^2 + p - 1
}

TEST_CASE("group axioms hold on factories") {
  for (const auto& g : {FiniteGroup::dihedral(5), FiniteGroup::symmetric(4),
                        FiniteGroup::heisenberg(2), FiniteGroup::abelian({3, 9})}) {
    long sum = 0;
    for (int k = 0; k < g->classes().count(); ++k) sum += g->classes().size(k);
    CHECK(sum == g->order());  // class equation
    for (Elem x = 0; x < g->order(); ++x) {
      CHECK(g->mul(x, g->inv(x)) == 0);
      CHECK(g->mul(0, x) == x);
    }
    // centre = union of singleton classes
    std::vector<Elem> singles;
    for (int k = 0; k < g->classes().count(); ++k) {
      if (g->classes().size(k) == 1) singles.push_back(g->classes().representatives[k]);
    }
    std::sort(singles.begin(), singles.end());
    CHECK(singles == g->center().elements);
  }
}

TEST_CASE("quotients") {
  auto d4 = FiniteGroup::dihedral(4);
  auto [q, proj] = d4->quotient(d4->derived_subgroup());
  CHECK(q->order() == 4);
  CHECK(q->is_abelian());
  CHECK(proj[0] == 0);
  auto s3 = FiniteGroup::symmetric(3);
  auto [q2, proj2] = s3->quotient(s3->derived_subgroup());
  CHECK(q2->order() == 2);
}

TEST_CASE("table and permutation file formats") {
  auto d4 = FiniteGroup::dihedral(4);
  std::ostringstream os;
  write_multiplication_table(os, *d4);
  std::istringstream is(os.str());
  auto back = read_multiplication_table(is, "d4-roundtrip");
  CHECK(back->order() == 8);
  CHECK(class_sizes(back) == class_sizes(d4));

  std::istringstream perm("3\n1 2 0\n1 0 2\n");
  auto s3 = read_permutation_generators(perm);
  CHECK(s3->order() == 6);

  std::istringstream bad("2\n0 1\n0 1\n");
  CHECK_THROWS_AS(read_multiplication_table(bad), NotAGroup);
  std::istringstream truncated("3\n0 1 2\n");
  CHECK_THROWS_AS(read_multiplication_table(truncated), ParseError);
}

TEST_CASE("cached invariants are safe under concurrent first access") {
  auto g = FiniteGroup::direct_product(FiniteGroup::dihedral(4), FiniteGroup::symmetric(3));
  std::vector<std::thread> workers;
  std::vector<int> class_counts(8, 0);
  std::vector<int> centre_orders(8, 0);
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&, t] {
      class_counts[t] = g->classes().count();
      centre_orders[t] = g->center().order();
      (void)g->class_constants();
      (void)g->derived_subgroup();
    });
  }
  for (auto& w : workers) w.join();
  for (int t = 0; t < 8; ++t) {
    CHECK(class_counts[t] == 15);
    CHECK(centre_orders[t] == 2);
  }
}

namespace {

// Independent nilpotency oracle via the lower central series.
std::optional<int> lower_central_class(const GroupPtr& g) {
  std::vector<Elem> gamma(g->order());
  for (Elem x = 0; x < g->order(); ++x) gamma[x] = x;
  int step = 0;
  while (true) {
    if (static_cast<int>(gamma.size()) == 1) return step;
    std::vector<char> seen(g->order(), 0);
    std::vector<Elem> comms;
    for (Elem x : gamma) {
      for (Elem y = 0; y < g->order(); ++y) {
        Elem c = g->commutator(x, y);
        if (!seen[c]) {
          seen[c] = 1;
          comms.push_back(c);
        }
      }
    }
    Subgroup next = g->subgroup_closure(comms);
    if (next.elements.size() == gamma.size()) return std::nullopt;  // stalled
    gamma = next.elements;
    ++step;
  }
}

}  // namespace

TEST_CASE("upper and lower central series agree on the nilpotency class") {
  for (const auto& g :
       {FiniteGroup::trivial(), FiniteGroup::cyclic(6), FiniteGroup::dihedral(4),
        FiniteGroup::quaternion8(), FiniteGroup::heisenberg(3), FiniteGroup::dihedral(8),
        FiniteGroup::symmetric(3), FiniteGroup::symmetric(4), FiniteGroup::alternating(4),
        FiniteGroup::abelian({2, 4})}) {
    CAPTURE(g->name());
    CHECK(g->nilpotency_class() == lower_central_class(g));
  }
}
