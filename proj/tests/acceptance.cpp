// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion states its tolerance inline; everything is exact
// arithmetic unless a certified interval is explicitly involved.

#include <zl1/atoms.hpp>
#include <zl1/catalogue.hpp>
#include <zl1/central.hpp>
#include <zl1/family.hpp>
#include <zl1/metrics.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace zl1;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    body();
  } catch (const std::exception& e) {
    failure = e.what();
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool pass = failure.empty();
  if (pass && budget_seconds > 0 && elapsed > budget_seconds) {
    pass = false;
    failure = "time budget exceeded";
  }
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << "  ["
       << elapsed << "s";
  if (budget_seconds > 0) line << " / " << budget_seconds << "s";
  line << "]";
  if (!pass) line << "  -- " << failure;
  std::cout << line.str() << std::endl;
  if (!pass) ++g_failures;
}

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw CheckFailure(what);
}

const Character& row_of_degree(const CharacterTable& t, long d) {
  for (const auto& chi : t.irreducibles) {
    if (chi.degree() == d) return chi;
  }
  throw CheckFailure("no row of degree " + std::to_string(d));
}

Rational exact_lp_term(const Character& chi, long s) {
  ExactOrInterval norm = lp_norm_pth_power(chi, Rational(s));
  require(norm.is_exact(), "norm not exact");
  return *norm.exact / qpow(Rational(chi.degree()), s);
}

}  // namespace

int main() {
  std::vector<CatalogueEntry> catalogue;      // shared by criteria 4-6 and 10
  std::vector<std::vector<CheckResult>> sweep_results;

  criterion(1, "dihedral-of-order-8 character table, exact", 1.0, [] {
    auto g = FiniteGroup::dihedral(4);
    auto t = character_table(g);
    std::multiset<long> degs;
    for (const auto& chi : t.irreducibles) degs.insert(chi.degree());
    require(degs == std::multiset<long>{1, 1, 1, 1, 2}, "degrees are not {1,1,1,1,2}");
    const Character& sigma = row_of_degree(t, 2);
    const auto& cc = g->classes();
    // up to row/column permutation: (class size, value) multiset
    std::multiset<std::pair<long, std::string>> cells;
    for (int k = 0; k < cc.count(); ++k) cells.insert({cc.size(k), sigma.values[k].str()});
    std::multiset<std::pair<long, std::string>> expect{
        {1, "2"}, {1, "-2"}, {2, "0"}, {2, "0"}, {2, "0"}};
    require(cells == expect, "degree-2 row is not (2, -2, 0, 0, 0)");
    require(sigma.values[0] == Cyclotomic(2), "identity value is not the degree");
  });

  criterion(2, "affine tables for q in {3,4,5,7,8,9}, exact", 10.0, [] {
    for (long q : {3L, 4L, 5L, 7L, 8L, 9L}) {
      auto g = aff_group(q);
      auto t = character_table(g);
      long linear = 0, big = 0;
      for (const auto& chi : t.irreducibles) {
        if (chi.degree() == 1) ++linear;
        if (chi.degree() == q - 1 && chi.degree() > 1) ++big;
      }
      require(linear == q - 1, "wrong number of linear characters");
      require(big == 1, "expected exactly one character of degree q-1");
      const Character& pi = row_of_degree(t, q - 1);
      const auto& cc = g->classes();
      for (int k = 1; k < cc.count(); ++k) {
        if (cc.size(k) == q - 1) {
          require(pi.values[k] == Cyclotomic(-1), "value on the small class is not -1");
        } else {
          require(pi.values[k].is_zero(), "off-identity value is not 0");
        }
      }
      ExactOrInterval m = mcr(pi);
      require(m.is_exact() && *m.exact == Rational(1, static_cast<unsigned long>(q - 1)),
              "mcr is not 1/(q-1)");
    }
  });

  criterion(3, "Steinberg characters of SL(2,4) and SL(2,8)", 60.0, [] {
    for (int n : {2, 3}) {
      FamilyAtom atom = FamilyAtom::steinberg(n);
      auto [g, st] = atom.materialize();
      const long q = 1L << n;
      require(g->order() == q * (q * q - 1), "wrong group order");
      require(st.degree() == q, "wrong Steinberg degree");
      ExactOrInterval m = mcr(st);
      require(m.is_exact() && *m.exact == Rational(1, static_cast<unsigned long>(q)),
              "mcr(St_q) != 1/q");
      require(*m.exact == atom.mcr(), "atom mcr mismatch");
      for (long s : {1L, 2L, 3L, 4L}) {
        ExactOrInterval closed = atom.lp_term(Rational(s));
        require(closed.is_exact(), "closed form not exact");
        require(*closed.exact == exact_lp_term(st, s),
                "lp closed form mismatch at s = " + std::to_string(s));
      }
    }
  });

  criterion(4, "orthogonality and the l1 lower bound over the catalogue", 0, [&] {
    catalogue = builtin_catalogue(63, 500);
    sweep_results.clear();
    long violations = 0;
    for (const auto& entry : catalogue) {
      sweep_results.push_back(sweep_group(entry.group));
      for (const auto& r : sweep_results.back()) {
        if (r.check == "orthogonality" || r.check == "l2-norm-is-order" ||
            r.check == "l1-lower-bound" || r.check == "class-equation" ||
            r.check == "linear-count") {
          if (!r.pass) {
            ++violations;
            std::cerr << "  violation: " << entry.name << " " << r.check << " " << r.detail
                      << "\n";
          }
        }
      }
    }
    require(violations == 0, std::to_string(violations) + " violations");
    require(catalogue.size() >= 120, "catalogue unexpectedly small");
  });

  criterion(5, "Rider gap: unit norm or certified >= 301/300, zero violations", 0, [&] {
    long violations = 0;
    for (size_t i = 0; i < catalogue.size(); ++i) {
      for (const auto& r : sweep_results[i]) {
        if (r.check == "rider-gap" && !r.pass) ++violations;
      }
    }
    require(violations == 0, std::to_string(violations) + " rider violations");
  });

  criterion(6, "AIC vs nilpotency across the catalogue", 0, [&] {
    for (size_t i = 0; i < catalogue.size(); ++i) {
      for (const auto& r : sweep_results[i]) {
        if ((r.check == "class2-implies-aic" || r.check == "aic-implies-nilpotent") &&
            !r.pass) {
          throw CheckFailure(catalogue[i].name + " fails " + r.check);
        }
      }
    }
    require(group_is_aic(FiniteGroup::dihedral(4)), "D4 must be AIC");
    require(!group_is_aic(FiniteGroup::symmetric(3)), "S3 must not be AIC");
    for (long q : {3L, 4L, 5L, 7L, 8L, 9L}) {
      require(!group_is_aic(aff_group(q)), "Aff(q) must not be AIC");
    }
  });

  criterion(7, "stegmeir thresholds at horizon 50", 5.0, [] {
    AnalysisConfig cfg;
    cfg.horizon = 50;
    auto f = builtin_family("stegmeir");
    for (long s : {1L, 2L, 3L}) {
      auto r = omega_lp_norm(f, Rational(s), cfg);
      require(r.report.verdict == Verdict::False,
              "not rejected at s = " + std::to_string(s));
      require(r.report.certificate == CertificateKind::InfiniteWitness ||
                  r.report.certificate == CertificateKind::DivergenceWitness,
              "divergence certificate missing");
    }
    for (const Rational& s : {Rational(7, 2), Rational(4)}) {
      auto r = omega_lp_norm(f, s, cfg);
      require(r.report.verdict == Verdict::True, "not accepted at s = " + s.get_str());
      require(r.report.certificate == CertificateKind::ConvergenceBound,
              "tail-bound certificate missing");
      require(r.report.bounds.has_value() && r.report.bounds->hi() < 10,
              "certified norm interval missing or absurd");
    }
    require(in_c0(f).verdict == Verdict::True, "c0 must hold");
    require(kernel_has_bai(f).verdict == Verdict::False, "kernel BAI must fail");
    require(is_zl_amenable(f).verdict == Verdict::False, "ZL-amenability must fail");
  });

  criterion(8, "steinberg thresholds and the exact n=2 term", 0, [] {
    AnalysisConfig cfg;
    cfg.horizon = 50;
    auto f = builtin_family("steinberg");
    require(omega_lp_norm(f, Rational(3), cfg).report.verdict == Verdict::False,
            "must not lie in l^3");
    require(omega_lp_norm(f, Rational(7, 2), cfg).report.verdict == Verdict::True,
            "must lie in l^3.5");
    auto l2 = omega_l2_norm(f, cfg);
    require(l2.terms[0].is_exact() && *l2.terms[0].exact == Rational(15, 4),
            "l2 term at n = 2 is not 60/16 = 15/4");
  });

  criterion(9, "affine power families at p = 2", 0, [] {
    AnalysisConfig cfg;
    cfg.horizon = 50;
    auto nonlinear = builtin_family("aff-powers(2)");
    for (const Rational& s : {Rational(3, 2), Rational(2)}) {
      auto r = omega_lp_norm(nonlinear, s, cfg);
      require(r.report.verdict == Verdict::True, "not accepted at s = " + s.get_str());
      require(r.report.bounds.has_value(), "no certified norm");
    }
    auto linear = builtin_family("aff-powers-linear(2)");
    require(in_c0(linear).verdict == Verdict::False,
            "infinitely many linear characters must break c0");
  });

  criterion(10, "BAI kernels never lie in c0 over the builtin corpus", 0, [] {
    std::vector<std::string> names = builtin_family_names();
    names.push_back("constant(heis(3).char[9])");
    names.push_back("constant(abelian(2 x 3).char[1,1])");
    names.push_back("constant(tensor(dihedral(4).char[1], 2))");
    for (const auto& name : names) {
      auto f = builtin_family(name);
      if (kernel_has_bai(f).verdict == Verdict::True) {
        require(in_c0(f).verdict == Verdict::False, name + " breaks the meta-invariant");
      }
    }
  });

  criterion(11, "no infinite family admits omega in l^1", 0, [] {
    std::vector<std::string> names = builtin_family_names();
    names.push_back("constant(heis(5).char[25])");
    for (const auto& name : names) {
      auto r = omega_never_l1(builtin_family(name));
      require(r.verdict == Verdict::False, name + " failed the l1 impossibility");
      require(r.certificate == CertificateKind::TheoremShortcut, "wrong certificate");
    }
  });

  criterion(12, "oracle equivalence on product groups", 30.0, [] {
    struct Case {
      GroupPtr left, right;
    };
    auto aff3 = aff_group(3);
    auto d4 = FiniteGroup::dihedral(4);
    auto s3 = FiniteGroup::symmetric(3);
    std::vector<Case> cases = {{aff3, aff3}, {d4, s3}, {d4, d4}};
    std::mt19937 rng(0xACCE55);
    for (const auto& c : cases) {
      auto prod = FiniteGroup::direct_product(c.left, c.right);
      auto tl = character_table(c.left);
      auto tr = character_table(c.right);
      auto tp = character_table(prod);
      // ||E - u_F||_1 factorizes per the tensor identity, for every pair
      for (const auto& a : tl.irreducibles) {
        for (const auto& b : tr.irreducibles) {
          Character chi = tensor_character(prod, a, b);
          ExactOrInterval joint = l1_norm(minimal_central_idempotent(chi));
          ExactOrInterval fa = l1_norm(minimal_central_idempotent(a));
          ExactOrInterval fb = l1_norm(minimal_central_idempotent(b));
          require(joint.is_exact() && fa.is_exact() && fb.is_exact(), "norms not exact");
          require(*joint.exact == *fa.exact * *fb.exact, "tensor norm identity fails");
          CentralElement u = kernel_identity_u(chi);
          ExactOrInterval e_minus_u = l1_norm(CentralElement::delta_e(prod) - u);
          require(e_minus_u.is_exact() && *e_minus_u.exact == *joint.exact,
                  "||E - u||_1 mismatch");
        }
      }
      // sum of idempotents is delta_e
      CentralElement sum = CentralElement::zero(prod);
      for (const auto& chi : tp.irreducibles) sum = sum + minimal_central_idempotent(chi);
      require(sum == CentralElement::delta_e(prod), "idempotent resolution fails");
      // multiplicativity on 100 random central pairs
      std::uniform_int_distribution<int> num(-4, 4);
      std::uniform_int_distribution<int> den(1, 3);
      std::uniform_int_distribution<size_t> row(0, tp.irreducibles.size() - 1);
      for (int trial = 0; trial < 100; ++trial) {
        CentralElement x = CentralElement::zero(prod), y = CentralElement::zero(prod);
        for (auto& v : x.coeffs) {
          Rational q(num(rng), den(rng));
          q.canonicalize();
          v = Cyclotomic(q);
        }
        for (auto& v : y.coeffs) {
          Rational q(num(rng), den(rng));
          q.canonicalize();
          v = Cyclotomic(q);
        }
        const Character& chi = tp.irreducibles[row(rng)];
        require(gelfand_value(chi, convolve(x, y)) ==
                    gelfand_value(chi, x) * gelfand_value(chi, y),
                "gelfand multiplicativity fails");
      }
    }
  });

  criterion(13, "l2 product formula vs brute force on 20 random heads", 0, [] {
    std::mt19937 rng(0x1E57);
    std::vector<std::pair<GroupPtr, CharacterTable>> pool;
    for (const auto& g :
         {FiniteGroup::cyclic(2), FiniteGroup::cyclic(5), FiniteGroup::dihedral(4),
          FiniteGroup::symmetric(3), FiniteGroup::quaternion8(), aff_group(3), aff_group(4)}) {
      pool.emplace_back(g, character_table(g));
    }
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
      std::uniform_int_distribution<int> len(1, 3);
      FamilySpec f;
      f.tail = TailKind::Empty;
      Rational expected(1);
      long long total_order = 1;
      GroupPtr prod;
      Character tensor;
      const int factors = len(rng);
      for (int i = 0; i < factors; ++i) {
        auto& [g, t] = pool[pick(rng)];
        std::uniform_int_distribution<int> row(0, t.count() - 1);
        const Character& chi = t.irreducibles[row(rng)];
        f.head.push_back(HeadEntry::from_pair(g, chi));
        expected *= Rational(g->order()) / (Rational(chi.degree()) * Rational(chi.degree()));
        total_order *= g->order();
        if (!prod) {
          prod = g;
          tensor = chi;
        } else if (total_order <= 500) {
          GroupPtr next = FiniteGroup::direct_product(prod, g, 500);
          tensor = tensor_character(next, tensor, chi);
          prod = next;
        }
      }
      auto l2 = omega_l2_norm(f);
      require(l2.report.verdict == Verdict::True, "finite family not summable");
      require(l2.partial_products.back().is_exact(), "product not exact");
      require(*l2.partial_products.back().exact == expected, "product formula mismatch");
      if (total_order <= 500) {
        ExactOrInterval brute = lp_norm_pth_power(tensor, Rational(2));
        Rational d2 = Rational(tensor.degree()) * Rational(tensor.degree());
        require(brute.is_exact() && *brute.exact / d2 == expected,
                "brute-force sum disagrees");
      }
    }
  });

  if (g_failures == 0) {
    std::cout << "ACCEPTANCE PASS (13 criteria)" << std::endl;
    return 0;
  }
  std::cout << "ACCEPTANCE FAIL (" << g_failures << " of 13 criteria failed)" << std::endl;
  return 1;
}
