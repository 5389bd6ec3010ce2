#include <zl1/atoms.hpp>

#include <zl1/errors.hpp>
#include <zl1/gf.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace zl1 {

namespace {

// Prime-power decomposition for arbitrary-precision arguments: big values
// only ever arise as p^n with a small prime p.
std::pair<Integer, int> big_prime_power(const Integer& q) {
  if (q < 2) throw NotPrimePower(q.get_str() + " is not a prime power");
  for (long d = 2; d <= 1000000 && Integer(d) * d <= q; d == 2 ? d = 3 : d += 2) {
    if (q % d == 0) {
      Integer m = q;
      int k = 0;
      while (m % d == 0) m /= d, ++k;
      if (m != 1) throw NotPrimePower(q.get_str() + " is not a prime power");
      return {Integer(d), k};
    }
  }
  if (mpz_probab_prime_p(q.get_mpz_t(), 40) == 0) {
    throw NotPrimePower(q.get_str() + " is not a prime power");
  }
  return {q, 1};
}

long require_prime(long p, const std::string& who) {
  if (!is_prime(p)) throw NotPrime(who + ": " + std::to_string(p) + " is not prime");
  return p;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw OrderBound("parameter " + z.get_str() + " too large");
  return z.get_si();
}

}  // namespace

GroupPtr aff_group(long q) {
  prime_power_decomposition(q);
  GaloisField F(static_cast<int>(q));
  // Elements (a, b) with a != 0 acting as x -> a x + b; identity (1, 0)
  // listed first so it lands on index 0.
  std::vector<std::pair<int, int>> elems;
  elems.reserve(q * (q - 1));
  elems.emplace_back(1, 0);
  for (int a = 1; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (a == 1 && b == 0) continue;
      elems.emplace_back(a, b);
    }
  }
  std::map<std::pair<int, int>, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    auto [a1, b1] = elems[i];
    for (int j = 0; j < n; ++j) {
      auto [a2, b2] = elems[j];
      // (a1, b1) o (a2, b2): x -> a1(a2 x + b2) + b1
      table[i][j] = index.at({F.mul(a1, a2), F.add(F.mul(a1, b2), b1)});
    }
  }
  return FiniteGroup::from_multiplication_table(table, "Aff(" + std::to_string(q) + ")");
}

GroupPtr sl2_group(long q, int order_bound) {
  prime_power_decomposition(q);
  const long order = q * (q * q - 1);
  if (order > order_bound) {
    throw OrderBound("SL(2," + std::to_string(q) + ") has order " + std::to_string(order) +
                     " above bound " + std::to_string(order_bound));
  }
  GaloisField F(static_cast<int>(q));
  struct M {
    int a, b, c, d;
    bool operator<(const M& o) const {
      return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
    }
  };
  std::vector<M> elems;
  elems.push_back({1, 0, 0, 1});
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      for (int c = 0; c < q; ++c) {
        for (int d = 0; d < q; ++d) {
          if (F.add(F.mul(a, d), F.neg(F.mul(b, c))) != 1) continue;
          if (a == 1 && b == 0 && c == 0 && d == 1) continue;
          elems.push_back({a, b, c, d});
        }
      }
    }
  }
  if (static_cast<long>(elems.size()) != order) {
    throw InternalInconsistency("SL(2,q) enumeration has wrong order");
  }
  std::map<M, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    const M& x = elems[i];
    for (int j = 0; j < n; ++j) {
      const M& y = elems[j];
      M z{F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
          F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
      table[i][j] = index.at(z);
    }
  }
  return FiniteGroup::from_multiplication_table(table, "SL(2," + std::to_string(q) + ")");
}

FamilyAtom FamilyAtom::aff_nonlinear(const Integer& q) {
  big_prime_power(q);
  if (q < 3) {
    throw NotPrimePower("aff(" + q.get_str() + ") has no nonlinear character");
  }
  FamilyAtom a;
  a.kind_ = AtomKind::AffNonlinear;
  a.q_ = q;
  a.group_order_ = q * (q - 1);
  a.degree_ = q - 1;
  a.mcr_ = Rational(Integer(1), Integer(q - 1));
  a.char_is_aic_ = false;
  a.group_abelian_ = false;
  a.group_aic_ = false;
  return a;
}

FamilyAtom FamilyAtom::aff_linear(const Integer& q, long which) {
  big_prime_power(q);
  if (which < 0 || Integer(which) >= q - 1) throw Error("aff_linear: selector out of range");
  FamilyAtom a;
  a.kind_ = AtomKind::AffLinear;
  a.q_ = q;
  a.which_ = which;
  a.group_order_ = q * (q - 1);
  a.degree_ = 1;
  a.mcr_ = Rational(1);  // |chi| = 1 away from the identity as well
  a.char_is_aic_ = true;
  a.group_abelian_ = q == 2;
  a.group_aic_ = q == 2;
  return a;
}

FamilyAtom FamilyAtom::steinberg(int n) {
  if (n < 2) throw Error("steinberg: need n >= 2");
  FamilyAtom a;
  a.kind_ = AtomKind::Steinberg;
  a.n_ = n;
  Integer q = ipow(Integer(2), n);
  a.q_ = q;
  a.group_order_ = q * (q * q - 1);
  a.degree_ = q;
  a.mcr_ = Rational(Integer(1), q);
  a.char_is_aic_ = false;
  a.group_abelian_ = false;
  a.group_aic_ = false;
  return a;
}

FamilyAtom FamilyAtom::stegmeir(long p) {
  require_prime(p, "stegmeir");
  if (p < 3) throw NotPrime("stegmeir: p = 2 leaves no nonlinear factor");
  return tensor_power(aff_nonlinear(Integer(p)), p - 1);
}

FamilyAtom FamilyAtom::dihedral_two_dim(long m, long k) {
  if (m < 3) throw Error("dihedral_two_dim: need m >= 3");
  k = ((k % m) + m) % m;
  long g = std::gcd(k, m);
  long reduced = m / g;
  if (reduced <= 2) throw Error("dihedral_two_dim: character is not irreducible");
  if (reduced % 2 != 0 && reduced != 3) {
    throw Error("dihedral_two_dim: mcr is irrational for m/gcd(k,m) = " +
                std::to_string(reduced) + "; materialize the group instead");
  }
  FamilyAtom a;
  a.kind_ = AtomKind::DihedralTwoDim;
  a.m_ = m;
  a.k_ = k;
  a.group_order_ = 2 * m;
  a.degree_ = 2;
  a.mcr_ = reduced % 2 == 0 ? Rational(1) : Rational(1, 2);
  a.char_is_aic_ = reduced == 4;
  a.group_abelian_ = false;
  a.group_aic_ = m == 4;
  return a;
}

FamilyAtom FamilyAtom::abelian_linear(std::vector<long> orders, std::vector<long> exps) {
  if (orders.size() != exps.size()) throw Error("abelian_linear: mismatched lengths");
  Integer order(1);
  for (size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 1) throw Error("abelian_linear: bad cyclic order");
    if (exps[i] < 0 || exps[i] >= orders[i]) throw Error("abelian_linear: exponent out of range");
    order *= orders[i];
  }
  FamilyAtom a;
  a.kind_ = AtomKind::AbelianLinear;
  a.orders_ = std::move(orders);
  a.exps_ = std::move(exps);
  a.group_order_ = order;
  a.degree_ = 1;
  a.mcr_ = order == 1 ? Rational(0) : Rational(1);
  a.char_is_aic_ = true;
  a.group_abelian_ = true;
  a.group_aic_ = true;
  return a;
}

FamilyAtom FamilyAtom::heisenberg_char(long p, long which) {
  require_prime(p, "heisenberg_char");
  if (which < 0 || which >= p * p + p - 1) throw Error("heisenberg_char: selector out of range");
  FamilyAtom a;
  a.kind_ = AtomKind::HeisenbergChar;
  a.q_ = p;
  a.which_ = which;
  a.group_order_ = ipow(Integer(p), 3);
  a.degree_ = which < p * p ? 1 : p;
  a.mcr_ = Rational(1);  // class-2 groups: |chi| = d on the centre
  a.char_is_aic_ = true;
  a.group_abelian_ = false;
  a.group_aic_ = true;
  return a;
}

FamilyAtom FamilyAtom::tensor_power(const FamilyAtom& base, long k) {
  if (k < 1) throw Error("tensor_power: power must be >= 1");
  if (k == 1) return base;
  FamilyAtom a;
  a.kind_ = AtomKind::TensorPower;
  a.base_ = std::make_shared<FamilyAtom>(base);
  a.power_ = k;
  a.group_order_ = ipow(base.group_order_, static_cast<unsigned long>(k));
  a.degree_ = ipow(base.degree_, static_cast<unsigned long>(k));
  a.mcr_ = base.mcr_;  // max(mcr, ..., mcr)
  a.char_is_aic_ = base.char_is_aic_;
  a.group_abelian_ = base.group_abelian_;
  a.group_aic_ = base.group_aic_;  // products of AIC groups are AIC
  return a;
}

ExactOrInterval FamilyAtom::lp_term(const Rational& s, int precision_bits) const {
  if (s <= 0) throw Error("lp_term: exponent must be positive");
  switch (kind_) {
    case AtomKind::AffNonlinear: {
      // values: q-1 at e, then q-1 copies of -1, zeros elsewhere:
      // term = 1 + (q-1)^{1-s}.
      return ExactOrInterval::from_exact(Rational(1)) +
             eoi_pow(Rational(q_ - 1), Rational(1) - s, precision_bits);
    }
    case AtomKind::AffLinear:
    case AtomKind::AbelianLinear:
      // |chi| = 1 everywhere: term = |G| for every s.
      return ExactOrInterval::from_exact(Rational(group_order_));
    case AtomKind::Steinberg: {
      // (q^s + q^3 - q^2 - q) / q^s
      Rational bulk = Rational(q_ * q_ * q_ - q_ * q_ - q_);
      return ExactOrInterval::from_exact(Rational(1)) +
             ExactOrInterval::from_exact(bulk) * eoi_pow(Rational(q_), -s, precision_bits);
    }
    case AtomKind::HeisenbergChar:
      return ExactOrInterval::from_exact(
          which_ < q_ * q_ ? Rational(group_order_) : Rational(q_));
    case AtomKind::DihedralTwoDim: {
      // Rotation values cycle through 2cos(2 pi t / M), M = m/gcd, each hit
      // gcd(k, m) times; reflections vanish.
      const long g = std::gcd(k_, m_);
      const long M = m_ / g;
      std::vector<Cyclotomic> values;
      for (long t = 0; t < M; ++t) {
        values.push_back(Cyclotomic::root_of_unity(M, t) + Cyclotomic::root_of_unity(M, -t));
      }
      if (is_integer(s) && s.get_num() % 2 == 0) {
        // |v|^s = (v conj v)^{s/2} summed exactly over the full cycle.
        unsigned long half = mpz_class(s.get_num() / 2).get_ui();
        Cyclotomic acc;
        for (const auto& v : values) {
          Cyclotomic term(Rational(1));
          Cyclotomic sq = v.abs_squared();
          for (unsigned long i = 0; i < half; ++i) term *= sq;
          acc += term;
        }
        if (!acc.is_rational()) throw InternalInconsistency("dihedral even-power sum");
        return ExactOrInterval::from_exact(acc.rational_value() * Rational(g) *
                                           qpow(Rational(2), -s.get_num().get_si()));
      }
      ExactOrInterval sum = ExactOrInterval::from_exact(Rational(0));
      for (const auto& v : values) {
        ExactOrInterval av = abs_value(v, precision_bits);
        ExactOrInterval pw;
        if (av.exact) {
          pw = eoi_pow(*av.exact, s, precision_bits);
        } else {
          pw = ExactOrInterval::from_interval(pow_enclosure(av.bounds, s, precision_bits));
        }
        sum = sum + pw;
      }
      ExactOrInterval scaled = sum * ExactOrInterval::from_exact(Rational(g));
      return scaled * eoi_pow(Rational(2), -s, precision_bits);
    }
    case AtomKind::TensorPower: {
      ExactOrInterval base = base_->lp_term(s, precision_bits);
      return eoi_pow_ui(base, static_cast<unsigned long>(power_));
    }
  }
  throw Error("lp_term: unhandled atom kind");
}

std::string FamilyAtom::syntax() const {
  std::ostringstream os;
  switch (kind_) {
    case AtomKind::AffNonlinear:
      os << "aff(" << q_.get_str() << ").nonlinear";
      break;
    case AtomKind::AffLinear:
      os << "aff(" << q_.get_str() << ").linear[" << which_ << "]";
      break;
    case AtomKind::Steinberg:
      os << "sl2(2^" << n_ << ").steinberg";
      break;
    case AtomKind::DihedralTwoDim:
      os << "dihedral(" << m_ << ").char[" << k_ << "]";
      break;
    case AtomKind::HeisenbergChar:
      os << "heis(" << q_.get_str() << ").char[" << which_ << "]";
      break;
    case AtomKind::AbelianLinear: {
      os << "abelian(";
      for (size_t i = 0; i < orders_.size(); ++i) os << (i ? " x " : "") << orders_[i];
      os << ").char[";
      for (size_t i = 0; i < exps_.size(); ++i) os << (i ? "," : "") << exps_[i];
      os << "]";
      break;
    }
    case AtomKind::TensorPower:
      os << "tensor(" << base_->syntax() << ", " << power_ << ")";
      break;
  }
  return os.str();
}

namespace {

Character find_row(const CharacterTable& table, const Character& expected) {
  for (const auto& row : table.irreducibles) {
    if (row.values == expected.values) return row;
  }
  throw InternalInconsistency("expected character not found in computed table");
}

Character unique_row_of_degree(const CharacterTable& table, long d) {
  const Character* found = nullptr;
  for (const auto& row : table.irreducibles) {
    if (row.degree() == d) {
      if (found) throw InternalInconsistency("degree selector is ambiguous");
      found = &row;
    }
  }
  if (!found) throw InternalInconsistency("no character of the requested degree");
  return *found;
}

Character nth_row_of_degree(const CharacterTable& table, long d, long n) {
  long seen = 0;
  for (const auto& row : table.irreducibles) {
    if (row.degree() == d) {
      if (seen == n) return row;
      ++seen;
    }
  }
  throw Error("character selector out of range");
}

}  // namespace

std::pair<GroupPtr, Character> FamilyAtom::materialize(int order_bound) const {
  if (group_order_ > order_bound) {
    throw OrderBound("atom " + syntax() + " has order " + group_order_.get_str() +
                     " above bound " + std::to_string(order_bound));
  }
  switch (kind_) {
    case AtomKind::AffNonlinear: {
      auto g = aff_group(to_long(q_));
      auto t = character_table(g, order_bound);
      return {g, unique_row_of_degree(t, to_long(q_) - 1)};
    }
    case AtomKind::AffLinear: {
      auto g = aff_group(to_long(q_));
      auto t = character_table(g, order_bound);
      return {g, nth_row_of_degree(t, 1, which_)};
    }
    case AtomKind::Steinberg: {
      auto g = sl2_group(to_long(q_), order_bound);
      auto t = character_table(g, order_bound);
      return {g, unique_row_of_degree(t, to_long(q_))};
    }
    case AtomKind::DihedralTwoDim: {
      auto g = FiniteGroup::dihedral(static_cast<int>(m_));
      auto t = character_table(g, order_bound);
      const auto& cc = g->classes();
      Character expected;
      expected.group = g;
      expected.values.resize(cc.count());
      for (int c = 0; c < cc.count(); ++c) {
        Elem rep = cc.representatives[c];
        if (rep < m_) {
          expected.values[c] = Cyclotomic::root_of_unity(m_, k_ * rep) +
                               Cyclotomic::root_of_unity(m_, -k_ * rep);
        } else {
          expected.values[c] = Cyclotomic();
        }
      }
      return {g, find_row(t, expected)};
    }
    case AtomKind::AbelianLinear: {
      std::vector<int> orders(orders_.begin(), orders_.end());
      auto g = FiniteGroup::abelian(orders);
      auto t = character_table(g, order_bound);
      const auto& cc = g->classes();
      Character expected;
      expected.group = g;
      expected.values.resize(cc.count());
      for (int c = 0; c < cc.count(); ++c) {
        Elem rep = cc.representatives[c];
        // Mixed-radix digits, least significant = last factor.
        Cyclotomic v(Rational(1));
        for (size_t i = orders_.size(); i-- > 0;) {
          long digit = rep % orders_[i];
          rep /= static_cast<int>(orders_[i]);
          v *= Cyclotomic::root_of_unity(orders_[i], exps_[i] * digit);
        }
        expected.values[c] = v;
      }
      return {g, find_row(t, expected)};
    }
    case AtomKind::HeisenbergChar: {
      const long p = to_long(q_);
      auto g = FiniteGroup::heisenberg(static_cast<int>(p));
      auto t = character_table(g, order_bound);
      if (which_ < p * p) return {g, nth_row_of_degree(t, 1, which_)};
      return {g, nth_row_of_degree(t, p, which_ - p * p)};
    }
    case AtomKind::TensorPower: {
      auto [bg, bchi] = base_->materialize(order_bound);
      GroupPtr g = bg;
      Character chi = bchi;
      for (long i = 1; i < power_; ++i) {
        GroupPtr prod = FiniteGroup::direct_product(g, bg, order_bound);
        chi = tensor_character(prod, chi, bchi);
        g = prod;
      }
      if (inner_product(chi, chi) != Cyclotomic(Rational(1))) {
        throw InternalInconsistency("tensor power character is not irreducible");
      }
      return {g, chi};
    }
  }
  throw Error("materialize: unhandled atom kind");
}

namespace {

struct AtomParser {
  const std::string& s;
  size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError("atom: expected '" + std::string(1, c) + "' in " + s);
  }
  bool word(const std::string& w) {
    ws();
    if (s.compare(i, w.size(), w) == 0) {
      i += w.size();
      return true;
    }
    return false;
  }
  long number() {
    ws();
    size_t start = i;
    if (i < s.size() && s[i] == '-') ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("atom: expected number in " + s);
    return std::stol(s.substr(start, i - start));
  }

  FamilyAtom atom() {
    ws();
    if (word("aff")) {
      expect('(');
      long q = number();
      expect(')');
      expect('.');
      if (word("nonlinear")) return FamilyAtom::aff_nonlinear(Integer(q));
      if (word("linear")) {
        expect('[');
        long j = number();
        expect(']');
        return FamilyAtom::aff_linear(Integer(q), j);
      }
      throw ParseError("atom: aff selector must be .nonlinear or .linear[j]");
    }
    if (word("sl2")) {
      expect('(');
      int n;
      ws();
      if (word("2^")) {
        n = static_cast<int>(number());
      } else {
        long q = number();
        n = 0;
        while (q > 1 && q % 2 == 0) q /= 2, ++n;
        if (q != 1) throw ParseError("atom: sl2 argument must be a power of two");
      }
      expect(')');
      expect('.');
      if (!word("steinberg")) throw ParseError("atom: sl2 selector must be .steinberg");
      return FamilyAtom::steinberg(n);
    }
    if (word("stegmeir")) {
      expect('(');
      long p = number();
      expect(')');
      return FamilyAtom::stegmeir(p);
    }
    if (word("heis")) {
      expect('(');
      long p = number();
      expect(')');
      expect('.');
      if (!word("char")) throw ParseError("atom: heis selector must be .char[j]");
      expect('[');
      long j = number();
      expect(']');
      return FamilyAtom::heisenberg_char(p, j);
    }
    if (word("dihedral")) {
      expect('(');
      long m = number();
      expect(')');
      expect('.');
      if (!word("char")) throw ParseError("atom: dihedral selector must be .char[k]");
      expect('[');
      long k = number();
      expect(']');
      return FamilyAtom::dihedral_two_dim(m, k);
    }
    if (word("abelian")) {
      expect('(');
      std::vector<long> orders;
      orders.push_back(number());
      while (true) {
        ws();
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
          ++i;
          orders.push_back(number());
        } else {
          break;
        }
      }
      expect(')');
      expect('.');
      if (!word("char")) throw ParseError("atom: abelian selector must be .char[e1,...]");
      expect('[');
      std::vector<long> exps;
      exps.push_back(number());
      while (eat(',')) exps.push_back(number());
      expect(']');
      return FamilyAtom::abelian_linear(std::move(orders), std::move(exps));
    }
    if (word("tensor")) {
      expect('(');
      FamilyAtom base = atom();
      expect(',');
      long k = number();
      expect(')');
      return FamilyAtom::tensor_power(base, k);
    }
    throw ParseError("atom: unrecognized expression: " + s);
  }
};

}  // namespace

FamilyAtom parse_atom(const std::string& expr) {
  AtomParser p{expr};
  FamilyAtom a = p.atom();
  p.ws();
  if (p.i != expr.size()) throw ParseError("atom: trailing input in " + expr);
  return a;
}

}  // namespace zl1
