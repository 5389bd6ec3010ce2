#include <zl1/cyclotomic.hpp>

#include <zl1/errors.hpp>

#include <numeric>
#include <sstream>
#include <vector>

namespace zl1 {

namespace {

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) n /= p, ++e;
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long modinv(long a, long m) {
  long t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw Error("modinv: not invertible");
  return t < 0 ? t + m : t;
}

void add_coeff(std::map<long, Rational>& m, long k, const Rational& v) {
  auto it = m.find(k);
  if (it == m.end()) {
    if (v != 0) m.emplace(k, v);
  } else {
    it->second += v;
    if (it->second == 0) m.erase(it);
  }
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& q) : n_(1) {
  if (q != 0) c_.emplace(0, q);
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n < 1) throw Error("root_of_unity: conductor must be positive");
  k %= n;
  if (k < 0) k += n;
  Cyclotomic z;
  z.n_ = n;
  z.c_.emplace(k, Rational(1));
  z.normalize();
  return z;
}

Rational Cyclotomic::rational_value() const {
  if (n_ != 1) throw Error("rational_value: element is irrational");
  return c_.empty() ? Rational(0) : c_.begin()->second;
}

void Cyclotomic::strip_two_mod_four() {
  while (n_ % 4 == 2) {
    // Q(zeta_n) = Q(zeta_{n/2}) via zeta_n^j = -zeta_n^{j + n/2} (j odd).
    long m = n_ / 2;
    std::map<long, Rational> out;
    for (const auto& [j, coef] : c_) {
      if (j % 2 == 0) {
        add_coeff(out, j / 2, coef);
      } else {
        add_coeff(out, ((j + n_ / 2) % n_) / 2, -coef);
      }
    }
    n_ = m;
    c_ = std::move(out);
  }
}

void Cyclotomic::reduce_basis() {
  for (const auto& [p, e] : factorize(n_)) {
    long pv = 1;
    for (int i = 0; i < e; ++i) pv *= p;
    const long pv1 = pv / p;
    const long shift = n_ / p;  // adding it bumps the leading p-digit by one
    std::map<long, Rational> out;
    for (const auto& [j, coef] : c_) {
      long top = (j % pv) / pv1;
      if (p == 2) {
        if (top == 1) {
          add_coeff(out, (j + shift) % n_, -coef);
        } else {
          add_coeff(out, j, coef);
        }
      } else if (top == 0) {
        // 1 + zeta_p + ... + zeta_p^{p-1} = 0 rewritten around exponent j.
        for (long t = 1; t < p; ++t) {
          add_coeff(out, (j + t * shift) % n_, -coef);
        }
      } else {
        add_coeff(out, j, coef);
      }
    }
    c_ = std::move(out);
  }
}

bool Cyclotomic::shrink_conductor_once() {
  for (const auto& [p, e] : factorize(n_)) {
    if (e >= 2) {
      // The element lies in Q(zeta_{n/p}) iff every exponent is divisible
      // by p (all conjugates under Gal(Q(zeta_n)/Q(zeta_{n/p})) coincide).
      bool all = true;
      for (const auto& [j, coef] : c_) {
        if (j % p != 0) {
          all = false;
          break;
        }
      }
      if (!all) continue;
      std::map<long, Rational> out;
      for (const auto& [j, coef] : c_) out.emplace(j / p, coef);
      n_ /= p;
      c_ = std::move(out);
      return true;
    }
    // p exactly divides n (p odd: n is never 2 mod 4 here). Membership in
    // Q(zeta_{n/p}) means every fiber over a residue mod n/p carries all
    // p-1 admissible digits with one common coefficient.
    const long m = n_ / p;
    std::map<long, std::vector<std::pair<long, Rational>>> fibers;
    for (const auto& [j, coef] : c_) fibers[j % m].emplace_back(j, coef);
    bool ok = true;
    for (const auto& [r, terms] : fibers) {
      if (static_cast<long>(terms.size()) != p - 1) {
        ok = false;
        break;
      }
      for (const auto& [j, coef] : terms) {
        if (coef != terms.front().second) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) continue;
    const long pinv = modinv(p % m == 0 ? 1 : p % m, m == 1 ? 1 : m);
    std::map<long, Rational> out;
    for (const auto& [r, terms] : fibers) {
      // sum_{t=1..p-1} zeta_n^{CRT(r,t)} = -zeta_{n/p}^{r * p^{-1} mod m}
      long s = m == 1 ? 0 : (r % m) * pinv % m;
      add_coeff(out, s, -terms.front().second);
    }
    n_ = m;
    c_ = std::move(out);
    return true;
  }
  return false;
}

void Cyclotomic::normalize() {
  strip_two_mod_four();
  reduce_basis();
  if (c_.empty()) {
    n_ = 1;
    return;
  }
  while (shrink_conductor_once()) {
    strip_two_mod_four();
    reduce_basis();
    if (c_.empty()) {
      n_ = 1;
      return;
    }
  }
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  Cyclotomic out;
  out.n_ = std::lcm(n_, o.n_);
  const long a = out.n_ / n_, b = out.n_ / o.n_;
  for (const auto& [j, coef] : c_) add_coeff(out.c_, j * a, coef);
  for (const auto& [j, coef] : o.c_) add_coeff(out.c_, j * b, coef);
  out.normalize();
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& [j, coef] : out.c_) coef = -coef;
  return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Rational& s) const {
  if (s == 0) return Cyclotomic();
  Cyclotomic out = *this;
  for (auto& [j, coef] : out.c_) coef *= s;
  return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (is_zero() || o.is_zero()) return Cyclotomic();
  if (is_rational()) return o * rational_value();
  if (o.is_rational()) return *this * o.rational_value();
  Cyclotomic out;
  out.n_ = std::lcm(n_, o.n_);
  const long a = out.n_ / n_, b = out.n_ / o.n_;
  for (const auto& [j1, c1] : c_) {
    for (const auto& [j2, c2] : o.c_) {
      add_coeff(out.c_, (j1 * a + j2 * b) % out.n_, c1 * c2);
    }
  }
  out.normalize();
  return out;
}

Cyclotomic Cyclotomic::conjugate() const {
  Cyclotomic out;
  out.n_ = n_;
  for (const auto& [j, coef] : c_) out.c_.emplace(j == 0 ? 0 : n_ - j, coef);
  out.normalize();
  return out;
}

Cyclotomic Cyclotomic::abs_squared() const { return *this * conjugate(); }

bool Cyclotomic::is_real() const { return *this == conjugate(); }

RealInterval Cyclotomic::real_enclosure(int precision_bits) const {
  if (!is_real()) throw Error("real_enclosure: element is not self-conjugate");
  if (is_rational()) return RealInterval(rational_value());
  for (int wp = precision_bits + 8;; wp *= 2) {
    RealInterval acc{Rational(0)};
    for (const auto& [j, coef] : c_) {
      Rational fr(j, n_);
      fr.canonicalize();
      acc += RealInterval(coef) * cos2pi_enclosure(fr, wp);
    }
    Rational target(1);
    mpz_mul_2exp(target.get_den().get_mpz_t(), target.get_den().get_mpz_t(),
                 precision_bits);
    target.canonicalize();
    if (acc.width() <= target) return acc;
    if (wp > (1 << 22)) throw Error("real_enclosure: refinement runaway");
  }
}

RealInterval Cyclotomic::abs_enclosure(int precision_bits) const {
  Cyclotomic a2 = abs_squared();
  if (a2.is_rational()) {
    Rational v = a2.rational_value();
    if (v < 0) throw InternalInconsistency("abs_squared produced a negative rational");
    return sqrt_enclosure(v, precision_bits);
  }
  for (int wp = precision_bits + 8;; wp *= 2) {
    RealInterval sq = a2.real_enclosure(wp);
    Rational lo = sq.lo() < 0 ? Rational(0) : sq.lo();
    RealInterval out = sqrt_enclosure(RealInterval(lo, sq.hi()), wp);
    Rational target(1);
    mpz_mul_2exp(target.get_den().get_mpz_t(), target.get_den().get_mpz_t(),
                 precision_bits);
    target.canonicalize();
    if (out.width() <= target) return out;
    if (wp > (1 << 22)) throw Error("abs_enclosure: refinement runaway");
  }
}

int Cyclotomic::cmp(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_ ? -1 : 1;
  auto ia = a.c_.begin(), ib = b.c_.begin();
  for (; ia != a.c_.end() && ib != b.c_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    int c = mpq_cmp(ia->second.get_mpq_t(), ib->second.get_mpq_t());
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (ia != a.c_.end()) return 1;
  if (ib != b.c_.end()) return -1;
  return 0;
}

std::string Cyclotomic::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, coef] : c_) {
    Rational a = coef;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (j == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z(" << n_ << ")^" << j;
    }
    first = false;
  }
  return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& s) {
  Cyclotomic acc;
  size_t i = 0;
  const auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i == s.size()) throw ParseError("empty cyclotomic");
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
  while (true) {
    skip_ws();
    // term: [rational] [*] [z(n)[^k]]
    size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) ||
                            s[i] == '/' || s[i] == '.')) {
      ++i;
    }
    Rational coef(1);
    bool have_coef = i > start;
    if (have_coef) coef = parse_rational(s.substr(start, i - start));
    skip_ws();
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip_ws();
    }
    Cyclotomic term(coef);
    if (i < s.size() && s[i] == 'z') {
      ++i;
      if (i >= s.size() || s[i] != '(') throw ParseError("expected '(' after z");
      ++i;
      size_t j = s.find(')', i);
      if (j == std::string::npos) throw ParseError("unterminated z(");
      long n = std::stol(s.substr(i, j - i));
      i = j + 1;
      long k = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t st = i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        k = std::stol(s.substr(st, i - st));
      }
      term = root_of_unity(n, k) * coef;
    } else if (!have_coef) {
      throw ParseError("expected term in cyclotomic at position " + std::to_string(i));
    }
    acc += neg ? -term : term;
    skip_ws();
    if (i == s.size()) break;
    if (s[i] == '+' || s[i] == '-') {
      neg = s[i++] == '-';
    } else {
      throw ParseError("unexpected character in cyclotomic: " + s.substr(i));
    }
  }
  return acc;
}

int compare_real(const Cyclotomic& a, const Cyclotomic& b) {
  if (a == b) return 0;
  Cyclotomic d = a - b;
  for (int prec = 64; prec <= (1 << 16); prec *= 2) {
    RealInterval iv = d.real_enclosure(prec);
    if (iv.lo() > 0) return 1;
    if (iv.hi() < 0) return -1;
  }
  throw UndeterminedError("compare_real: could not separate distinct values");
}

}  // namespace zl1
