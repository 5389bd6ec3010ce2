#include <zl1/family.hpp>

#include <zl1/errors.hpp>
#include <zl1/gf.hpp>

#include <algorithm>
#include <mutex>
#include <sstream>

namespace zl1 {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True:
      return "true";
    case Verdict::False:
      return "false";
    case Verdict::Undetermined:
      return "undetermined";
  }
  return "?";
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::FiniteExceptionalSet:
      return "finite-exceptional-set";
    case CertificateKind::InfiniteWitness:
      return "infinite-witness";
    case CertificateKind::DivergenceWitness:
      return "divergence-witness";
    case CertificateKind::ConvergenceBound:
      return "convergence-bound";
    case CertificateKind::TheoremShortcut:
      return "theorem-shortcut";
    case CertificateKind::None:
      return "none";
  }
  return "?";
}

HeadEntry HeadEntry::from_atom(FamilyAtom a) {
  HeadEntry e;
  e.label = a.syntax();
  e.atom = std::move(a);
  return e;
}

HeadEntry HeadEntry::from_pair(GroupPtr g, Character chi) {
  HeadEntry e;
  e.label = g->name() + ":" + chi.label;
  e.group = std::move(g);
  e.chi = std::move(chi);
  return e;
}

Integer HeadEntry::order() const {
  return atom ? atom->group_order() : Integer(group->order());
}

Integer HeadEntry::degree() const {
  return atom ? atom->degree() : Integer(chi->degree());
}

bool HeadEntry::group_abelian() const {
  return atom ? atom->group_is_abelian() : group->is_abelian();
}

bool HeadEntry::char_aic() const {
  return atom ? atom->char_is_aic() : is_absolutely_idempotent(*chi);
}

ExactOrInterval HeadEntry::lp_term(const Rational& s, int precision_bits) const {
  if (atom) return atom->lp_term(s, precision_bits);
  ExactOrInterval norm = lp_norm_pth_power(*chi, s, precision_bits);
  return norm * eoi_pow(Rational(chi->degree()), -s, precision_bits);
}

ExactOrInterval HeadEntry::mcr_value(int precision_bits) const {
  if (atom) return ExactOrInterval::from_exact(atom->mcr());
  return mcr(*chi, precision_bits);
}

namespace {

// Clamp a term enclosure at 1 from below: every factor (d^-1 ||chi||_s)^s
// is >= 1, so this tightens rounding without weakening soundness.
ExactOrInterval clamp_term(ExactOrInterval t) {
  if (t.exact) return t;
  Rational lo = std::max(t.bounds.lo(), Rational(1));
  return ExactOrInterval::from_interval(RealInterval(lo, std::max(t.bounds.hi(), lo)));
}

// Upper rational bound of base^expo (expo < 0 => base > 1 cases handled by
// pow_enclosure); refines until the bound is meaningful for ratios < 1.
Rational pow_upper_below_one(const Rational& base, const Rational& expo, int prec) {
  for (int wp = prec;; wp *= 2) {
    RealInterval iv = pow_enclosure(base, expo, wp);
    if (iv.hi() < 1) return iv.hi();
    if (wp > (1 << 20)) throw Error("tail certificate: ratio bound refinement runaway");
  }
}

class SteinbergStream final : public TailStream {
 public:
  explicit SteinbergStream(int from_n) : from_(from_n) {
    if (from_n < 2) throw Error("steinberg stream starts at n >= 2");
  }
  std::string name() const override {
    return "steinberg from n=" + std::to_string(from_);
  }
  std::string index_label(long i) const override {
    return "n=" + std::to_string(from_ + i);
  }
  FamilyAtom atom(long i) const override {
    return FamilyAtom::steinberg(static_cast<int>(from_ + i));
  }
  bool all_groups_abelian() const override { return false; }
  bool all_groups_nonabelian() const override { return true; }
  bool all_chars_aic() const override { return false; }
  bool no_chars_aic() const override { return true; }
  bool all_groups_aic() const override { return false; }
  bool no_groups_aic() const override { return true; }
  bool mcr_tends_to_zero() const override { return true; }
  std::optional<Rational> mcr_uniform_lower() const override { return std::nullopt; }

  LpTailCertificate lp_certificate(const Rational& s, int prec) const override {
    LpTailCertificate c;
    if (s > 3) {
      // log term_n <= (2^{3n} - 2^{2n} - 2^n) / 2^{ns} <= 2^{-n(s-3)}.
      const Rational t = s - 3;
      const int from = from_;
      c.kind = LpTailCertificate::Kind::Convergent;
      c.reason = "log term_n <= 2^(-n(s-3)), geometric";
      c.log_tail_bound = [t, from, prec](long N) -> Rational {
        long n0 = from + N;
        Rational ratio = pow_upper_below_one(Rational(2), -t, prec);
        Rational first = pow_enclosure(Rational(2), -t * n0, prec).hi();
        return first / (1 - ratio);
      };
      return c;
    }
    // s <= 3: term_n >= term at s = 3, which is 2 - 2^-n - 2^-2n >= 27/16.
    c.kind = LpTailCertificate::Kind::DivergentUniform;
    c.uniform_lower = Rational(27, 16);
    c.reason = "term_n >= 2 - 2^-n - 2^-2n >= 27/16 for n >= 2 and s <= 3";
    return c;
  }

 private:
  int from_;
};

class StegmeirStream final : public TailStream {
 public:
  explicit StegmeirStream(long from_p) {
    if (from_p < 3) from_p = 3;
    if (!is_prime(from_p)) throw Error("stegmeir stream must start at an odd prime");
    from_ = from_p;
  }
  std::string name() const override { return "stegmeir from p=" + std::to_string(from_); }
  std::string index_label(long i) const override {
    return "p=" + std::to_string(prime_at(i));
  }
  FamilyAtom atom(long i) const override { return FamilyAtom::stegmeir(prime_at(i)); }
  bool all_groups_abelian() const override { return false; }
  bool all_groups_nonabelian() const override { return true; }
  bool all_chars_aic() const override { return false; }
  bool no_chars_aic() const override { return true; }
  bool all_groups_aic() const override { return false; }
  bool no_groups_aic() const override { return true; }
  bool mcr_tends_to_zero() const override { return true; }
  std::optional<Rational> mcr_uniform_lower() const override { return std::nullopt; }

  long prime_at(long i) const {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<long>(primes_.size()) <= i) {
      Integer next(primes_.empty() ? from_ - 1 : primes_.back());
      mpz_nextprime(next.get_mpz_t(), next.get_mpz_t());
      primes_.push_back(next.get_si());
    }
    return primes_[i];
  }

  LpTailCertificate lp_certificate(const Rational& s, int prec) const override {
    LpTailCertificate c;
    if (s > 3) {
      // log term_p = (p-1) log(1 + (p-1)^{1-s}) <= (p-1)^{2-s}; compare with
      // the integer tail sum of m^{2-s}.
      c.kind = LpTailCertificate::Kind::Convergent;
      c.reason = "log term_p <= (p-1)^(2-s), dominated by an integer power tail";
      const Rational t = s - 2;  // > 1
      auto self = this;
      c.log_tail_bound = [t, prec, self](long N) -> Rational {
        Rational M(self->prime_at(N) - 1);
        Rational first = pow_enclosure(M, -t, prec).hi();
        Rational integral = pow_enclosure(M, 1 - t, prec).hi() / (t - 1);
        return first + integral;
      };
      return c;
    }
    if (s <= 2) {
      c.kind = LpTailCertificate::Kind::DivergentUniform;
      c.uniform_lower = Rational(2);
      c.reason = "term_p = (1 + (p-1)^(1-s))^(p-1) >= (1 + 1/(p-1))^(p-1) >= 2 for s <= 2";
      return c;
    }
    // 2 < s <= 3: per-term bound tends to 1 but its product over the primes
    // diverges; declared via the prime harmonic series.
    c.kind = LpTailCertificate::Kind::DivergentDeclared;
    c.reason =
        "term_p >= 1 + (p-1)^(2-s) >= p/(p-1) for s <= 3 and "
        "prod_p p/(p-1) = +infinity (sum 1/p diverges over the primes)";
    return c;
  }

 private:
  long from_;
  mutable std::mutex mu_;
  mutable std::vector<long> primes_;
};

class AffPowerStream final : public TailStream {
 public:
  AffPowerStream(long p, int from_n, bool linear) : p_(p), from_(from_n), linear_(linear) {
    if (!is_prime(p)) throw Error("aff_powers: base must be prime");
    if (ipow(Integer(p), from_n) < 3) throw Error("aff_powers: start with p^n >= 3");
  }
  std::string name() const override {
    std::ostringstream os;
    os << "aff-powers" << (linear_ ? "-linear" : "") << "(" << p_ << ") from n=" << from_;
    return os.str();
  }
  std::string index_label(long i) const override { return "n=" + std::to_string(from_ + i); }
  FamilyAtom atom(long i) const override {
    Integer q = ipow(Integer(p_), static_cast<unsigned long>(from_ + i));
    return linear_ ? FamilyAtom::aff_linear(q, 1) : FamilyAtom::aff_nonlinear(q);
  }
  bool all_groups_abelian() const override { return false; }
  bool all_groups_nonabelian() const override { return true; }
  bool all_chars_aic() const override { return linear_; }
  bool no_chars_aic() const override { return !linear_; }
  bool all_groups_aic() const override { return false; }
  bool no_groups_aic() const override { return true; }
  bool mcr_tends_to_zero() const override { return !linear_; }
  std::optional<Rational> mcr_uniform_lower() const override {
    if (linear_) return Rational(1);
    return std::nullopt;
  }

  LpTailCertificate lp_certificate(const Rational& s, int prec) const override {
    LpTailCertificate c;
    if (linear_) {
      c.kind = LpTailCertificate::Kind::DivergentUniform;
      Integer q0 = ipow(Integer(p_), from_);
      c.uniform_lower = Rational(q0 * (q0 - 1));
      c.reason = "linear factors contribute term = |G_n| = p^n(p^n - 1), increasing";
      return c;
    }
    if (s > 1) {
      // log term_n <= (p^n - 1)^{1-s} <= p^{-(n-1)(s-1)}, geometric.
      c.kind = LpTailCertificate::Kind::Convergent;
      c.reason = "log term_n <= p^(-(n-1)(s-1)), geometric";
      const Rational t = s - 1;
      const long p = p_;
      const int from = from_;
      c.log_tail_bound = [t, p, from, prec](long N) -> Rational {
        long n0 = from + N;
        Rational ratio = pow_upper_below_one(Rational(p), -t, prec);
        Rational first = pow_enclosure(Rational(p), -t * (n0 - 1), prec).hi();
        return first / (1 - ratio);
      };
      return c;
    }
    // s = 1: term = 1 + (p^n - 1)^0 = 2 for every index.
    c.kind = LpTailCertificate::Kind::DivergentUniform;
    c.uniform_lower = Rational(2);
    c.reason = "term_n = 2 at s = 1";
    return c;
  }

 private:
  long p_;
  int from_;
  bool linear_;
};

class ConstantStream final : public TailStream {
 public:
  explicit ConstantStream(FamilyAtom atom) : atom_(std::move(atom)) {}
  std::string name() const override { return "constant(" + atom_.syntax() + ")"; }
  std::string index_label(long i) const override { return "i=" + std::to_string(i); }
  FamilyAtom atom(long) const override { return atom_; }
  bool all_groups_abelian() const override { return atom_.group_is_abelian(); }
  bool all_groups_nonabelian() const override { return !atom_.group_is_abelian(); }
  bool all_chars_aic() const override { return atom_.char_is_aic(); }
  bool no_chars_aic() const override { return !atom_.char_is_aic(); }
  bool all_groups_aic() const override { return atom_.group_is_aic(); }
  bool no_groups_aic() const override { return !atom_.group_is_aic(); }
  bool mcr_tends_to_zero() const override { return atom_.mcr() == 0; }
  std::optional<Rational> mcr_uniform_lower() const override {
    if (atom_.mcr() > 0) return atom_.mcr();
    return std::nullopt;
  }

  LpTailCertificate lp_certificate(const Rational& s, int prec) const override {
    LpTailCertificate c;
    for (int wp = prec; wp <= (1 << 16); wp *= 2) {
      ExactOrInterval t = atom_.lp_term(s, wp);
      if (t.exact) {
        if (*t.exact == 1) {
          c.kind = LpTailCertificate::Kind::Convergent;
          c.log_tail_bound = [](long) { return Rational(0); };
          c.reason = "constant term exactly 1";
        } else {
          c.kind = LpTailCertificate::Kind::DivergentUniform;
          c.uniform_lower = *t.exact;
          c.reason = "constant term " + t.exact->get_str() + " > 1";
        }
        return c;
      }
      if (t.bounds.lo() > 1) {
        c.kind = LpTailCertificate::Kind::DivergentUniform;
        c.uniform_lower = t.bounds.lo();
        c.reason = "constant term certified > 1";
        return c;
      }
    }
    c.kind = LpTailCertificate::Kind::Unknown;
    c.reason = "constant term could not be separated from 1";
    return c;
  }

 private:
  FamilyAtom atom_;
};

}  // namespace

std::shared_ptr<const TailStream> steinberg_stream(int from_n) {
  return std::make_shared<SteinbergStream>(from_n);
}
std::shared_ptr<const TailStream> stegmeir_stream(long from_p) {
  return std::make_shared<StegmeirStream>(from_p);
}
std::shared_ptr<const TailStream> aff_power_stream(long p, int from_n, bool linear) {
  return std::make_shared<AffPowerStream>(p, from_n, linear);
}
std::shared_ptr<const TailStream> constant_stream(const FamilyAtom& atom) {
  return std::make_shared<ConstantStream>(atom);
}

namespace {

std::string position_label(const FamilySpec& f, long pos) {
  const long h = static_cast<long>(f.head.size());
  if (pos < h) return "head[" + std::to_string(pos) + "]=" + f.head[pos].label;
  return f.stream ? f.stream->index_label(pos - h) : "tail[" + std::to_string(pos - h) + "]";
}

}  // namespace

DecisionReport is_zl_amenable(const FamilySpec& f, const AnalysisConfig& cfg) {
  DecisionReport r;
  r.question = "Zl1(G) amenable";
  std::vector<long> bad;
  for (size_t i = 0; i < f.head.size(); ++i) {
    if (f.head[i].order() > 1 && !f.head[i].group_abelian()) bad.push_back(i);
  }
  switch (f.tail) {
    case TailKind::Empty:
    case TailKind::Abelian:
      r.verdict = Verdict::True;
      r.certificate = CertificateKind::FiniteExceptionalSet;
      r.exceptional_indices = bad;
      r.narrative = "nonabelian factors form the finite set {" +
                    std::to_string(bad.size()) + " head entries}; the tail is " +
                    (f.tail == TailKind::Empty ? "empty" : "abelian");
      return r;
    case TailKind::Stream:
      if (f.stream->all_groups_abelian()) {
        r.verdict = Verdict::True;
        r.certificate = CertificateKind::FiniteExceptionalSet;
        r.exceptional_indices = bad;
        r.narrative = "tail stream declares every factor abelian";
        return r;
      }
      if (f.stream->all_groups_nonabelian()) {
        r.verdict = Verdict::False;
        r.certificate = CertificateKind::InfiniteWitness;
        for (long i = 0; i < std::min<long>(cfg.horizon, 10); ++i) {
          r.exceptional_indices.push_back(static_cast<long>(f.head.size()) + i);
        }
        r.narrative = "tail stream " + f.stream->name() +
                      " declares every factor nonabelian; infinitely many nonabelian factors";
        return r;
      }
      r.narrative = "tail does not declare abelian-ness per index";
      return r;
  }
  return r;
}

Rational am_lower_bound(const FamilySpec& f, long upto) {
  long k = 0;
  const long h = static_cast<long>(f.head.size());
  for (long i = 0; i < std::min<long>(upto, h); ++i) {
    if (f.head[i].order() > 1 && !f.head[i].group_abelian()) ++k;
  }
  if (f.tail == TailKind::Stream) {
    for (long i = 0; i < upto - h; ++i) {
      if (!f.stream->atom(i).group_is_abelian()) ++k;
    }
  }
  return qpow(Rational(301, 300), k);
}

DecisionReport kernel_has_bai(const FamilySpec& f, const AnalysisConfig& cfg) {
  (void)cfg;
  DecisionReport r;
  r.question = "ker(omega) has a bounded approximate identity";
  std::vector<long> bad;
  for (size_t i = 0; i < f.head.size(); ++i) {
    if (!f.head[i].char_aic()) bad.push_back(i);
  }
  auto finish_true = [&](const std::string& tail_note) {
    r.verdict = Verdict::True;
    r.certificate = CertificateKind::FiniteExceptionalSet;
    r.exceptional_indices = bad;
    r.narrative = "factors with d||chi||_1 > |G| form a finite set of size " +
                  std::to_string(bad.size()) + "; " + tail_note;
  };
  switch (f.tail) {
    case TailKind::Empty:
      finish_true("the tail is empty");
      return r;
    case TailKind::Abelian:
      finish_true("abelian tail characters are linear, hence absolutely idempotent");
      return r;
    case TailKind::Stream:
      if (f.stream->all_chars_aic()) {
        finish_true("tail stream characters are absolutely idempotent");
        return r;
      }
      if (f.stream->no_chars_aic()) {
        r.verdict = Verdict::False;
        r.certificate = CertificateKind::InfiniteWitness;
        for (long i = 0; i < std::min<long>(cfg.horizon, 10); ++i) {
          r.exceptional_indices.push_back(static_cast<long>(f.head.size()) + i);
        }
        r.narrative = "tail stream " + f.stream->name() +
                      " declares d||chi||_1 > |G| at every index";
        return r;
      }
      r.narrative = "tail does not declare the idempotency pattern";
      return r;
  }
  return r;
}

DecisionReport every_max_ideal_has_bai(const FamilySpec& f, const AnalysisConfig& cfg) {
  DecisionReport r;
  r.question = "every maximal ideal of Zl1(G) has a bounded approximate identity";
  std::vector<long> bad;
  for (size_t i = 0; i < f.head.size(); ++i) {
    const HeadEntry& e = f.head[i];
    bool aic_group;
    if (e.atom) {
      aic_group = e.atom->group_is_aic();
    } else {
      aic_group = group_is_aic(e.group, cfg.table_bound);
    }
    if (!aic_group) bad.push_back(i);
  }
  bool tail_ok;
  std::string tail_note;
  switch (f.tail) {
    case TailKind::Empty:
      tail_ok = true;
      tail_note = "empty tail";
      break;
    case TailKind::Abelian:
      tail_ok = true;
      tail_note = "abelian tail groups are AIC";
      break;
    case TailKind::Stream:
      if (f.stream->all_groups_aic()) {
        tail_ok = true;
        tail_note = "tail stream groups are AIC";
      } else if (f.stream->no_groups_aic()) {
        r.verdict = Verdict::False;
        r.certificate = CertificateKind::InfiniteWitness;
        for (long i = 0; i < std::min<long>(cfg.horizon, 10); ++i) {
          r.exceptional_indices.push_back(static_cast<long>(f.head.size()) + i);
        }
        r.narrative = "tail stream " + f.stream->name() +
                      " provides infinitely many non-AIC factors, each carrying a "
                      "character with d||chi||_1 > |G|";
        return r;
      } else {
        r.narrative = "tail does not declare the AIC pattern";
        return r;
      }
      break;
  }
  // M = prod over exceptional factors of sup_pi (d_pi / |G|) ||Tr pi||_1.
  ExactOrInterval M = ExactOrInterval::from_exact(Rational(1));
  for (long i : bad) {
    const HeadEntry& e = f.head[i];
    GroupPtr g = e.group;
    if (!g) {
      auto mat = e.atom->materialize(cfg.table_bound);  // may throw OrderBound
      g = mat.first;
    }
    CharacterTable t = character_table(g, cfg.table_bound);
    std::optional<ExactOrInterval> best;
    for (const auto& chi : t.irreducibles) {
      ExactOrInterval l1 = lp_norm_pth_power(chi, Rational(1), cfg.precision_bits);
      Rational scale = Rational(chi.degree()) / Rational(g->order());
      ExactOrInterval cand = l1 * ExactOrInterval::from_exact(scale);
      if (!best) {
        best = cand;
      } else if (best->exact && cand.exact) {
        if (*cand.exact > *best->exact) best = cand;
      } else {
        // Enclosure of the max is the max of the endpoints.
        Rational lo = std::max(best->bounds.lo(), cand.bounds.lo());
        Rational hi = std::max(best->bounds.hi(), cand.bounds.hi());
        best = ExactOrInterval::from_interval(RealInterval(lo, hi));
      }
    }
    if (best) M = M * *best;
  }
  r.verdict = Verdict::True;
  r.certificate = CertificateKind::FiniteExceptionalSet;
  r.exceptional_indices = bad;
  ExactOrInterval bound = M + ExactOrInterval::from_exact(Rational(1));
  r.bounds = bound.bounds;
  r.narrative = "exceptional set has size " + std::to_string(bad.size()) + " (" + tail_note +
                "); uniform BAI norm bound M + 1 = " + bound.str();
  return r;
}

DecisionReport in_c0(const FamilySpec& f, const AnalysisConfig& cfg) {
  DecisionReport r;
  r.question = "omega in c0";
  switch (f.tail) {
    case TailKind::Empty:
      r.verdict = Verdict::True;
      r.certificate = CertificateKind::TheoremShortcut;
      r.narrative = "finite family: omega has finite support, vacuously in c0";
      return r;
    case TailKind::Abelian:
      r.verdict = Verdict::False;
      r.certificate = CertificateKind::InfiniteWitness;
      r.narrative =
          "abelian tail: every character is linear with mcr = 1, so mcr does not tend to 0";
      return r;
    case TailKind::Stream: {
      if (f.stream->mcr_tends_to_zero()) {
        r.verdict = Verdict::True;
        r.certificate = CertificateKind::ConvergenceBound;
        // Sample the decline for the narrative.
        ExactOrInterval first = ExactOrInterval::from_exact(f.stream->atom(0).mcr());
        ExactOrInterval later = ExactOrInterval::from_exact(
            f.stream->atom(std::min<long>(cfg.horizon, 16) - 1).mcr());
        r.narrative = "stream mcr decreases to 0 (declared closed form); mcr[0] = " +
                      first.str() + ", mcr[" +
                      std::to_string(std::min<long>(cfg.horizon, 16) - 1) + "] = " + later.str();
        return r;
      }
      if (auto eps = f.stream->mcr_uniform_lower()) {
        r.verdict = Verdict::False;
        r.certificate = CertificateKind::InfiniteWitness;
        r.narrative = "infinitely many indices have mcr >= " + eps->get_str();
        return r;
      }
      r.narrative = "tail declares no mcr behaviour";
      return r;
    }
  }
  return r;
}

namespace {

std::string iv_str(const RealInterval& iv) {
  return "[" + decimal_lower(iv.lo(), 12) + ", " + decimal_upper(iv.hi(), 12) + "]";
}

LpAnalysis lp_analysis_impl(const FamilySpec& f, const Rational& p, const AnalysisConfig& cfg) {
  if (p < 1) throw Error("omega_lp_norm: p must be >= 1");
  LpAnalysis out;
  DecisionReport& r = out.report;
  r.question = "omega in l^" + p.get_str();

  ExactOrInterval partial = ExactOrInterval::from_exact(Rational(1));
  auto push_term = [&](const std::string& label, ExactOrInterval term) {
    term = clamp_term(std::move(term));
    partial = partial * term;
    out.index_labels.push_back(label);
    out.terms.push_back(std::move(term));
    out.partial_products.push_back(partial);
  };
  for (const auto& e : f.head) push_term(e.label, e.lp_term(p, cfg.precision_bits));

  if (f.tail == TailKind::Stream) {
    for (long i = 0; i < cfg.horizon; ++i) {
      push_term(f.stream->index_label(i), f.stream->atom(i).lp_term(p, cfg.precision_bits));
    }
  }

  switch (f.tail) {
    case TailKind::Empty: {
      r.verdict = Verdict::True;
      r.certificate = CertificateKind::ConvergenceBound;
      RealInterval norm_p = pow_enclosure(partial.bounds, Rational(1) / p, cfg.precision_bits);
      r.bounds = norm_p;
      r.narrative = "finite family: ||omega||_" + p.get_str() + "^" + p.get_str() +
                    " = " + partial.str() + "; norm in " + iv_str(norm_p);
      return out;
    }
    case TailKind::Abelian: {
      r.verdict = Verdict::False;
      r.certificate = CertificateKind::InfiniteWitness;
      r.narrative =
          "abelian tail: every term equals |G_i| >= 2, so the product diverges at every p";
      return out;
    }
    case TailKind::Stream:
      break;
  }

  LpTailCertificate cert = f.stream->lp_certificate(p, cfg.precision_bits);
  switch (cert.kind) {
    case LpTailCertificate::Kind::Convergent: {
      Rational logtail = cert.log_tail_bound(cfg.horizon);
      RealInterval mult = exp_enclosure(RealInterval(Rational(0), logtail), cfg.precision_bits);
      RealInterval total(partial.bounds.lo(), partial.bounds.hi() * mult.hi());
      r.verdict = Verdict::True;
      r.certificate = CertificateKind::ConvergenceBound;
      RealInterval norm_p = pow_enclosure(total, Rational(1) / p, cfg.precision_bits);
      r.bounds = norm_p;
      r.narrative = "tail certificate: " + cert.reason + "; sum of log terms beyond index " +
                    std::to_string(cfg.horizon) + " <= " + decimal_upper(logtail, 12) +
                    "; ||omega||_" + p.get_str() + " in " + iv_str(norm_p);
      return out;
    }
    case LpTailCertificate::Kind::DivergentUniform: {
      r.verdict = Verdict::False;
      r.certificate = CertificateKind::InfiniteWitness;
      r.narrative = "tail certificate: " + cert.reason + " (uniform term lower bound " +
                    cert.uniform_lower.get_str() + " > 1); partial product after " +
                    std::to_string(out.terms.size()) + " factors already " + partial.str();
      return out;
    }
    case LpTailCertificate::Kind::DivergentDeclared: {
      r.verdict = Verdict::False;
      r.certificate = CertificateKind::InfiniteWitness;
      r.narrative = "tail certificate: " + cert.reason + "; partial product after " +
                    std::to_string(out.terms.size()) + " factors is " + partial.str();
      return out;
    }
    case LpTailCertificate::Kind::Unknown:
      break;
  }

  if (partial.bounds.lo() > cfg.divergence_threshold) {
    r.verdict = Verdict::False;
    r.certificate = CertificateKind::DivergenceWitness;
    r.exceptional_indices = {static_cast<long>(out.terms.size()) - 1};
    r.bounds = partial.bounds;
    r.narrative = "monotone partial product exceeded the divergence threshold " +
                  cfg.divergence_threshold.get_str() + " within the horizon; the norm is "
                  "certified above the threshold, and full divergence holds for any "
                  "declared infinite tail";
    return out;
  }
  r.verdict = Verdict::Undetermined;
  r.certificate = CertificateKind::None;
  r.narrative = "no tail certificate for p = " + p.get_str() +
                " and the partial product stayed below the divergence threshold";
  return out;
}

}  // namespace

LpAnalysis omega_lp_norm(const FamilySpec& f, const Rational& p, const AnalysisConfig& cfg) {
  return lp_analysis_impl(f, p, cfg);
}

LpAnalysis omega_l2_norm(const FamilySpec& f, const AnalysisConfig& cfg) {
  return lp_analysis_impl(f, Rational(2), cfg);
}

DecisionReport omega_never_l1(const FamilySpec& f, const AnalysisConfig& cfg) {
  if (!f.infinite()) {
    throw Error("omega_never_l1: finite families have summable omega by finite support");
  }
  DecisionReport r;
  r.question = "omega in l^1";
  r.verdict = Verdict::False;
  r.certificate = CertificateKind::TheoremShortcut;
  // Cheap witness: every nontrivial factor contributes >= 301/300; absolutely
  // idempotent factors contribute |Z(chi)| >= 2, the rest are above the gap.
  Rational witness(1);
  const Rational gap(301, 300);
  long counted = 0;
  for (const auto& e : f.head) {
    if (e.order() > 1) {
      ExactOrInterval t = e.lp_term(Rational(1), cfg.precision_bits);
      witness *= std::max(t.bounds.lo(), gap);
      ++counted;
    }
  }
  if (f.tail == TailKind::Stream) {
    for (long i = 0; i < std::min<long>(cfg.horizon, 32); ++i) {
      ExactOrInterval t = f.stream->atom(i).lp_term(Rational(1), cfg.precision_bits);
      witness *= std::max(t.bounds.lo(), gap);
      ++counted;
    }
  } else {
    // Abelian tail: each factor contributes |G_i| >= 2.
    witness *= qpow(Rational(2), 32);
    counted += 32;
  }
  r.narrative =
      "infinite family: each nontrivial factor has d^-1||chi||_1 >= 301/300 (exactly 1 "
      "never occurs: absolutely idempotent factors give |Z(chi)| >= 2, all others are "
      "above the gap); first " +
      std::to_string(counted) + " factors already force ||omega||_1 >= " +
      compact_str(witness);
  return r;
}

FamilyAnalysis analyze_family(const FamilySpec& f, const std::vector<Rational>& ps,
                              const AnalysisConfig& cfg) {
  FamilyAnalysis a;
  a.description = f.description;
  a.zl_amenable = is_zl_amenable(f, cfg);
  a.kernel_bai = kernel_has_bai(f, cfg);
  a.every_max_ideal_bai = every_max_ideal_has_bai(f, cfg);
  a.c0 = in_c0(f, cfg);
  if (f.infinite()) a.l1_impossible = omega_never_l1(f, cfg);
  for (const auto& p : ps) a.lp.emplace_back(p, omega_lp_norm(f, p, cfg));
  a.l2 = omega_l2_norm(f, cfg);
  a.am_bound_at_horizon =
      am_lower_bound(f, static_cast<long>(f.head.size()) +
                            (f.tail == TailKind::Stream ? cfg.horizon : 0));
  return a;
}

}  // namespace zl1
