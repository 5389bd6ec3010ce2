#pragma once

#include <zl1/atoms.hpp>
#include <zl1/metrics.hpp>

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace zl1 {

enum class Verdict { True, False, Undetermined };
std::string to_string(Verdict v);

enum class CertificateKind {
  FiniteExceptionalSet,  // the bad set is explicitly finite
  InfiniteWitness,       // declared/verified infinitude of a bad set
  DivergenceWitness,     // monotone partial product exceeded the threshold
  ConvergenceBound,      // summable tail certificate with an explicit bound
  TheoremShortcut,       // a named theorem applies directly
  None,
};
std::string to_string(CertificateKind k);

// Outcome of one decision procedure. True/False verdicts always carry a
// machine-checkable certificate; Undetermined carries an explanation.
struct DecisionReport {
  std::string question;
  Verdict verdict = Verdict::Undetermined;
  CertificateKind certificate = CertificateKind::None;
  std::vector<long> exceptional_indices;  // 0-based family positions
  std::optional<RealInterval> bounds;
  std::string narrative;
};

// One explicit factor of a family: a closed-form atom, or a concrete group
// with a chosen irreducible character.
struct HeadEntry {
  std::optional<FamilyAtom> atom;
  GroupPtr group;
  std::optional<Character> chi;
  std::string label;

  static HeadEntry from_atom(FamilyAtom a);
  static HeadEntry from_pair(GroupPtr g, Character chi);

  Integer order() const;
  Integer degree() const;
  bool group_abelian() const;
  bool char_aic() const;
  ExactOrInterval lp_term(const Rational& s, int precision_bits) const;
  ExactOrInterval mcr_value(int precision_bits) const;
};

// Per-exponent certificate for the infinite product of tail terms
// (d_i^{-1} ||chi_i||_s)^s over the whole (cofinite) tail.
struct LpTailCertificate {
  enum class Kind { Convergent, DivergentUniform, DivergentDeclared, Unknown };
  Kind kind = Kind::Unknown;
  // Convergent: rational upper bound for sum_{i >= N} log term_i.
  std::function<Rational(long)> log_tail_bound;
  // DivergentUniform: rational lower bound > 1 valid for every tail index.
  Rational uniform_lower = 0;
  std::string reason;
};

// A parametric tail: one closed-form atom per index plus the declared
// certificates that make infinite-product and all-but-finitely-many
// decisions sound.
class TailStream {
 public:
  virtual ~TailStream() = default;
  virtual std::string name() const = 0;
  virtual std::string index_label(long i) const = 0;
  virtual FamilyAtom atom(long i) const = 0;

  virtual bool all_groups_abelian() const = 0;
  virtual bool all_groups_nonabelian() const = 0;
  virtual bool all_chars_aic() const = 0;
  virtual bool no_chars_aic() const = 0;
  virtual bool all_groups_aic() const = 0;
  virtual bool no_groups_aic() const = 0;

  virtual bool mcr_tends_to_zero() const = 0;
  virtual std::optional<Rational> mcr_uniform_lower() const = 0;

  virtual LpTailCertificate lp_certificate(const Rational& s,
                                           int precision_bits) const = 0;
};

enum class TailKind { Empty, Abelian, Stream };

struct FamilySpec {
  std::string description;
  std::vector<HeadEntry> head;
  TailKind tail = TailKind::Empty;
  std::shared_ptr<const TailStream> stream;  // when tail == Stream

  bool infinite() const { return tail != TailKind::Empty; }
};

std::shared_ptr<const TailStream> steinberg_stream(int from_n = 2);
std::shared_ptr<const TailStream> stegmeir_stream(long from_p = 3);
std::shared_ptr<const TailStream> aff_power_stream(long p, int from_n = 2,
                                                   bool linear = false);
std::shared_ptr<const TailStream> constant_stream(const FamilyAtom& atom);

// Builtin specs: "stegmeir", "steinberg", "aff-powers(p)",
// "aff-powers-linear(p)", "constant(<atom-expr>)".
FamilySpec builtin_family(const std::string& name);
std::vector<std::string> builtin_family_names();

// Family-spec text format (head/tail sections); see the README.
FamilySpec parse_family(std::istream& in, const std::string& origin);
FamilySpec parse_family_file(const std::string& path);

struct AnalysisConfig {
  long horizon = 200;
  int precision_bits = kDefaultPrecisionBits;
  Rational divergence_threshold = Rational(1000000);
  int table_bound = kCharacterTableOrderBound;
};

// Zl^1(G) amenable <=> all but finitely many factors abelian.
DecisionReport is_zl_amenable(const FamilySpec& f, const AnalysisConfig& cfg = {});

// (301/300)^k with k the nonabelian count among positions < upto; exact.
Rational am_lower_bound(const FamilySpec& f, long upto);

// ker omega has a BAI <=> d_i ||chi_i||_1 = |G_i| for all but finitely many i.
DecisionReport kernel_has_bai(const FamilySpec& f, const AnalysisConfig& cfg = {});

// Every maximal ideal has a BAI <=> all but finitely many factors are AIC
// groups; the certificate carries the uniform norm bound M + 1.
DecisionReport every_max_ideal_has_bai(const FamilySpec& f, const AnalysisConfig& cfg = {});

// omega in c0 <=> mcr(chi_i) -> 0.
DecisionReport in_c0(const FamilySpec& f, const AnalysisConfig& cfg = {});

struct LpAnalysis {
  DecisionReport report;
  std::vector<std::string> index_labels;
  std::vector<ExactOrInterval> terms;
  std::vector<ExactOrInterval> partial_products;
};

// Membership of omega in l^p via the factorized norm; p >= 1.
LpAnalysis omega_lp_norm(const FamilySpec& f, const Rational& p,
                         const AnalysisConfig& cfg = {});
// Same at p = 2, where every term is the exact rational |G_i| / d_i^2.
LpAnalysis omega_l2_norm(const FamilySpec& f, const AnalysisConfig& cfg = {});

// The l^1 impossibility for infinite families; rejects finite ones.
DecisionReport omega_never_l1(const FamilySpec& f, const AnalysisConfig& cfg = {});

struct FamilyAnalysis {
  std::string description;
  DecisionReport zl_amenable;
  DecisionReport kernel_bai;
  DecisionReport every_max_ideal_bai;
  DecisionReport c0;
  std::optional<DecisionReport> l1_impossible;  // infinite families only
  std::vector<std::pair<Rational, LpAnalysis>> lp;
  LpAnalysis l2;
  Rational am_bound_at_horizon;
};

FamilyAnalysis analyze_family(const FamilySpec& f, const std::vector<Rational>& ps,
                              const AnalysisConfig& cfg = {});

}  // namespace zl1
