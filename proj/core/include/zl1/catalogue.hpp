#pragma once

#include <zl1/family.hpp>
#include <zl1/group.hpp>

#include <string>
#include <vector>

namespace zl1 {

struct CatalogueEntry {
  std::string name;
  GroupPtr group;
};

// The builtin verification corpus: every abelian group of order <= small_bound,
// the dihedral/symmetric/alternating/quaternion/Heisenberg/affine groups in
// the same range, a few direct products, and parametric materializations
// (Aff(q), SL(2,q), Heisenberg) up to parametric_bound.
std::vector<CatalogueEntry> builtin_catalogue(int small_bound = 63,
                                              int parametric_bound = kOracleOrderBound);

// Group expressions: c<n>, d<m> (dihedral, order 2m), s<n>, a<n>, q8,
// heis(p), aff(q), sl2(q), abelian(n1 x n2 x ...), products with " x ",
// file:<path> (multiplication table), perms:<path> (generators).
GroupPtr parse_group_expr(const std::string& expr);

struct CheckResult {
  std::string check;
  bool pass = false;
  std::string detail;
};

// Per-group verification sweep: exact orthogonality, degree divisibility,
// the l^1 lower bound with its equality criterion, the Rider gap, AIC vs
// nilpotency, normal subgroups meeting character supports, and the
// intersection of centres of absolutely idempotent characters.
std::vector<CheckResult> sweep_group(const GroupPtr& g,
                                     int precision_bits = kDefaultPrecisionBits);

struct ProblemHit {
  std::string group;
  std::string chi;
  long degree = 0;
  Integer order;
  Rational margin;  // (1+delta) d^2 - |H| >= 0
};

// All catalogue pairs (H, chi) with (1+delta) d_chi^2 >= |H|.
std::vector<ProblemHit> scan_problem(const Rational& delta,
                                     const std::vector<CatalogueEntry>& catalogue);

}  // namespace zl1
