#pragma once

#include <zl1/catalogue.hpp>
#include <zl1/family.hpp>
#include <zl1/metrics.hpp>

#include <iosfwd>
#include <string>

namespace zl1 {

enum class OutputFormat { Text, Structured, Csv };
OutputFormat parse_format(const std::string& s);

// Character table as a plain-text grid: class-size header, one row per
// irreducible in the deterministic row order.
void render_table_text(std::ostream& out, const CharacterTable& table);
// Machine-readable structured document (JSON).
void render_table_structured(std::ostream& out, const CharacterTable& table);
void render_table_csv(std::ostream& out, const CharacterTable& table);

void render_metrics(std::ostream& out, const CharacterTable& table, OutputFormat fmt,
                    int precision_bits = kDefaultPrecisionBits);

void render_analysis(std::ostream& out, const FamilyAnalysis& analysis, OutputFormat fmt);

void render_sweep(std::ostream& out, const std::string& name,
                  const std::vector<CheckResult>& results, OutputFormat fmt);

void render_problem_hits(std::ostream& out, const Rational& delta,
                         const std::vector<ProblemHit>& hits, OutputFormat fmt);

}  // namespace zl1
