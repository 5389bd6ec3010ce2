// Command-line surface for the exact character-table and Zl^1 analysis
// library: compute tables and per-character metrics, analyze restricted
// direct product families, run the catalogue verification sweep, and scan
// for near-extremal degrees.

#include <zl1/atoms.hpp>
#include <zl1/catalogue.hpp>
#include <zl1/central.hpp>
#include <zl1/errors.hpp>
#include <zl1/family.hpp>
#include <zl1/group_io.hpp>
#include <zl1/metrics.hpp>
#include <zl1/report.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUndetermined = 2;
constexpr int kExitInvariantViolation = 3;
constexpr int kExitInputError = 4;

std::vector<zl1::Rational> parse_p_list(const std::string& list) {
  std::vector<zl1::Rational> out;
  std::string cur;
  std::istringstream is(list);
  while (std::getline(is, cur, ',')) {
    if (!cur.empty()) out.push_back(zl1::parse_rational(cur));
  }
  if (out.empty()) throw zl1::ParseError("empty p list");
  return out;
}

std::vector<zl1::CatalogueEntry> load_catalogue(const std::string& dir) {
  std::vector<zl1::CatalogueEntry> entries = zl1::builtin_catalogue();
  std::string path = dir;
  if (path.empty()) {
    if (const char* env = std::getenv("RDPF_CATALOGUE")) path = env;
  }
  if (!path.empty()) {
    for (const auto& e : std::filesystem::directory_iterator(path)) {
      if (!e.is_regular_file()) continue;
      auto p = e.path();
      if (p.extension() == ".tbl") {
        entries.push_back({p.stem().string(), zl1::read_multiplication_table_file(p.string())});
      } else if (p.extension() == ".perm") {
        entries.push_back({p.stem().string(), zl1::read_permutation_generators_file(p.string())});
      }
    }
  }
  return entries;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact character tables and Zl^1 analysis of restricted direct products"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "output format: text|structured|csv")
      ->capture_default_str();
  int precision = zl1::kDefaultPrecisionBits;
  app.add_option("--precision", precision, "interval precision in bits [64, 1024]")
      ->capture_default_str();
  long horizon = 200;
  app.add_option("--horizon", horizon, "tail indices examined by analyze")
      ->capture_default_str();
  std::string catalogue_dir;
  app.add_option("--catalogue", catalogue_dir,
                 "directory of .tbl/.perm fixtures added to the builtin catalogue "
                 "(default: $RDPF_CATALOGUE)");

  auto* cmd_table = app.add_subcommand("table", "character table of a group expression");
  std::string table_expr;
  cmd_table->add_option("group", table_expr, "group expression")->required();

  auto* cmd_metrics = app.add_subcommand("metrics", "per-character metrics of a group");
  std::string metrics_expr;
  cmd_metrics->add_option("group", metrics_expr, "group expression")->required();

  auto* cmd_analyze = app.add_subcommand("analyze", "decision procedures for a family spec");
  std::string spec_arg;
  std::string p_list = "1,2";
  cmd_analyze->add_option("spec", spec_arg, "spec file path or builtin family name")
      ->required();
  cmd_analyze->add_option("--p", p_list, "comma-separated l^p exponents")
      ->capture_default_str();

  auto* cmd_sweep = app.add_subcommand("sweep", "verification sweep over the catalogue");

  auto* cmd_scan = app.add_subcommand("scan-problem",
                                      "catalogue scan for (1+delta) d^2 >= |H|");
  std::string delta_str = "0";
  cmd_scan->add_option("--delta", delta_str, "rational delta in [0, 1/2)")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (precision < 64 || precision > 1024) {
      throw zl1::ParseError("precision must lie in [64, 1024]");
    }
    if (horizon < 1) throw zl1::ParseError("horizon must be >= 1");
    zl1::OutputFormat fmt = zl1::parse_format(format);

    if (*cmd_table) {
      auto g = zl1::parse_group_expr(table_expr);
      auto t = zl1::character_table(g);
      switch (fmt) {
        case zl1::OutputFormat::Text:
          zl1::render_table_text(std::cout, t);
          break;
        case zl1::OutputFormat::Structured:
          zl1::render_table_structured(std::cout, t);
          break;
        case zl1::OutputFormat::Csv:
          zl1::render_table_csv(std::cout, t);
          break;
      }
      return kExitOk;
    }

    if (*cmd_metrics) {
      auto g = zl1::parse_group_expr(metrics_expr);
      auto t = zl1::character_table(g);
      zl1::render_metrics(std::cout, t, fmt, precision);
      return kExitOk;
    }

    if (*cmd_analyze) {
      zl1::FamilySpec spec;
      if (std::filesystem::exists(spec_arg)) {
        spec = zl1::parse_family_file(spec_arg);
      } else {
        spec = zl1::builtin_family(spec_arg);
      }
      zl1::AnalysisConfig cfg;
      cfg.horizon = horizon;
      cfg.precision_bits = precision;
      auto analysis = zl1::analyze_family(spec, parse_p_list(p_list), cfg);
      zl1::render_analysis(std::cout, analysis, fmt);
      bool undetermined =
          analysis.zl_amenable.verdict == zl1::Verdict::Undetermined ||
          analysis.kernel_bai.verdict == zl1::Verdict::Undetermined ||
          analysis.every_max_ideal_bai.verdict == zl1::Verdict::Undetermined ||
          analysis.c0.verdict == zl1::Verdict::Undetermined;
      undetermined |= analysis.l2.report.verdict == zl1::Verdict::Undetermined;
      for (const auto& [p, lp] : analysis.lp) {
        undetermined |= lp.report.verdict == zl1::Verdict::Undetermined;
      }
      return undetermined ? kExitUndetermined : kExitOk;
    }

    if (*cmd_sweep) {
      auto entries = load_catalogue(catalogue_dir);
      bool all_ok = true;
      for (const auto& entry : entries) {
        std::vector<zl1::CheckResult> results;
        try {
          results = zl1::sweep_group(entry.group, precision);
        } catch (const zl1::OrderBound& e) {
          // beyond the table bound: reported, not failed
          results.push_back({"skipped-order-bound", true, e.what()});
        } catch (const zl1::Error& e) {
          results.push_back({"sweep", false, e.what()});
        }
        for (const auto& r : results) all_ok &= r.pass;
        zl1::render_sweep(std::cout, entry.name, results, fmt);
      }
      std::cout << (all_ok ? "SWEEP PASS" : "SWEEP FAIL") << " (" << entries.size()
                << " groups)\n";
      return all_ok ? kExitOk : kExitInvariantViolation;
    }

    if (*cmd_scan) {
      auto entries = load_catalogue(catalogue_dir);
      auto delta = zl1::parse_rational(delta_str);
      auto hits = zl1::scan_problem(delta, entries);
      zl1::render_problem_hits(std::cout, delta, hits, fmt);
      return kExitOk;
    }
  } catch (const zl1::InternalInconsistency& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariantViolation;
  } catch (const zl1::UndeterminedError& e) {
    std::cerr << "undetermined: " << e.what() << "\n";
    return kExitUndetermined;
  } catch (const zl1::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
