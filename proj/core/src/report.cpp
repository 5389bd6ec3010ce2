#include <zl1/report.hpp>

#include <zl1/errors.hpp>

#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

namespace zl1 {

using nlohmann::json;

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "structured") return OutputFormat::Structured;
  if (s == "csv") return OutputFormat::Csv;
  throw ParseError("unknown format: " + s + " (expected text|structured|csv)");
}

namespace {

json interval_json(const RealInterval& iv) {
  if (iv.is_point()) return json{{"exact", iv.lo().get_str()}};
  return json{{"lo", iv.lo().get_str()}, {"hi", iv.hi().get_str()}};
}

json eoi_json(const ExactOrInterval& v) {
  if (v.exact) return json{{"exact", v.exact->get_str()}};
  return json{{"lo", v.bounds.lo().get_str()},
              {"hi", v.bounds.hi().get_str()},
              {"approx", "[" + decimal_lower(v.bounds.lo(), 12) + ", " +
                             decimal_upper(v.bounds.hi(), 12) + "]"}};
}

json report_json(const DecisionReport& r) {
  json j{{"question", r.question},
         {"verdict", to_string(r.verdict)},
         {"certificate", to_string(r.certificate)},
         {"narrative", r.narrative}};
  if (!r.exceptional_indices.empty()) j["exceptional_indices"] = r.exceptional_indices;
  if (r.bounds) j["bounds"] = interval_json(*r.bounds);
  return j;
}

void render_report_text(std::ostream& out, const DecisionReport& r) {
  out << "  " << r.question << ": " << to_string(r.verdict)
      << "  [" << to_string(r.certificate) << "]\n";
  if (!r.exceptional_indices.empty()) {
    out << "      exceptional positions:";
    for (long i : r.exceptional_indices) out << " " << i;
    out << "\n";
  }
  if (r.bounds) {
    out << "      bounds: [" << decimal_lower(r.bounds->lo(), 12) << ", "
        << decimal_upper(r.bounds->hi(), 12) << "]\n";
  }
  out << "      " << r.narrative << "\n";
}

}  // namespace

void render_table_text(std::ostream& out, const CharacterTable& table) {
  const auto& cc = table.group->classes();
  out << "# character table of " << table.group->name() << " (order "
      << table.group->order() << ", " << cc.count() << " classes)\n";
  out << std::left << std::setw(8) << "sizes";
  for (int k = 0; k < cc.count(); ++k) out << std::setw(14) << cc.size(k);
  out << "\n";
  out << std::setw(8) << "reps";
  for (int k = 0; k < cc.count(); ++k) out << std::setw(14) << cc.representatives[k];
  out << "\n";
  for (const auto& chi : table.irreducibles) {
    out << std::setw(8) << chi.label;
    for (const auto& v : chi.values) out << std::setw(14) << v.str();
    out << "\n";
  }
}

void render_table_structured(std::ostream& out, const CharacterTable& table) {
  const auto& cc = table.group->classes();
  json j;
  j["group"] = table.group->name();
  j["order"] = table.group->order();
  j["class_sizes"] = json::array();
  j["class_representatives"] = json::array();
  for (int k = 0; k < cc.count(); ++k) {
    j["class_sizes"].push_back(cc.size(k));
    j["class_representatives"].push_back(cc.representatives[k]);
  }
  j["irreducibles"] = json::array();
  for (const auto& chi : table.irreducibles) {
    json row{{"label", chi.label}, {"degree", chi.degree()}};
    row["values"] = json::array();
    for (const auto& v : chi.values) row["values"].push_back(v.str());
    j["irreducibles"].push_back(row);
  }
  out << j.dump(2) << "\n";
}

void render_table_csv(std::ostream& out, const CharacterTable& table) {
  const auto& cc = table.group->classes();
  out << "label,degree";
  for (int k = 0; k < cc.count(); ++k) out << ",class" << k << "(size " << cc.size(k) << ")";
  out << "\n";
  for (const auto& chi : table.irreducibles) {
    out << chi.label << "," << chi.degree();
    for (const auto& v : chi.values) out << ",\"" << v.str() << "\"";
    out << "\n";
  }
}

void render_metrics(std::ostream& out, const CharacterTable& table, OutputFormat fmt,
                    int precision_bits) {
  struct Row {
    std::string label;
    long degree;
    CharacterMetrics m;
  };
  std::vector<Row> rows;
  for (const auto& chi : table.irreducibles) {
    rows.push_back({chi.label, chi.degree(), compute_metrics(chi, precision_bits)});
  }
  const std::string name = table.group->name();
  switch (fmt) {
    case OutputFormat::Text: {
      out << "# metrics for " << name << "\n";
      for (const auto& r : rows) {
        out << "  " << r.label << ": degree " << r.degree << ", l1 " << r.m.l1_norm.str()
            << ", l2^2 " << r.m.l2_norm_squared.get_str() << ", mcr "
            << r.m.max_char_ratio.str() << ", aic " << (r.m.is_aic ? "yes" : "no")
            << ", rider " << to_string(r.m.rider) << ", |Z(chi)| " << r.m.centre.order()
            << "\n";
      }
      return;
    }
    case OutputFormat::Structured: {
      json j;
      j["group"] = name;
      j["characters"] = json::array();
      for (const auto& r : rows) {
        j["characters"].push_back(json{{"label", r.label},
                                       {"degree", r.degree},
                                       {"l1_norm", eoi_json(r.m.l1_norm)},
                                       {"l2_norm_squared", r.m.l2_norm_squared.get_str()},
                                       {"mcr", eoi_json(r.m.max_char_ratio)},
                                       {"aic", r.m.is_aic},
                                       {"bai_equality", r.m.bai_equal},
                                       {"rider", to_string(r.m.rider)},
                                       {"centre_order", r.m.centre.order()},
                                       {"support_classes", r.m.support_class_indices}});
      }
      out << j.dump(2) << "\n";
      return;
    }
    case OutputFormat::Csv: {
      out << "group,char,degree,l1,mcr,aic,rider\n";
      for (const auto& r : rows) {
        out << name << "," << r.label << "," << r.degree << ",\"" << r.m.l1_norm.str()
            << "\",\"" << r.m.max_char_ratio.str() << "\"," << (r.m.is_aic ? 1 : 0) << ","
            << to_string(r.m.rider) << "\n";
      }
      return;
    }
  }
}

void render_analysis(std::ostream& out, const FamilyAnalysis& a, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Text: {
      out << "# analysis of " << a.description << "\n";
      render_report_text(out, a.zl_amenable);
      render_report_text(out, a.kernel_bai);
      render_report_text(out, a.every_max_ideal_bai);
      render_report_text(out, a.c0);
      if (a.l1_impossible) render_report_text(out, *a.l1_impossible);
      for (const auto& [p, lp] : a.lp) render_report_text(out, lp.report);
      render_report_text(out, a.l2.report);
      out << "  AM(Zl1) lower bound at horizon: " << decimal_lower(a.am_bound_at_horizon, 6)
          << "\n";
      return;
    }
    case OutputFormat::Structured: {
      json j;
      j["family"] = a.description;
      j["zl_amenable"] = report_json(a.zl_amenable);
      j["kernel_bai"] = report_json(a.kernel_bai);
      j["every_max_ideal_bai"] = report_json(a.every_max_ideal_bai);
      j["c0"] = report_json(a.c0);
      if (a.l1_impossible) j["l1_impossible"] = report_json(*a.l1_impossible);
      j["lp"] = json::array();
      for (const auto& [p, lp] : a.lp) {
        j["lp"].push_back(json{{"p", p.get_str()}, {"report", report_json(lp.report)}});
      }
      j["l2"] = report_json(a.l2.report);
      j["am_lower_bound"] = compact_str(a.am_bound_at_horizon);
      out << j.dump(2) << "\n";
      return;
    }
    case OutputFormat::Csv: {
      // Per-exponent term traces: p, index label, term, partial product.
      out << "p,index,term,partial_product\n";
      auto emit = [&](const Rational& p, const LpAnalysis& lp) {
        for (size_t i = 0; i < lp.terms.size(); ++i) {
          out << p.get_str() << "," << lp.index_labels[i] << ",\"" << lp.terms[i].str()
              << "\",\"" << lp.partial_products[i].str() << "\"\n";
        }
      };
      for (const auto& [p, lp] : a.lp) emit(p, lp);
      emit(Rational(2), a.l2);
      return;
    }
  }
}

void render_sweep(std::ostream& out, const std::string& name,
                  const std::vector<CheckResult>& results, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Text: {
      for (const auto& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << name << "  " << r.check;
        if (!r.detail.empty()) out << "  (" << r.detail << ")";
        out << "\n";
      }
      return;
    }
    case OutputFormat::Structured: {
      json j;
      j["group"] = name;
      j["checks"] = json::array();
      for (const auto& r : results) {
        j["checks"].push_back(json{{"check", r.check}, {"pass", r.pass}, {"detail", r.detail}});
      }
      out << j.dump(2) << "\n";
      return;
    }
    case OutputFormat::Csv: {
      for (const auto& r : results) {
        out << name << "," << r.check << "," << (r.pass ? 1 : 0) << ",\"" << r.detail << "\"\n";
      }
      return;
    }
  }
}

void render_problem_hits(std::ostream& out, const Rational& delta,
                         const std::vector<ProblemHit>& hits, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Text: {
      out << "# (1+" << delta.get_str() << ") d^2 >= |H| hits: " << hits.size() << "\n";
      for (const auto& h : hits) {
        out << "  " << h.group << " " << h.chi << ": degree " << h.degree << ", order "
            << h.order.get_str() << ", margin " << h.margin.get_str() << "\n";
      }
      return;
    }
    case OutputFormat::Structured: {
      json j;
      j["delta"] = delta.get_str();
      j["hits"] = json::array();
      for (const auto& h : hits) {
        j["hits"].push_back(json{{"group", h.group},
                                 {"char", h.chi},
                                 {"degree", h.degree},
                                 {"order", h.order.get_str()},
                                 {"margin", h.margin.get_str()}});
      }
      out << j.dump(2) << "\n";
      return;
    }
    case OutputFormat::Csv: {
      out << "group,char,degree,order,margin\n";
      for (const auto& h : hits) {
        out << h.group << "," << h.chi << "," << h.degree << "," << h.order.get_str() << ","
            << h.margin.get_str() << "\n";
      }
      return;
    }
  }
}

}  // namespace zl1
