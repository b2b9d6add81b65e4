#include "qspectra/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "qspectra/tolerance.hpp"

namespace qspectra {

using nlohmann::json;

AnalysisReport analyze(const Graph& g) {
  AnalysisReport r{GraphAnalysis(g), a_spectrum(g), l_spectrum(g), {}, {}, {}, {}, {}, {}};
  const auto& an = r.analysis;
  r.energy.qe = an.qe;
  if (an.stats.m > 0) {
    r.energy.e = deviation_energy(r.a.values, 0.0);
    r.energy.le = deviation_energy(r.l.values, an.stats.average_degree());
  }
  r.energy.regular = an.shape.regular;
  r.energy.qe_equals_e = std::fabs(r.energy.qe - r.energy.e) <= tol::bound_gap(r.energy.qe);
  r.bounds = all_bounds(an);
  r.lemmas = check_spectral_lemmas(an.g, an.stats, an.shape, an.q);
  r.pattern = classify_q_pattern(an.g);
  r.srg = detect_srg(an.g);
  if (an.shape.regular && an.shape.regularity_degree == 3u) r.cubic = cubic_bounds(an.g, an.gamma);
  return r;
}

OutputFormat output_format_from_string(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw std::invalid_argument("unknown output format: " + std::string(name));
}

std::string format_fixed4(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  if (std::string_view(buf) == "-0.0000") return "0.0000";
  return buf;
}

namespace {

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json spectrum_json(const Spectrum& s) {
  json groups = json::array();
  for (const auto& g : s.groups) groups.push_back({{"value", g.value}, {"multiplicity", g.multiplicity}});
  return {{"values", s.values},
          {"groups", groups},
          {"sweeps", s.report.sweeps},
          {"converged", s.report.converged},
          {"error_bound", s.report.eigenvalue_error_bound()}};
}

json equality_json(const EqualityDiagnosis& e) {
  return {{"tight", e.tight},
          {"condition", e.condition},
          {"condition_met", e.condition_met ? json(*e.condition_met) : json(nullptr)},
          {"consistent", e.consistent},
          {"near_tight_but_strict", e.near_tight_but_strict}};
}

json lemma_json(const FactCheck& c) {
  return {{"fact", std::string(to_string(c.fact))},
          {"applicable", c.applicable},
          {"holds", c.holds},
          {"lhs", c.lhs},
          {"rhs", c.rhs},
          {"slack", c.slack},
          {"equality_observed", c.equality_observed},
          {"equality_expected",
           c.equality_expected ? json(*c.equality_expected) : json(nullptr)},
          {"equality_consistent", c.equality_consistent},
          {"note", c.note}};
}

json pattern_json(const QPattern& p) {
  return {{"r", p.r},
          {"count_2r", p.count_2r},
          {"count_r_plus_1", p.count_r_plus_1},
          {"count_r_minus_1", p.count_r_minus_1},
          {"count_zero", p.count_zero},
          {"residue", p.residue},
          {"prediction", std::string(to_string(p.prediction))},
          {"complete_copies", p.complete_copies},
          {"crown_copies", p.crown_copies},
          {"arithmetic_consistent", p.arithmetic_consistent},
          {"verified", p.verified},
          {"note", p.note}};
}

json srg_json(const SrgDetection& s) {
  json out = {{"is_srg", s.params.has_value()},
              {"is_s_nr", s.is_s_nr},
              {"three_eigenvalue_criterion", s.three_eigenvalue_criterion}};
  if (s.params)
    out["params"] = {{"n", s.params->n}, {"r", s.params->r}, {"a", s.params->a}, {"c", s.params->c}};
  return out;
}

// RFC 4180 quoting for fields that need it.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string full_precision(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter() { out_ << "section,name,value\n"; }
  void row(const std::string& section, const std::string& name, const std::string& value) {
    out_ << csv_field(section) << ',' << csv_field(name) << ',' << csv_field(value) << '\n';
  }
  void row(const std::string& section, const std::string& name, double value) {
    row(section, name, full_precision(value));
  }
  void row(const std::string& section, const std::string& name, bool value) {
    row(section, name, std::string(value ? "true" : "false"));
  }
  void row(const std::string& section, const std::string& name, std::size_t value) {
    row(section, name, std::to_string(value));
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

void bound_csv(CsvWriter& csv, const BoundResult& b) {
  const std::string id(to_string(b.id));
  csv.row("bound", id + ".direction", std::string(to_string(b.direction)));
  csv.row("bound", id + ".applicable", b.applicable);
  if (!b.applicable) {
    csv.row("bound", id + ".reason", b.reason);
    return;
  }
  csv.row("bound", id + ".strictness", std::string(to_string(b.strictness)));
  csv.row("bound", id + ".value", b.value);
  csv.row("bound", id + ".gap", b.gap);
  csv.row("bound", id + ".case", b.case_label);
  csv.row("bound", id + ".tight", b.equality.tight);
  csv.row("bound", id + ".consistent", b.equality.consistent);
}

std::string bound_status(const BoundResult& b) {
  if (!b.applicable) return "n/a (" + b.reason + ")";
  std::string s = b.equality.tight ? "tight" : "";
  if (b.equality.near_tight_but_strict) s += " (stated strict)";
  if (!b.equality.consistent && !b.equality.near_tight_but_strict) s += " equality-mismatch";
  return s;
}

void bounds_text(std::ostringstream& out, const std::vector<BoundResult>& bounds) {
  char line[256];
  std::snprintf(line, sizeof line, "%-8s %-6s %-10s %12s %12s  %s\n", "bound", "dir", "kind",
                "value", "gap", "status");
  out << line;
  for (const auto& b : bounds) {
    const std::string value = b.applicable ? format_fixed4(b.value) : "-";
    const std::string gap = b.applicable ? format_fixed4(b.gap) : "-";
    std::snprintf(line, sizeof line, "%-8s %-6s %-10s %12s %12s  %s\n",
                  std::string(to_string(b.id)).c_str(),
                  std::string(to_string(b.direction)).c_str(),
                  std::string(to_string(b.strictness)).c_str(), value.c_str(), gap.c_str(),
                  bound_status(b).c_str());
    out << line;
  }
}

std::string join_fixed4(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += format_fixed4(values[i]);
  }
  return s;
}

}  // namespace

json to_json(const BoundResult& b) {
  json out = {{"id", std::string(to_string(b.id))},
              {"direction", std::string(to_string(b.direction))},
              {"applicable", b.applicable}};
  if (!b.applicable) {
    out["reason"] = b.reason;
    return out;
  }
  out["strictness"] = std::string(to_string(b.strictness));
  out["value"] = b.value;
  out["gap"] = b.gap;
  out["case"] = b.case_label;
  out["selected_pair"] =
      b.selected_pair ? json::array({b.selected_pair->first, b.selected_pair->second}) : json(nullptr);
  out["pair_min"] = optional_json(b.pair_min);
  out["pair_max"] = optional_json(b.pair_max);
  json variants = json::object();
  for (const auto& [name, value] : b.variants) variants[name] = value;
  out["variants"] = variants;
  out["equality"] = equality_json(b.equality);
  return out;
}

json to_json(const AnalysisReport& r) {
  const auto& an = r.analysis;
  const auto& s = an.stats;
  json edges = json::array();
  for (const auto& e : an.g.edges()) edges.push_back({e.u, e.v});
  json components = json::array();
  for (std::size_t i = 0; i < an.shape.components.size(); ++i)
    components.push_back({{"vertices", an.shape.components[i]},
                          {"bipartite", static_cast<bool>(an.shape.component_bipartite[i])}});
  json bounds = json::array();
  for (const auto& b : r.bounds) bounds.push_back(to_json(b));
  json lemmas = json::array();
  for (const auto& c : r.lemmas.checks) lemmas.push_back(lemma_json(c));

  json out = {
      {"schema_version", kReportSchemaVersion},
      {"graph", {{"n", s.n}, {"m", s.m}, {"graph6", to_graph6(an.g)}, {"edges", edges}}},
      {"stats",
       {{"max_degree", s.max_degree},
        {"min_degree", s.min_degree},
        {"average_degree",
         {{"numerator", s.average_numerator()},
          {"denominator", s.average_denominator()},
          {"value", s.average_degree()}}},
        {"zagreb_m1", s.zagreb_m1}}},
      {"structure",
       {{"connected", an.shape.connected},
        {"bipartite", an.shape.bipartite()},
        {"regular", an.shape.regular},
        {"regularity_degree",
         an.shape.regularity_degree ? json(*an.shape.regularity_degree) : json(nullptr)},
        {"components", components}}},
      {"spectra",
       {{"adjacency", spectrum_json(r.a)},
        {"laplacian", spectrum_json(r.l)},
        {"signless_laplacian", spectrum_json(an.q)}}},
      {"energies",
       {{"e", r.energy.e},
        {"le", r.energy.le},
        {"qe", r.energy.qe},
        {"qe_equals_e", r.energy.qe_equals_e}}},
      {"gamma",
       {{"values", an.gamma.values},
        {"gamma1", an.gamma.gamma1},
        {"gamma_n", an.gamma.gamma_n},
        {"gamma_n_is_zero", an.gamma.gamma_n_is_zero},
        {"zero_count", an.gamma.zero_count}}},
      {"c_parameter", {{"c", int128_to_string(an.c.c)}, {"sqrt_c", an.c.sqrt_c}}},
      {"bounds", bounds},
      {"lemmas", lemmas},
      {"q_pattern", r.pattern ? pattern_json(*r.pattern) : json(nullptr)},
      {"srg", srg_json(r.srg)},
      {"cubic_bounds",
       r.cubic ? json{{"lower", r.cubic->lower},
                      {"upper", r.cubic->upper},
                      {"gamma_min", r.cubic->gamma_min},
                      {"lower_case", r.cubic->lower_case}}
               : json(nullptr)},
  };
  return out;
}

json to_json(const std::vector<TableRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json cells = json::array();
    for (const auto& c : row.cells)
      cells.push_back({{"column", c.column},
                       {"value", c.value},
                       {"expected", optional_json(c.expected)},
                       {"deviation", optional_json(c.deviation)}});
    out.push_back({{"label", row.label},
                   {"cycle_length", row.cycle_length},
                   {"exact_qe", row.exact_qe},
                   {"cells", cells}});
  }
  return {{"schema_version", kReportSchemaVersion}, {"rows", out}};
}

json to_json(const VerifySummary& s) {
  json violations = json::array();
  for (const auto& v : s.violations)
    violations.push_back({{"graph6", v.graph6}, {"bound", v.bound_id}, {"gap", v.gap}});
  json failures = json::array();
  for (const auto& f : s.lemma_failures)
    failures.push_back({{"graph6", f.graph6}, {"check", f.check}, {"detail", f.detail}});
  json mismatches = json::array();
  for (const auto& e : s.equality_mismatches)
    mismatches.push_back({{"graph6", e.graph6},
                          {"bound", e.bound_id},
                          {"tight", e.tight},
                          {"condition_met", e.condition_met}});
  return {{"schema_version", kReportSchemaVersion},
          {"max_n", s.max_n},
          {"graphs_checked", s.graphs_checked},
          {"labeled_graphs_at_max_order", s.labeled_graphs_at_max_order},
          {"bound_evaluations", s.bound_evaluations},
          {"connected_two_eigenvalue_graphs", s.connected_two_eigenvalue_graphs},
          {"connected_complete_graphs", s.connected_complete_graphs},
          {"violations", violations},
          {"lemma_failures", failures},
          {"equality_mismatches", mismatches},
          {"wall_seconds", s.wall_seconds},
          {"workers", s.workers}};
}

std::string render(const AnalysisReport& r, OutputFormat format) {
  const auto& an = r.analysis;
  if (format == OutputFormat::Json) return to_json(r).dump(2) + "\n";

  if (format == OutputFormat::Csv) {
    CsvWriter csv;
    csv.row("graph", "n", an.stats.n);
    csv.row("graph", "m", an.stats.m);
    csv.row("graph", "graph6", to_graph6(an.g));
    csv.row("stats", "max_degree", an.stats.max_degree);
    csv.row("stats", "min_degree", an.stats.min_degree);
    csv.row("stats", "average_degree", an.stats.average_degree());
    csv.row("stats", "zagreb_m1", std::to_string(an.stats.zagreb_m1));
    csv.row("structure", "connected", an.shape.connected);
    csv.row("structure", "bipartite", an.shape.bipartite());
    csv.row("structure", "regular", an.shape.regular);
    csv.row("structure", "components", an.shape.component_count());
    const Spectrum* spectra[] = {&r.a, &r.l, &an.q};
    for (const Spectrum* sp : spectra)
      for (std::size_t i = 0; i < sp->values.size(); ++i)
        csv.row("spectrum." + std::string(to_string(sp->kind)), std::to_string(i), sp->values[i]);
    csv.row("energy", "e", r.energy.e);
    csv.row("energy", "le", r.energy.le);
    csv.row("energy", "qe", r.energy.qe);
    for (std::size_t i = 0; i < an.gamma.values.size(); ++i)
      csv.row("gamma", std::to_string(i), an.gamma.values[i]);
    csv.row("gamma", "gamma_n_is_zero", an.gamma.gamma_n_is_zero);
    for (const auto& b : r.bounds) bound_csv(csv, b);
    for (const auto& c : r.lemmas.checks) {
      if (!c.applicable) continue;
      csv.row("lemma", std::string(to_string(c.fact)) + ".holds", c.holds);
      csv.row("lemma", std::string(to_string(c.fact)) + ".slack", c.slack);
    }
    if (r.pattern) csv.row("q_pattern", "prediction", std::string(to_string(r.pattern->prediction)));
    csv.row("srg", "is_srg", r.srg.params.has_value());
    csv.row("srg", "is_s_nr", r.srg.is_s_nr);
    return csv.str();
  }

  std::ostringstream out;
  out << "graph6      " << to_graph6(an.g) << '\n';
  out << "n, m        " << an.stats.n << ", " << an.stats.m << '\n';
  out << "degrees     max " << an.stats.max_degree << ", min " << an.stats.min_degree
      << ", average " << format_fixed4(an.stats.average_degree()) << ", M1 "
      << an.stats.zagreb_m1 << '\n';
  out << "structure   " << (an.shape.connected ? "connected" : "disconnected") << ", "
      << an.shape.component_count() << " component(s)"
      << (an.shape.bipartite() ? ", bipartite" : "")
      << (an.shape.regular ? ", regular" : "") << '\n';
  out << "A spectrum  " << join_fixed4(r.a.values) << '\n';
  out << "L spectrum  " << join_fixed4(r.l.values) << '\n';
  out << "Q spectrum  " << join_fixed4(an.q.values) << '\n';
  out << "gamma       " << join_fixed4(an.gamma.values)
      << (an.gamma.gamma_n_is_zero ? "  (gamma_n = 0)" : "") << '\n';
  out << "E, LE, QE   " << format_fixed4(r.energy.e) << ", " << format_fixed4(r.energy.le) << ", "
      << format_fixed4(r.energy.qe) << '\n';
  out << '\n';
  bounds_text(out, r.bounds);
  out << '\n';
  for (const auto& c : r.lemmas.checks) {
    if (!c.applicable) continue;
    out << (c.holds && c.equality_consistent ? "ok   " : "FAIL ") << to_string(c.fact)
        << (c.equality_observed ? " (equality)" : "") << '\n';
  }
  if (r.pattern) {
    out << "\nQ pattern   r=" << r.pattern->r << " 2r^" << r.pattern->count_2r << " (r+1)^"
        << r.pattern->count_r_plus_1 << " (r-1)^" << r.pattern->count_r_minus_1 << " 0^"
        << r.pattern->count_zero << ", prediction " << to_string(r.pattern->prediction);
    if (r.pattern->prediction != QPattern::Prediction::None)
      out << " g=" << r.pattern->complete_copies << " h=" << r.pattern->crown_copies
          << (r.pattern->verified ? " verified" : " unverified");
    out << '\n';
  }
  if (r.srg.params) {
    const auto& p = *r.srg.params;
    out << "SRG         (" << p.n << "," << p.r << "," << p.a << "," << p.c << ")"
        << (r.srg.is_s_nr ? ", S(n,r)" : "") << '\n';
  }
  if (r.cubic)
    out << "cubic       lower " << format_fixed4(r.cubic->lower) << " (" << r.cubic->lower_case
        << "), upper " << format_fixed4(r.cubic->upper) << '\n';
  return out.str();
}

std::string render_bounds(const std::vector<BoundResult>& bounds, double qe, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& b : bounds) arr.push_back(to_json(b));
    return json{{"schema_version", kReportSchemaVersion}, {"qe", qe}, {"bounds", arr}}.dump(2) +
           "\n";
  }
  if (format == OutputFormat::Csv) {
    CsvWriter csv;
    csv.row("energy", "qe", qe);
    for (const auto& b : bounds) bound_csv(csv, b);
    return csv.str();
  }
  std::ostringstream out;
  out << "QE = " << format_fixed4(qe) << "\n\n";
  bounds_text(out, bounds);
  return out.str();
}

std::string render_table(const std::vector<TableRow>& rows, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(rows).dump(2) + "\n";
  if (format == OutputFormat::Csv) {
    std::ostringstream out;
    out << "label,column,value,expected,deviation\n";
    for (const auto& row : rows)
      for (const auto& c : row.cells)
        out << row.label << ',' << c.column << ',' << full_precision(c.value) << ','
            << (c.expected ? full_precision(*c.expected) : "") << ','
            << (c.deviation ? full_precision(*c.deviation) : "") << '\n';
    return out.str();
  }
  std::ostringstream out;
  if (rows.empty()) return "";
  char cell[64];
  std::snprintf(cell, sizeof cell, "%-6s", "2n");
  out << cell;
  for (const auto& c : rows.front().cells) {
    std::snprintf(cell, sizeof cell, " %12s", c.column.c_str());
    out << cell;
  }
  out << "  max dev\n";
  for (const auto& row : rows) {
    std::snprintf(cell, sizeof cell, "%-6zu", 2 * row.cycle_length);
    out << cell;
    for (const auto& c : row.cells) {
      std::snprintf(cell, sizeof cell, " %12s", format_fixed4(c.value).c_str());
      out << cell;
    }
    char dev[32];
    std::snprintf(dev, sizeof dev, "  %.1e\n", row.max_deviation());
    out << dev;
  }
  return out.str();
}

std::string render_verify(const VerifySummary& s, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(s).dump(2) + "\n";
  if (format == OutputFormat::Csv) {
    CsvWriter csv;
    csv.row("summary", "max_n", s.max_n);
    csv.row("summary", "graphs_checked", s.graphs_checked);
    csv.row("summary", "labeled_graphs_at_max_order", s.labeled_graphs_at_max_order);
    csv.row("summary", "bound_evaluations", s.bound_evaluations);
    csv.row("summary", "violations", s.violations.size());
    csv.row("summary", "lemma_failures", s.lemma_failures.size());
    csv.row("summary", "equality_mismatches", s.equality_mismatches.size());
    for (const auto& v : s.violations) csv.row("violation", v.graph6 + " " + v.bound_id, v.gap);
    for (const auto& f : s.lemma_failures) csv.row("lemma_failure", f.graph6 + " " + f.check, f.detail);
    return csv.str();
  }
  std::ostringstream out;
  out << "graphs checked        " << s.graphs_checked << '\n';
  if (s.labeled_graphs_at_max_order)
    out << "labeled graphs, n=" << s.max_n << "  " << s.labeled_graphs_at_max_order << '\n';
  out << "bound evaluations     " << s.bound_evaluations << '\n';
  out << "violations            " << s.violations.size() << '\n';
  out << "lemma failures        " << s.lemma_failures.size() << '\n';
  out << "equality mismatches   " << s.equality_mismatches.size() << " (informational)\n";
  out << "two Q-eigenvalues     " << s.connected_two_eigenvalue_graphs << " connected graphs, "
      << s.connected_complete_graphs << " complete\n";
  char t[64];
  std::snprintf(t, sizeof t, "%.2f s on %zu worker(s)\n", s.wall_seconds, s.workers);
  out << "wall time             " << t;
  for (const auto& v : s.violations)
    out << "violation  " << v.graph6 << ' ' << v.bound_id << " gap " << full_precision(v.gap) << '\n';
  for (const auto& f : s.lemma_failures)
    out << "failure    " << f.graph6 << ' ' << f.check << ' ' << f.detail << '\n';
  return out.str();
}

}  // namespace qspectra
