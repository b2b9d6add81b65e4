#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "qspectra/bounds.hpp"
#include "qspectra/report.hpp"
#include "qspectra/tables.hpp"
#include "qspectra/tolerance.hpp"
#include "qspectra/verify.hpp"

namespace {

using namespace qspectra;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitViolations = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphFormat graph_format(const std::string& name) {
  if (name == "auto") return GraphFormat::Auto;
  if (name == "g6" || name == "graph6") return GraphFormat::Graph6;
  if (name == "edgelist") return GraphFormat::EdgeList;
  throw UsageError("unknown input format: " + name);
}

std::size_t to_size(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("expected a non-negative integer, got '" + s + "'");
  }
  if (pos != s.size()) throw UsageError("expected a non-negative integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

// kind params... ; "copies g <kind> <params>" nests.
FamilySpec parse_family(const std::vector<std::string>& words, std::size_t& at) {
  if (at >= words.size()) throw UsageError("missing family kind");
  const std::string kind = words[at++];
  auto next = [&]() {
    if (at >= words.size()) throw UsageError("missing parameter for " + kind);
    return to_size(words[at++]);
  };
  if (kind == "complete") return FamilySpec::complete(next());
  if (kind == "complete-bipartite") {
    const std::size_t a = next();
    return FamilySpec::complete_bipartite(a, next());
  }
  if (kind == "star") return FamilySpec::star(next());
  if (kind == "cycle") return FamilySpec::cycle(next());
  if (kind == "path") return FamilySpec::path(next());
  if (kind == "matching") return FamilySpec::matching(next());
  if (kind == "crown") return FamilySpec::crown(next());
  if (kind == "prism") return FamilySpec::prism(next());
  if (kind == "copies") {
    const std::size_t g = next();
    return FamilySpec::copies(g, parse_family(words, at));
  }
  throw UsageError("unknown family kind: " + kind);
}

int run_analyze(const std::string& path, const std::string& in_format, OutputFormat out) {
  const auto graphs = parse_graphs(read_source(path), graph_format(in_format));
  if (out == OutputFormat::Json && graphs.size() != 1) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : graphs) arr.push_back(to_json(analyze(g)));
    std::cout << arr.dump(2) << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i > 0 && out == OutputFormat::Text) std::cout << "\n";
    std::cout << render(analyze(graphs[i]), out);
  }
  return kExitOk;
}

int run_bounds(const std::string& path, const std::string& in_format, const std::string& only,
               OutputFormat out) {
  std::vector<BoundId> ids;
  if (only.empty()) {
    ids.assign(kAllBounds.begin(), kAllBounds.end());
  } else {
    std::stringstream ss(only);
    std::string name;
    while (std::getline(ss, name, ','))
      if (!name.empty()) ids.push_back(bound_from_string(name));
  }
  for (const auto& g : parse_graphs(read_source(path), graph_format(in_format))) {
    const GraphAnalysis a(g);
    std::vector<BoundResult> results;
    for (BoundId id : ids) results.push_back(evaluate_bound(a, id));
    std::cout << render_bounds(results, a.qe, out);
  }
  return kExitOk;
}

int run_table(bool first, OutputFormat out) {
  const auto rows = first ? reproduce_table1() : reproduce_table2();
  std::cout << render_table(rows, out);
  return table_within_tolerance(rows) ? kExitOk : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra, energies and signless Laplacian energy bounds of simple graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qspectra 1.0");

  std::string out_name = "text";
  std::string in_format = "auto";
  std::string path;
  std::string only;
  std::vector<std::string> family_words;
  std::string emit = "report";
  std::size_t max_n = 6;
  std::size_t min_n = 1;
  std::size_t sample = 0;
  std::uint64_t seed = 1;
  std::size_t workers = 0;

  const std::vector<std::string> outs = {"json", "csv", "text"};
  const std::vector<std::string> ins = {"auto", "g6", "graph6", "edgelist"};

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for each graph in a file");
  analyze_cmd->add_option("input", path, "graph6 or edge-list file, '-' for stdin")->required();
  analyze_cmd->add_option("--format", in_format, "Input format")->check(CLI::IsMember(ins));
  analyze_cmd->add_option("--out", out_name, "Output format")->check(CLI::IsMember(outs));

  auto* family_cmd = app.add_subcommand("family", "Build a named family and report on it");
  family_cmd->add_option("spec", family_words,
                         "complete N | complete-bipartite A B | star N | cycle N | path N | "
                         "matching K | crown R | prism N | copies G <spec>")
      ->required();
  family_cmd->add_option("--emit", emit, "report, g6 or edgelist")
      ->check(CLI::IsMember({"report", "g6", "edgelist"}));
  family_cmd->add_option("--out", out_name, "Output format")->check(CLI::IsMember(outs));

  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate the bound catalog");
  bounds_cmd->add_option("input", path, "graph6 or edge-list file, '-' for stdin")->required();
  bounds_cmd->add_option("--format", in_format, "Input format")->check(CLI::IsMember(ins));
  bounds_cmd->add_option("--only", only, "Comma-separated bound ids");
  bounds_cmd->add_option("--out", out_name, "Output format")->check(CLI::IsMember(outs));

  auto* table1_cmd = app.add_subcommand("table1", "Prism lower-bound table against published values");
  table1_cmd->add_option("--out", out_name, "Output format")->check(CLI::IsMember(outs));
  auto* table2_cmd = app.add_subcommand("table2", "Prism upper-bound table against published values");
  table2_cmd->add_option("--out", out_name, "Output format")->check(CLI::IsMember(outs));

  auto* verify_cmd = app.add_subcommand("verify", "Check bounds and spectral facts over many graphs");
  verify_cmd->add_option("--max-n", max_n, "Largest order (exhaustive: at most 7)");
  verify_cmd->add_option("--min-n", min_n, "Smallest order when sampling");
  auto* sample_opt = verify_cmd->add_option("--sample", sample, "Random graphs instead of all");
  verify_cmd->add_option("--seed", seed, "Seed for --sample")->needs(sample_opt);
  verify_cmd->add_option("--workers", workers, "Worker threads, 0 for all cores");
  verify_cmd->add_option("--out", out_name, "Output format")->check(CLI::IsMember(outs));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (tolerance_env_invalid()) {
    std::cerr << "error: QSPECTRA_TOL must be a positive number\n";
    return kExitUsage;
  }

  try {
    const OutputFormat out = output_format_from_string(out_name);
    if (*analyze_cmd) return run_analyze(path, in_format, out);
    if (*bounds_cmd) return run_bounds(path, in_format, only, out);
    if (*table1_cmd) return run_table(true, out);
    if (*table2_cmd) return run_table(false, out);
    if (*family_cmd) {
      std::size_t at = 0;
      const FamilySpec spec = parse_family(family_words, at);
      if (at != family_words.size()) throw UsageError("trailing family parameters");
      const Graph g = build_family(spec);
      if (emit == "g6")
        std::cout << to_graph6(g) << '\n';
      else if (emit == "edgelist")
        std::cout << to_edge_list(g);
      else
        std::cout << render(analyze(g), out);
      return kExitOk;
    }
    if (*verify_cmd) {
      const VerifyOptions options{workers};
      const VerifySummary s = sample > 0 ? verify_sampled(sample, seed, min_n, max_n, options)
                                         : verify_exhaustive(max_n, options);
      std::cout << render_verify(s, out);
      return s.clean() ? kExitOk : kExitViolations;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": "
              << e.what() << '\n';
    return kExitParse;
  } catch (const UnknownBoundError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
