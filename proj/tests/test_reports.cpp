#include <gtest/gtest.h>

#include <sstream>

#include "qspectra/report.hpp"

using namespace qspectra;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

double cell(const std::vector<TableRow>& rows, const std::string& label, const std::string& column) {
  for (const auto& row : rows)
    if (row.label == label) {
      const TableCell* c = row.cell(column);
      if (c) return c->value;
    }
  ADD_FAILURE() << "no cell " << label << "/" << column;
  return NAN;
}

}  // namespace

TEST(Tables, Table1WithinTolerance) {
  const auto rows = reproduce_table1();
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_TRUE(table_within_tolerance(rows));
  for (const auto& row : rows) {
    EXPECT_EQ(row.cells.size(), 7u);
    for (const auto& c : row.cells) {
      ASSERT_TRUE(c.expected) << row.label << " " << c.column;
      EXPECT_LE(*c.deviation, kTableTolerance) << row.label << " " << c.column;
    }
  }
}

TEST(Tables, Table1Examples) {
  const auto rows = reproduce_table1();
  EXPECT_EQ(rows.front().label, "2n=6");
  EXPECT_EQ(rows.back().label, "2n=20");
  EXPECT_NEAR(cell(rows, "2n=6", "exact"), 8.0, 5e-5);
  EXPECT_NEAR(cell(rows, "2n=6", "prism-lower"), 6.0, 5e-5);
  EXPECT_NEAR(cell(rows, "2n=6", "L-GAN1"), 6.0, 5e-5);
  EXPECT_NEAR(cell(rows, "2n=6", "L-GAN2"), 2.0, 5e-5);
  EXPECT_NEAR(cell(rows, "2n=6", "L-GAN3"), 3.4641, 5e-5);
  EXPECT_NEAR(cell(rows, "2n=10", "exact"), 14.4721, 5e-5);
  EXPECT_NEAR(cell(rows, "2n=10", "prism-lower"), 10.9646, 5e-5);
  EXPECT_NEAR(cell(rows, "2n=16", "exact"), 23.3137, 5e-5);
  EXPECT_NEAR(cell(rows, "2n=16", "prism-lower"), 18.0964, 5e-5);
}

TEST(Tables, Table2WithinTolerance) {
  const auto rows = reproduce_table2();
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_TRUE(table_within_tolerance(rows));
  for (const auto& row : rows) EXPECT_EQ(row.cells.size(), 6u);
  EXPECT_NEAR(cell(rows, "2n=6", "prism-upper"), 9.7082, 5e-5);
  EXPECT_NEAR(cell(rows, "2n=6", "U-ABR1"), 30.0, 5e-5);
  EXPECT_NEAR(cell(rows, "2n=6", "U-ABR2"), 21.9017, 5e-5);
  EXPECT_NEAR(cell(rows, "2n=8", "U-ABR2"), 29.3939, 5e-5);
  EXPECT_NEAR(cell(rows, "2n=8", "U-GAN"), 38.0, 5e-5);
  EXPECT_NEAR(cell(rows, "2n=20", "exact"), 28.9443, 5e-5);
  EXPECT_NEAR(cell(rows, "2n=20", "prism-upper"), 34.1288, 5e-5);
}

TEST(Tables, ToleranceDetectsDrift) {
  auto rows = reproduce_table1();
  rows[2].cells[0].deviation = 1e-3;
  EXPECT_FALSE(table_within_tolerance(rows));
  EXPECT_TRUE(table_within_tolerance(rows, 2e-3));
}

TEST(Verify, CountsAtSmallOrders) {
  const VerifySummary s3 = verify_exhaustive(3);
  EXPECT_EQ(s3.labeled_graphs_at_max_order, 8u);
  EXPECT_EQ(s3.graphs_checked, 1u + 2 + 8);
  EXPECT_TRUE(s3.clean());
  const VerifySummary s5 = verify_exhaustive(5);
  EXPECT_EQ(s5.labeled_graphs_at_max_order, 1024u);
  EXPECT_EQ(s5.graphs_checked, 1u + 2 + 8 + 64 + 1024);
  EXPECT_TRUE(s5.clean());
}

TEST(Verify, SixIsClean) {
  const VerifySummary s = verify_exhaustive(6);
  EXPECT_EQ(s.labeled_graphs_at_max_order, 32768u);
  EXPECT_TRUE(s.violations.empty());
  EXPECT_TRUE(s.lemma_failures.empty());
  // K_2..K_6 are the only connected graphs with two distinct Q-eigenvalues.
  EXPECT_EQ(s.connected_two_eigenvalue_graphs, s.connected_complete_graphs);
  EXPECT_EQ(s.connected_complete_graphs, 5u);
}

TEST(Verify, WorkerCountDoesNotChangeResults) {
  const VerifySummary one = verify_exhaustive(5, {1});
  const VerifySummary many = verify_exhaustive(5, {4});
  EXPECT_EQ(one.workers, 1u);
  EXPECT_EQ(one.graphs_checked, many.graphs_checked);
  EXPECT_EQ(one.bound_evaluations, many.bound_evaluations);
  ASSERT_EQ(one.equality_mismatches.size(), many.equality_mismatches.size());
  for (std::size_t i = 0; i < one.equality_mismatches.size(); ++i) {
    EXPECT_EQ(one.equality_mismatches[i].graph6, many.equality_mismatches[i].graph6);
    EXPECT_EQ(one.equality_mismatches[i].bound_id, many.equality_mismatches[i].bound_id);
  }
}

TEST(Verify, RangeErrors) {
  EXPECT_THROW(verify_exhaustive(0), std::invalid_argument);
  EXPECT_THROW(verify_exhaustive(kMaxExhaustiveOrder + 1), std::invalid_argument);
  EXPECT_THROW(verify_sampled(5, 1, 0, 3), std::invalid_argument);
  EXPECT_THROW(verify_sampled(5, 1, 4, 3), std::invalid_argument);
}

TEST(Verify, SampledIsReproducible) {
  const VerifySummary a = verify_sampled(100, 42, 7, 10);
  const VerifySummary b = verify_sampled(100, 42, 7, 10, {1});
  EXPECT_EQ(a.graphs_checked, 100u);
  EXPECT_TRUE(a.clean());
  EXPECT_EQ(a.bound_evaluations, b.bound_evaluations);
  const auto g1 = random_graphs(20, 9, 3, 8);
  const auto g2 = random_graphs(20, 9, 3, 8);
  EXPECT_EQ(g1, g2);
}

TEST(Analyze, TriangleFromGraph6MatchesBuilt) {
  const std::string a = render(analyze(parse_graph6("Bw")), OutputFormat::Json);
  const std::string b = render(analyze(complete_graph(3)), OutputFormat::Json);
  EXPECT_EQ(a, b);
  const AnalysisReport r = analyze(complete_graph(3));
  EXPECT_NEAR(r.analysis.qe, 4.0, 1e-9);
  const auto& cor4 = r.bounds[6];
  EXPECT_EQ(cor4.id, BoundId::LowerCor4);
  EXPECT_NEAR(cor4.value, 4.0, 1e-9);
  EXPECT_TRUE(cor4.equality.tight);
}

TEST(Analyze, Edgeless) {
  const AnalysisReport r = analyze(empty_graph(4));
  EXPECT_EQ(r.analysis.qe, 0.0);
  EXPECT_EQ(r.energy.e, 0.0);
  for (const auto& b : r.bounds) EXPECT_EQ(b.applicable, b.id == BoundId::UpperAbr1);
  const nlohmann::json j = to_json(r);
  EXPECT_EQ(j["energies"]["qe"].get<double>(), 0.0);
}

TEST(Json, SchemaAndKeys) {
  const nlohmann::json j = to_json(analyze(build_family(FamilySpec::crown(3))));
  EXPECT_EQ(j["schema_version"].get<int>(), kReportSchemaVersion);
  for (const char* key : {"graph", "stats", "structure", "spectra", "energies", "gamma", "c_parameter",
                          "bounds", "lemmas", "q_pattern", "srg", "cubic_bounds"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["graph"]["graph6"].get<std::string>(), to_graph6(build_family(FamilySpec::crown(3))));
  EXPECT_EQ(j["bounds"].size(), kAllBounds.size());
  EXPECT_EQ(j["bounds"][5]["id"].get<std::string>(), "L-THM1");
  EXPECT_TRUE(j["bounds"][5]["equality"]["tight"].get<bool>());
  EXPECT_EQ(j["q_pattern"]["prediction"].get<std::string>(), "crown");
  EXPECT_EQ(j["cubic_bounds"].is_null(), false);
}

TEST(Json, RoundTripsThroughParser) {
  const std::string text = render(analyze(build_family(FamilySpec::prism(5))), OutputFormat::Json);
  const nlohmann::json j = nlohmann::json::parse(text);
  EXPECT_NEAR(j["energies"]["qe"].get<double>(), analyze(build_family(FamilySpec::prism(5))).analysis.qe,
              0.0);
}

TEST(Csv, Shape) {
  const std::string text = render(analyze(build_family(FamilySpec::star(5))), OutputFormat::Csv);
  const auto rows = lines(text);
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows.front(), "section,name,value");
  for (const auto& row : rows) {
    std::size_t commas = 0;
    bool quoted = false;
    for (char c : row) {
      if (c == '"') quoted = !quoted;
      if (c == ',' && !quoted) ++commas;
    }
    EXPECT_EQ(commas, 2u) << row;
  }
  EXPECT_NE(text.find("graph,graph6," + to_graph6(build_family(FamilySpec::star(5)))), std::string::npos);
}

TEST(Csv, TableShape) {
  const auto rows = lines(render_table(reproduce_table2(), OutputFormat::Csv));
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows.front(), "label,column,value,expected,deviation");
  EXPECT_EQ(rows.size(), 1u + 8 * 6);
}

TEST(Text, FourDecimals) {
  EXPECT_EQ(format_fixed4(14.47213595), "14.4721");
  EXPECT_EQ(format_fixed4(-0.00001), "0.0000");
  EXPECT_EQ(format_fixed4(3.0), "3.0000");
  const std::string table = render_table(reproduce_table1(), OutputFormat::Text);
  EXPECT_NE(table.find("14.4721"), std::string::npos);
  EXPECT_NE(table.find("10.9646"), std::string::npos);
}

TEST(Output, FormatNames) {
  EXPECT_EQ(output_format_from_string("json"), OutputFormat::Json);
  EXPECT_EQ(output_format_from_string("csv"), OutputFormat::Csv);
  EXPECT_EQ(output_format_from_string("text"), OutputFormat::Text);
  EXPECT_THROW(output_format_from_string("xml"), std::invalid_argument);
}

TEST(Determinism, ReportsAreByteIdentical) {
  const Graph g = build_family(FamilySpec::prism(7));
  for (OutputFormat f : {OutputFormat::Json, OutputFormat::Csv, OutputFormat::Text})
    EXPECT_EQ(render(analyze(g), f), render(analyze(g), f));
  EXPECT_EQ(render_verify(verify_exhaustive(4, {3}), OutputFormat::Csv).size(),
            render_verify(verify_exhaustive(4, {1}), OutputFormat::Csv).size());
}
