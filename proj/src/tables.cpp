#include "qspectra/tables.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "qspectra/bounds.hpp"
#include "qspectra/families.hpp"
#include "qspectra_table_data.hpp"

namespace qspectra {

namespace {

using ExpectedTable = std::map<std::string, std::map<std::string, double>, std::less<>>;

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

ExpectedTable parse_expected(std::string_view csv) {
  ExpectedTable table;
  std::stringstream in{std::string(csv)};
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_commas(line);
    if (header.empty()) {
      header = std::move(fields);
      continue;
    }
    auto& row = table[fields.front()];
    for (std::size_t i = 1; i < fields.size() && i < header.size(); ++i)
      row[header[i]] = std::stod(fields[i]);
  }
  return table;
}

void push_cell(TableRow& row, const ExpectedTable& expected, std::string column, double value) {
  TableCell cell{std::move(column), value, std::nullopt, std::nullopt};
  if (auto r = expected.find(row.label); r != expected.end()) {
    if (auto c = r->second.find(cell.column); c != r->second.end()) {
      cell.expected = c->second;
      cell.deviation = std::fabs(value - c->second);
    }
  }
  row.cells.push_back(std::move(cell));
}

template <typename Fill>
std::vector<TableRow> build_rows(std::string_view csv, Fill&& fill) {
  const ExpectedTable expected = parse_expected(csv);
  std::vector<TableRow> rows;
  for (std::size_t n = 3; n <= 10; ++n) {
    TableRow row;
    row.cycle_length = n;
    row.label = "2n=" + std::to_string(2 * n);
    const GraphAnalysis a(build_family(FamilySpec::prism(n)));
    row.exact_qe = a.qe;
    push_cell(row, expected, "exact", a.qe);
    fill(row, a, [&](std::string column, double value) {
      push_cell(row, expected, std::move(column), value);
    });
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

const TableCell* TableRow::cell(std::string_view column) const {
  for (const auto& c : cells)
    if (c.column == column) return &c;
  return nullptr;
}

double TableRow::max_deviation() const {
  double worst = 0.0;
  for (const auto& c : cells)
    if (c.deviation) worst = std::max(worst, *c.deviation);
  return worst;
}

std::vector<TableRow> reproduce_table1() {
  return build_rows(embedded::kTable1ExpectedCsv, [](TableRow& row, const GraphAnalysis& a,
                                                     auto&& add) {
    for (BoundId id : {BoundId::LowerGan1, BoundId::LowerGan2, BoundId::LowerGan3,
                       BoundId::LowerGan4})
      add(std::string(to_string(id)), evaluate_bound(a, id).value);
    const BoundResult gan5 = evaluate_bound(a, BoundId::LowerGan5);
    add("L-GAN5", gan5.variants.empty() ? gan5.value : gan5.variants.front().second);
    add("prism-lower", prism_bounds(row.cycle_length).lower);
  });
}

std::vector<TableRow> reproduce_table2() {
  return build_rows(embedded::kTable2ExpectedCsv, [](TableRow& row, const GraphAnalysis& a,
                                                     auto&& add) {
    for (BoundId id : {BoundId::UpperAbr1, BoundId::UpperAbr2, BoundId::UpperLi,
                       BoundId::UpperGan})
      add(std::string(to_string(id)), evaluate_bound(a, id).value);
    add("prism-upper", prism_bounds(row.cycle_length).upper);
  });
}

bool table_within_tolerance(const std::vector<TableRow>& rows, double tolerance) {
  for (const auto& row : rows) {
    for (const auto& c : row.cells)
      if (!c.deviation || *c.deviation > tolerance) return false;
  }
  return !rows.empty();
}

}  // namespace qspectra
