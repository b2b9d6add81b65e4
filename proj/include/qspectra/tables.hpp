#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qspectra {

struct TableCell {
  std::string column;  // "exact", a bound id, or "prism-lower"/"prism-upper"
  double value = 0.0;
  std::optional<double> expected;
  std::optional<double> deviation;  // |value - expected|
};

struct TableRow {
  std::string label;         // "2n=6"
  std::size_t cycle_length = 0;  // n of C_n x P_2
  double exact_qe = 0.0;
  std::vector<TableCell> cells;

  const TableCell* cell(std::string_view column) const;
  double max_deviation() const;
};

/// Published tables are printed to 4 decimals.
inline constexpr double kTableTolerance = 5e-4;

/// QE of C_n x P_2 for 2n = 6..20 against the cited lower bounds and the
/// closed-form prism lower bound. The L-GAN5 column is the general
/// (non-bipartite) formula, matching the published column.
std::vector<TableRow> reproduce_table1();

/// Same prisms against the cited upper bounds and the prism upper bound.
std::vector<TableRow> reproduce_table2();

bool table_within_tolerance(const std::vector<TableRow>& rows, double tolerance = kTableTolerance);

}  // namespace qspectra
