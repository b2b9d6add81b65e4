#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qspectra/bounds.hpp"
#include "qspectra/energy.hpp"
#include "qspectra/families.hpp"
#include "qspectra/graph.hpp"
#include "qspectra/spectral.hpp"
#include "qspectra/tables.hpp"
#include "qspectra/verify.hpp"

namespace qspectra {

inline constexpr int kReportSchemaVersion = 1;

struct AnalysisReport {
  GraphAnalysis analysis;
  Spectrum a;
  Spectrum l;
  EnergyReport energy;
  std::vector<BoundResult> bounds;
  SpectralFactReport lemmas;
  std::optional<QPattern> pattern;
  SrgDetection srg;
  std::optional<CubicBounds> cubic;
};

AnalysisReport analyze(const Graph& g);

enum class OutputFormat { Json, Csv, Text };

/// Throws std::invalid_argument for anything but json, csv, text.
OutputFormat output_format_from_string(std::string_view name);

// Human-readable numbers: 4 decimals. Machine output keeps full precision.
std::string format_fixed4(double v);

nlohmann::json to_json(const AnalysisReport& r);
nlohmann::json to_json(const BoundResult& b);
nlohmann::json to_json(const std::vector<TableRow>& rows);
nlohmann::json to_json(const VerifySummary& s);

std::string render(const AnalysisReport& r, OutputFormat format);
std::string render_bounds(const std::vector<BoundResult>& bounds, double qe, OutputFormat format);
std::string render_table(const std::vector<TableRow>& rows, OutputFormat format);
std::string render_verify(const VerifySummary& s, OutputFormat format);

}  // namespace qspectra
