#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spdc/csv.hpp"
#include "spdc/interference.hpp"
#include "spdc/nonlinearity.hpp"
#include "spdc/svg.hpp"

namespace spdc {

struct SweepSpec {
  std::string variable;  // tau | d | aperture_b | r | delta
  double start = 0.0;    // SI
  double stop = 0.0;
  int steps = 0;
};

struct OutputSpec {
  std::string csv_path;
  std::string svg_path;  // empty = no SVG
};

struct RunConfig {
  std::string kind;  // "visibility" | "state_function"
  std::string label;
  std::optional<NonlinearityProfile> profile;
  // resolved variants (label, system); a plain run has one unnamed variant
  std::vector<std::pair<std::string, TwoCrystalSystem>> variants;
  AnalyzerSpec analyzers;
  SweepSpec sweep;
  int quadrature_order = 64;
  OutputSpec output;
  nlohmann::json canonical;  // normalized payload echoed into CSV headers
};

/// Parses and fully validates; throws ConfigError listing every violation.
RunConfig parse_config(const nlohmann::json& payload);

/// Collects all violations instead of stopping at the first.
std::vector<std::string> validate_config(const nlohmann::json& payload);

std::vector<std::string> preset_names();
nlohmann::json preset_payload(const std::string& name);

struct RunResult {
  CsvTable table;
  std::vector<SvgSeries> series;
  std::string summary;  // one line: min/max V and crossing count
};

/// Evaluates the sweep. Honors SPDC_WORKERS for parallel evaluation;
/// output ordering is deterministic regardless of worker count.
RunResult execute(const RunConfig& config);

}  // namespace spdc
