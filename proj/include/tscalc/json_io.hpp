#pragma once

#include "tscalc/config.hpp"
#include "tscalc/scalar.hpp"
#include "tscalc/scale.hpp"
#include "tscalc/series.hpp"

#include <json.hpp>

#include <string>

namespace tscalc {

/// {"type":"real"} | {"type":"uniform","offset":"0","step":"1/2"} |
/// {"type":"finite","points":["0","1","3/2","4"]}
TimeScale scale_from_json(const nlohmann::json& j);
nlohmann::json scale_to_json(const TimeScale& scale);

/// {"alpha":"1/2","t0":"0","scale":{...},
///  "a":{"rule":"geometric","p":"1"},
///  "b":{"rule":"explicit","values":["1","1/2","1/4"]},
///  "policy":{"max_terms":10000,"abs_tol":1e-12}}
SeriesSpec series_spec_from_json(const nlohmann::json& j, const Config& config);

CoefficientRule coefficient_rule_from_json(const nlohmann::json& j);

/// Partial overrides of the defaults; unknown keys rejected.
Config config_from_json(const nlohmann::json& j);

/// Reads a config file when path is non-empty, then applies the
/// TSCALC_ABS_TOL environment override to the truncation tolerance.
Config load_config(const std::string& path);

nlohmann::json convergence_report_to_json(const ConvergenceReport& report);

/// Exact values render as "p/q" strings (or {"re","im"} objects when
/// complex); approximate ones as JSON numbers.
nlohmann::json scalar_to_json(const Scalar& value);

nlohmann::json parse_json_text(const std::string& text);
nlohmann::json read_json_file(const std::string& path);

}  // namespace tscalc
