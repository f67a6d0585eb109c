#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "fotf/analysis.hpp"
#include "fotf/approx.hpp"
#include "fotf/timedomain.hpp"

namespace fotf {

/// Transfer-function JSON: {"base_v": int, "num": [...], "den": [...]},
/// coefficients ascending in powers of w = s^(1/base_v).
nlohmann::json tf_to_json(const CommensurateTf& tf);
CommensurateTf tf_from_json(const nlohmann::json& j);

nlohmann::json margin_report_to_json(const MarginReport& rep);
nlohmann::json stability_report_to_json(const StabilityReport& rep);
nlohmann::json internal_stability_to_json(const InternalStabilityReport& rep);
nlohmann::json fit_report_to_json(const FitReport& rep);
nlohmann::json metrics_to_json(const StepMetrics& m);

/// Bode CSV: header omega_rad_s,mag_db,phase_deg.
std::string bode_csv(const FrequencyResponse& resp);

/// Trace CSV: header t_s,y.
std::string trace_csv(const StepResponse& resp);

/// Serialize a double with 17 significant digits (lossless round trip).
std::string format_double(double x);

CommensurateTf load_tf(const std::string& path_or_inline_json);

}  // namespace fotf
