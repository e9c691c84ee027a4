#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "anderson/classify.hpp"
#include "anderson/probability.hpp"
#include "anderson/spectral.hpp"
#include "anderson/symmetry.hpp"

namespace anderson {

inline constexpr int kSchemaVersion = 1;

// 17 significant digits, enough to round-trip a double; used everywhere a
// float is printed so reruns stay byte-identical.
std::string format_double(double x);

nlohmann::json certificate_json(const SymmetryCertificate& cert);
nlohmann::json condition_report_json(const ConditionReport& r);
nlohmann::json classification_json(const TorusGrid& grid, const Classification& c);
nlohmann::json estimate_json(const ProbabilityEstimate& est);

// Header "t,k,lambda,log_ipr" plus one line per row.
std::string heatmap_csv(const std::vector<HeatmapRow>& rows);

}  // namespace anderson
