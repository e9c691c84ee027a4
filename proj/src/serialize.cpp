#include "anderson/serialize.hpp"

#include <cstdio>

namespace anderson {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

nlohmann::json certificate_json(const SymmetryCertificate& cert) {
    return nlohmann::json{
        {"perm_descriptor", cert.perm.descriptor.to_string()},
        {"order", cert.order},
        {"fixed_points", cert.fixed_points},
        {"reason", to_string(cert.reason)},
    };
}

nlohmann::json condition_report_json(const ConditionReport& r) {
    return nlohmann::json{
        {"t", r.t},
        {"min_gap", r.min_gap},
        {"min_entry", r.min_entry},
        {"simple", r.simple},
        {"nonvanishing", r.nonvanishing},
        {"gap_tol", r.gap_tol},
        {"entry_tol", r.entry_tol},
    };
}

nlohmann::json classification_json(const TorusGrid& grid, const Classification& c) {
    nlohmann::json j{
        {"schema_version", kSchemaVersion},
        {"dims", grid.dims()},
        {"verdict", to_string(c.verdict)},
        {"prime_exact_applied", c.prime_exact_applied},
    };
    j["certificate"] = c.certificate ? certificate_json(*c.certificate) : nlohmann::json();
    j["reflection_center"] =
        c.refl_center ? nlohmann::json(*c.refl_center) : nlohmann::json();
    j["t_samples"] = c.t_samples;
    nlohmann::json reports = nlohmann::json::array();
    for (const ConditionReport& r : c.reports) reports.push_back(condition_report_json(r));
    j["condition_reports"] = reports;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

nlohmann::json estimate_json(const ProbabilityEstimate& est) {
    nlohmann::json counts;
    for (int vi = 0; vi < kVerdictCount; ++vi)
        counts[to_string(static_cast<Verdict>(vi))] = est.verdict_counts[vi];
    return nlohmann::json{
        {"schema_version", kSchemaVersion},
        {"estimate", est.estimate},
        {"stderr", est.std_error},
        {"trials", est.trials},
        {"exact", est.exact},
        {"counts_by_verdict", counts},
    };
}

std::string heatmap_csv(const std::vector<HeatmapRow>& rows) {
    std::string out = "t,k,lambda,log_ipr\n";
    char buf[160];
    for (const HeatmapRow& r : rows) {
        std::snprintf(buf, sizeof(buf), "%.17g,%d,%.17g,%.17g\n", r.t, r.k, r.lambda, r.log_ipr);
        out += buf;
    }
    return out;
}

}  // namespace anderson
