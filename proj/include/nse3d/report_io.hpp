#pragma once

#include <string>

#include <json.hpp>

#include "nse3d/harness.hpp"

namespace nse3d {

/// Shortest decimal that round-trips to the same double ("inf", "-inf", "nan"
/// for non-finite values).
std::string format_double(double v);

inline constexpr const char* kTimeseriesHeader =
    "n,t,l2_sq,h1_sq,h2_sq,l3,fp_iters,energy_residual,verdict_l2,verdict_h1,verdict_lemma,"
    "verdict_y1,verdict_bound,y1,y2,y_plus,slack_min";

/// One row per step. Verdict columns are 1/0, or "-" when not applicable;
/// verdict_l2 combines the L2 recurrence and the uniform L2 bound.
std::string timeseries_csv(const RunReport& r);

nlohmann::json config_json(const RunConfig& c);
nlohmann::json bounds_json(const BoundsReport& b);
nlohmann::json horizons_json(const HorizonReport& h);
nlohmann::json restriction_json(const Restriction& r);

/// Config echo, bounds, horizons, termination, per-constraint k_max table and
/// a run summary. Wall time is omitted for deterministic runs.
nlohmann::json report_json(const RunReport& r);

/// Writes timeseries.csv and report.json into r.config.out_dir atomically.
void write_outputs(const RunReport& r);

}  // namespace nse3d
