#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nse3d/bounds.hpp"
#include "nse3d/restrictions.hpp"
#include "nse3d/run_config.hpp"
#include "nse3d/spectral_ops.hpp"
#include "nse3d/verdict.hpp"

namespace nse3d {

enum class Termination { completed, horizon_reached, nonconvergence, bound_violated };

std::string_view to_string(Termination t);

struct StepRow {
  long n = 0;
  double t = 0.0;
  NormBundle norms;
  int fp_iters = 0;
  double fp_residual = 0.0;
  double energy_residual = 0.0;
  double increment_h1_sq = 0.0;
  StepVerdict verdict;
};

/// Admissible-timestep table entry for one variant.
struct RestrictionEntry {
  Variant variant = Variant::none;
  std::optional<Restriction> restriction;
  std::string infeasible;  // message when no k is admissible
  std::string infeasible_tag;
};

struct RunReport {
  RunConfig config;
  NormBundle initial_norms;
  BoundsReport bounds;
  HorizonReport horizons;
  std::vector<RestrictionEntry> restrictions;
  std::vector<StepRow> rows;
  Termination termination = Termination::completed;
  std::string message;
  long planned_steps = 0;
  double horizon = 0.0;  // enforced stopping time, +inf if none
  double wall_time_s = 0.0;
  SpectralField final_field{Grid(4)};
};

/// Initial-data norms and sup norms of the forcing over t_n = nk, n = 1..N.
DataNorms data_norms(const RunConfig& cfg, const NormBundle& u0, const Forcing& forcing);

/// Bounds of a configuration without stepping it.
BoundsReport config_bounds(const RunConfig& cfg);

/// Runs a configured trajectory with per-step monitors and, when
/// config.out_dir is set, writes timeseries.csv, report.json and snapshots.
/// Inner-iteration failure ends the run with termination = nonconvergence.
/// Throws InfeasibleConfig before stepping when the monitored variant's
/// smallness or timestep conditions fail (and enforcement is on).
RunReport run(const RunConfig& config);

struct SweepEntry {
  std::optional<RunReport> report;
  std::string error;  // empty on success
  bool infeasible = false;
  std::string infeasible_tag;
};

/// Independent runs, `threads` at a time (0: hardware concurrency). Errors
/// are recorded per entry and never abort the sweep.
std::vector<SweepEntry> sweep(const std::vector<RunConfig>& configs, unsigned threads = 1);

/// First step at which an applicable check failed, or -1.
long first_violation(const RunReport& r);

/// log_ratio(err_coarse / err_fine) for errors at steps k and k / ratio.
double observed_order(double err_coarse, double err_fine, double ratio = 2.0);

/// Order estimate from three solutions at steps k, k/2, k/4 without a
/// reference: log2(|u_k - u_{k/2}| / |u_{k/2} - u_{k/4}|).
double richardson_order(const SpectralField& u_k, const SpectralField& u_k2,
                        const SpectralField& u_k4);

}  // namespace nse3d
