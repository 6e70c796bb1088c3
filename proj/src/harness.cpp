#include "nse3d/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <sstream>
#include <thread>

#include "nse3d/errors.hpp"
#include "nse3d/field_io.hpp"
#include "nse3d/report_io.hpp"

namespace nse3d {

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::completed: return "completed";
    case Termination::horizon_reached: return "horizon_reached";
    case Termination::nonconvergence: return "nonconvergence";
    case Termination::bound_violated: return "bound_violated";
  }
  return "completed";
}

namespace {

StateNorms state(const NormBundle& nb) { return {nb.l2_sq, nb.h1_sq, nb.h2_sq, nb.l3}; }

std::string snapshot_name(long n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snap_%08ld.fld", n);
  return buf;
}

void check_admissible(const RunConfig& cfg, const BoundsReport& bounds) {
  const Variant v = cfg.monitor;
  if (v == Variant::none || !cfg.enforce_restrictions) return;
  Restriction r;
  try {
    r = dt_restrictions(bounds, cfg.constants, v);
  } catch (const Infeasible& e) {
    throw InfeasibleConfig(std::string(to_string(v)) + ": " + e.what(), e.constraint());
  }
  const double k = cfg.scheme.k;
  std::string failing;
  for (const auto& [tag, chk] : evaluate_constraints(v, k, bounds, cfg.constants)) {
    if (!chk.ok) failing += (failing.empty() ? "" : ",") + tag;
  }
  if (!failing.empty()) {
    std::ostringstream os;
    os << to_string(v) << ": timestep k=" << format_double(k)
       << " exceeds the admissible k_max=" << format_double(r.k_max) << " (violated: " << failing
       << "; binding: " << r.binding << ")";
    throw InfeasibleConfig(os.str(), failing.substr(0, failing.find(',')));
  }
}

}  // namespace

DataNorms data_norms(const RunConfig& cfg, const NormBundle& u0, const Forcing& forcing) {
  const long steps = cfg.steps();
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(steps));
  for (long n = 1; n <= steps; ++n) times.push_back(static_cast<double>(n) * cfg.scheme.k);
  // Sup norms of f over the evaluation times; a run with no steps uses t = 0.
  const ForcingNorms fsup = forcing.sup_norms(times.empty() ? std::vector<double>{0.0} : times);
  return {u0.l2_sq, u0.h1_sq, fsup.hm1_sq, fsup.l2_sq};
}

BoundsReport config_bounds(const RunConfig& cfg) {
  cfg.validate();
  const Grid grid(cfg.n);
  const NormBundle u0 = spectral_norms(make_field(grid, cfg.initial));
  return compute_bounds(data_norms(cfg, u0, Forcing(grid, cfg.forcing)), cfg.scheme.nu,
                        cfg.constants);
}

RunReport run(const RunConfig& cfg) {
  const auto wall0 = std::chrono::steady_clock::now();
  cfg.validate();
  const Grid grid(cfg.n);
  const SchemeConfig& sc = cfg.scheme;
  const double k = sc.k;

  RunReport rep;
  rep.config = cfg;
  SpectralField u = make_field(grid, cfg.initial);
  const Forcing forcing(grid, cfg.forcing);

  long steps = cfg.steps();
  rep.initial_norms = norms(u);
  rep.bounds = compute_bounds(data_norms(cfg, rep.initial_norms, forcing), sc.nu, cfg.constants);
  rep.horizons = compute_horizons(rep.bounds, cfg.constants);
  for (Variant v : {Variant::semi_small, Variant::semi_short, Variant::full_small,
                    Variant::full_short}) {
    RestrictionEntry e;
    e.variant = v;
    try {
      e.restriction = dt_restrictions(rep.bounds, cfg.constants, v);
    } catch (const Infeasible& ex) {
      e.infeasible = ex.what();
      e.infeasible_tag = ex.constraint();
    }
    rep.restrictions.push_back(std::move(e));
  }

  check_admissible(cfg, rep.bounds);

  rep.horizon = std::numeric_limits<double>::infinity();
  if (cfg.monitor == Variant::semi_short) rep.horizon = rep.horizons.t_star_semi;
  if (cfg.monitor == Variant::full_short) rep.horizon = rep.horizons.t_f_star;
  bool truncated = false;
  if (std::isfinite(rep.horizon) && !cfg.allow_over_horizon) {
    long last = 0;
    while (last < steps && static_cast<double>(last + 1) * k <= rep.horizon) ++last;
    if (last < steps) {
      steps = last;
      truncated = true;
    }
  }
  rep.planned_steps = steps;

  namespace fs = std::filesystem;
  const bool write = !cfg.out_dir.empty();
  if (write) fs::create_directories(cfg.out_dir);
  const auto snapshot = [&](long n, const SpectralField& f) {
    if (write && cfg.snapshot_every > 0 && n % cfg.snapshot_every == 0) {
      write_field((fs::path(cfg.out_dir) / snapshot_name(n)).string(), f);
    }
  };
  snapshot(0, u);

  NormBundle prev_norms = rep.initial_norms;
  rep.termination = truncated ? Termination::horizon_reached : Termination::completed;
  for (long n = 1; n <= steps; ++n) {
    const double t = static_cast<double>(n) * k;
    const SpectralField f_n = forcing.at(t);
    StepResult res{SpectralField(grid)};
    try {
      res = step(u, f_n, sc);
    } catch (const NonConvergence& e) {
      rep.termination = Termination::nonconvergence;
      rep.message = "step " + std::to_string(n) + ": " + e.what();
      break;
    }
    StepRow row;
    row.n = n;
    row.t = t;
    row.norms = norms(res.u_new);
    row.fp_iters = res.fp_iters;
    row.fp_residual = res.fp_residual;
    row.energy_residual = res.energy_identity_residual;
    row.increment_h1_sq = res.increment_h1_sq;

    const ForcingNorms fn = forcing.norms_at(t);
    StepInputs in;
    in.scheme = sc.scheme;
    in.variant = cfg.monitor;
    in.k = k;
    in.nu = sc.nu;
    in.prev = state(prev_norms);
    in.next = state(row.norms);
    in.f_hm1_sq = fn.hm1_sq;
    in.f_l2_sq = fn.l2_sq;
    row.verdict = step_verdict(in, cfg.constants, rep.bounds);

    u = std::move(res.u_new);
    prev_norms = row.norms;
    const bool violated = row.verdict.bound.applicable && !row.verdict.bound.ok;
    rep.rows.push_back(std::move(row));
    snapshot(n, u);
    if (violated) {
      rep.termination = Termination::bound_violated;
      rep.message = "theorem bound violated at step " + std::to_string(n);
      if (cfg.stop_on_violation) break;
    }
  }
  rep.final_field = u;
  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
  if (write) write_outputs(rep);
  return rep;
}

std::vector<SweepEntry> sweep(const std::vector<RunConfig>& configs, unsigned threads) {
  std::vector<SweepEntry> out(configs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(configs.size(), 1));
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      try {
        out[i].report = run(configs[i]);
      } catch (const InfeasibleConfig& e) {
        out[i].error = e.what();
        out[i].infeasible = true;
        out[i].infeasible_tag = e.constraint();
      } catch (const std::exception& e) {
        out[i].error = e.what();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

long first_violation(const RunReport& r) {
  for (const auto& row : r.rows) {
    if (!row.verdict.all_ok()) return row.n;
  }
  return -1;
}

double observed_order(double err_coarse, double err_fine, double ratio) {
  return std::log(err_coarse / err_fine) / std::log(ratio);
}

double richardson_order(const SpectralField& u_k, const SpectralField& u_k2,
                        const SpectralField& u_k4) {
  const double d1 = std::sqrt(spectral_norms(u_k - u_k2).l2_sq);
  const double d2 = std::sqrt(spectral_norms(u_k2 - u_k4).l2_sq);
  return observed_order(d1, d2, 2.0);
}

}  // namespace nse3d
