#include "nse3d/report_io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <sstream>

#include "nse3d/field_io.hpp"

namespace nse3d {

using nlohmann::json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

const char* flag(const Check& c) {
  if (!c.applicable) return "-";
  return c.ok ? "1" : "0";
}

// JSON has no infinities; they are written as null.
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json check_json(const Check& c) {
  if (!c.applicable) return json{{"applicable", false}};
  return json{{"ok", c.ok}, {"lhs", num(c.lhs)}, {"rhs", num(c.rhs)},
              {"slack", num(c.slack)}, {"fraction", num(c.fraction)}};
}

std::string initial_kind(InitialData::Kind k) {
  switch (k) {
    case InitialData::Kind::zero: return "zero";
    case InitialData::Kind::shear: return "shear";
    case InitialData::Kind::planar_vortex: return "planar_vortex";
    case InitialData::Kind::random_divfree: return "random";
    case InitialData::Kind::from_file: return "file";
  }
  return "zero";
}

std::string forcing_kind(ForcingSpec::Kind k) {
  switch (k) {
    case ForcingSpec::Kind::zero: return "zero";
    case ForcingSpec::Kind::fixed_modes: return "modes";
    case ForcingSpec::Kind::random_divfree: return "random";
  }
  return "zero";
}

json random_json(const RandomFieldSpec& r) {
  return json{{"seed", r.seed}, {"slope", r.slope}, {"amplitude", r.amplitude}, {"kmax", r.kmax}};
}

}  // namespace

std::string timeseries_csv(const RunReport& r) {
  std::ostringstream os;
  os << kTimeseriesHeader << '\n';
  for (const auto& row : r.rows) {
    const StepVerdict& v = row.verdict;
    const Check l2 = check_and(v.l2_recurrence, v.l2_bound);
    os << row.n << ',' << format_double(row.t) << ',' << format_double(row.norms.l2_sq) << ','
       << format_double(row.norms.h1_sq) << ',' << format_double(row.norms.h2_sq) << ','
       << format_double(row.norms.l3) << ',' << row.fp_iters << ','
       << format_double(row.energy_residual) << ',' << flag(l2) << ','
       << flag(v.h1_recurrence) << ',' << flag(v.lemma_hypotheses) << ','
       << flag(v.y1_membership) << ',' << flag(v.bound) << ',' << format_double(v.cubic.y1)
       << ',' << format_double(v.cubic.y2) << ',' << format_double(v.cubic.y_plus) << ','
       << format_double(v.slack_min()) << '\n';
  }
  return os.str();
}

json config_json(const RunConfig& c) {
  json j;
  j["grid"] = {{"n", c.n}};
  j["scheme"] = {{"scheme", std::string(to_string(c.scheme.scheme))},
                 {"k", c.scheme.k},
                 {"nu", c.scheme.nu},
                 {"fp_tol", c.scheme.fp_tol},
                 {"fp_max_iter", c.scheme.fp_max_iter},
                 {"deterministic", c.scheme.deterministic}};
  json init = {{"kind", initial_kind(c.initial.kind)}};
  if (c.initial.kind == InitialData::Kind::shear ||
      c.initial.kind == InitialData::Kind::planar_vortex) {
    init["amplitude"] = c.initial.amplitude;
  } else if (c.initial.kind == InitialData::Kind::random_divfree) {
    init.update(random_json(c.initial.random));
  } else if (c.initial.kind == InitialData::Kind::from_file) {
    init["path"] = c.initial.path;
  }
  j["initial"] = init;
  json forc = {{"kind", forcing_kind(c.forcing.kind)}};
  if (c.forcing.kind == ForcingSpec::Kind::fixed_modes) {
    json modes = json::array();
    for (const auto& m : c.forcing.modes) {
      json coeff = json::array();
      for (const auto& z : m.coeff) coeff.push_back({z.real(), z.imag()});
      modes.push_back({{"kappa", m.kappa}, {"coeff", coeff}});
    }
    forc["modes"] = modes;
  } else if (c.forcing.kind == ForcingSpec::Kind::random_divfree) {
    forc.update(random_json(c.forcing.random));
  }
  if (c.forcing.modulation) {
    const Modulation& m = *c.forcing.modulation;
    forc["modulation"] = {{"offset", m.offset}, {"scale", m.scale}, {"omega", m.omega},
                          {"phase", m.phase}};
  }
  j["forcing"] = forc;
  j["constants"] = {{"c0", c.constants.c0}, {"c1", c.constants.c1}, {"c2", c.constants.c2},
                    {"c3", c.constants.c3()}, {"c4", c.constants.c4}, {"c5", c.constants.c5}};
  json run = {{"monitor", std::string(to_string(c.monitor))},
              {"enforce_restrictions", c.enforce_restrictions},
              {"allow_over_horizon", c.allow_over_horizon},
              {"stop_on_violation", c.stop_on_violation},
              {"seed", c.seed}};
  if (c.t_end) run["t_end"] = *c.t_end;
  if (c.n_steps) run["n_steps"] = *c.n_steps;
  j["run"] = run;
  // The output directory is not echoed: reruns into another directory must
  // produce identical files.
  j["output"] = {{"snapshot_every", c.snapshot_every}};
  return j;
}

json bounds_json(const BoundsReport& b) {
  return json{{"u0_l2_sq", num(b.data.u0_l2_sq)},
              {"u0_h1_sq", num(b.data.u0_h1_sq)},
              {"f_hm1_sup_sq", num(b.data.f_hm1_sup_sq)},
              {"f_l2_sup_sq", num(b.data.f_l2_sup_sq)},
              {"K0", num(b.K0)},
              {"K1", num(b.K1)},
              {"K0_tilde", num(b.K0_tilde)},
              {"K1_tilde", num(b.K1_tilde)},
              {"K_tilde_short", num(b.K_tilde_short)},
              {"F_short", num(b.F_short)},
              {"F_full", num(b.F_full)}};
}

json horizons_json(const HorizonReport& h) {
  return json{{"z0", num(h.z0)},
              {"t_star_continuous", num(h.t_star_continuous)},
              {"t_star_semi", num(h.t_star_semi)},
              {"t_f_star", num(h.t_f_star)},
              {"blowup_time", num(h.blowup_time)}};
}

json restriction_json(const Restriction& r) {
  json cons = json::array();
  for (const auto& c : r.constraints) {
    cons.push_back({{"tag", c.tag}, {"k_max", num(c.k_max)}, {"k_independent", c.k_independent}});
  }
  return json{{"variant", std::string(to_string(r.variant))},
              {"k_max", num(r.k_max)},
              {"binding", r.binding.empty() ? json(nullptr) : json(r.binding)},
              {"constraints", cons}};
}

json report_json(const RunReport& r) {
  json j;
  j["config"] = config_json(r.config);
  j["initial_norms"] = {{"l2_sq", num(r.initial_norms.l2_sq)},
                        {"h1_sq", num(r.initial_norms.h1_sq)},
                        {"h2_sq", num(r.initial_norms.h2_sq)},
                        {"hm1_sq", num(r.initial_norms.hm1_sq)},
                        {"l3", num(r.initial_norms.l3)}};
  j["bounds"] = bounds_json(r.bounds);
  j["horizons"] = horizons_json(r.horizons);
  json table = json::object();
  for (const auto& e : r.restrictions) {
    const std::string key(to_string(e.variant));
    if (e.restriction) {
      table[key] = restriction_json(*e.restriction);
    } else {
      table[key] = {{"variant", key}, {"infeasible", e.infeasible}, {"binding", e.infeasible_tag}};
    }
  }
  j["k_max_table"] = table;
  j["termination"] = std::string(to_string(r.termination));
  j["message"] = r.message;
  j["planned_steps"] = r.planned_steps;
  j["steps_completed"] = r.rows.size();
  j["horizon"] = num(r.horizon);
  j["first_violation"] = first_violation(r);
  if (!r.rows.empty()) {
    const auto& last = r.rows.back();
    j["final"] = {{"n", last.n},
                  {"t", last.t},
                  {"l2_sq", num(last.norms.l2_sq)},
                  {"h1_sq", num(last.norms.h1_sq)},
                  {"verdict", {{"l2_recurrence", check_json(last.verdict.l2_recurrence)},
                               {"l2_bound", check_json(last.verdict.l2_bound)},
                               {"h1_recurrence", check_json(last.verdict.h1_recurrence)},
                               {"smallness", check_json(last.verdict.smallness)},
                               {"lemma_hypotheses", check_json(last.verdict.lemma_hypotheses)},
                               {"y1_membership", check_json(last.verdict.y1_membership)},
                               {"explicit_bound", check_json(last.verdict.explicit_bound)},
                               {"linf_recurrence", check_json(last.verdict.linf_recurrence)},
                               {"dtf2_posterior", check_json(last.verdict.dtf2_posterior)},
                               {"dtf2_prior", check_json(last.verdict.dtf2_prior)},
                               {"bound", check_json(last.verdict.bound)}}}};
  }
  j["wall_time_s"] = r.config.scheme.deterministic ? json(nullptr) : json(r.wall_time_s);
  return j;
}

void write_outputs(const RunReport& r) {
  namespace fs = std::filesystem;
  const fs::path dir(r.config.out_dir);
  fs::create_directories(dir);
  write_file_atomic((dir / "timeseries.csv").string(), timeseries_csv(r));
  write_file_atomic((dir / "report.json").string(), report_json(r).dump(2) + "\n");
}

}  // namespace nse3d
