#include "nse3d/cli.hpp"

#include <cmath>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nse3d/comparison.hpp"
#include "nse3d/config_file.hpp"
#include "nse3d/cubic.hpp"
#include "nse3d/errors.hpp"
#include "nse3d/harness.hpp"
#include "nse3d/report_io.hpp"
#include "nse3d/restrictions.hpp"

namespace nse3d {
namespace {

std::string F(double v) { return format_double(v); }

struct Globals {
  std::string config;
  std::vector<std::string> sets;
  bool deterministic = false;
  std::string out;
};

RunConfig load(const Globals& g) {
  RunConfig c = load_config(g.config, g.sets);
  if (g.deterministic) c.scheme.deterministic = true;
  if (!g.out.empty()) c.out_dir = g.out;
  return c;
}

int exit_code(Termination t) {
  switch (t) {
    case Termination::completed:
    case Termination::horizon_reached: return kExitOk;
    case Termination::bound_violated: return kExitBoundViolated;
    case Termination::nonconvergence: return kExitNonconvergence;
  }
  return kExitOk;
}

std::string violation(const RunReport& r) {
  const long v = first_violation(r);
  return v < 0 ? "none" : std::to_string(v);
}

int cmd_run(const Globals& g, std::ostream& out) {
  const RunConfig cfg = load(g);
  const RunReport r = run(cfg);
  out << "termination=" << to_string(r.termination) << " steps=" << r.rows.size() << '/'
      << r.planned_steps;
  if (!r.rows.empty()) {
    const StepRow& last = r.rows.back();
    out << " t=" << F(last.t) << " l2_sq=" << F(last.norms.l2_sq)
        << " h1_sq=" << F(last.norms.h1_sq);
  }
  out << " first_violation=" << violation(r);
  if (!cfg.out_dir.empty()) out << " out=" << cfg.out_dir;
  out << '\n';
  if (!r.message.empty()) out << r.message << '\n';
  return exit_code(r.termination);
}

int cmd_sweep(const Globals& g, const std::vector<double>& ks,
              const std::vector<std::string>& schemes, unsigned threads, std::ostream& out) {
  const RunConfig base = load(g);
  std::vector<RunConfig> configs;
  const std::vector<double> kv = ks.empty() ? std::vector<double>{base.scheme.k} : ks;
  std::vector<Scheme> sv;
  for (const auto& s : schemes) sv.push_back(scheme_from_string(s));
  if (sv.empty()) sv.push_back(base.scheme.scheme);
  for (Scheme s : sv) {
    for (double k : kv) {
      RunConfig c = base;
      c.scheme.k = k;
      c.scheme.scheme = s;
      if (!variant_matches(c.monitor, s)) c.monitor = Variant::none;
      if (!base.out_dir.empty()) {
        c.out_dir = (std::filesystem::path(base.out_dir) /
                     ("run_" + std::to_string(configs.size())))
                        .string();
      }
      configs.push_back(std::move(c));
    }
  }
  const auto entries = sweep(configs, threads);
  out << "k,scheme,variant,result,first_violation\n";
  int code = kExitOk;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const RunConfig& c = configs[i];
    const SweepEntry& e = entries[i];
    out << F(c.scheme.k) << ',' << to_string(c.scheme.scheme) << ',' << to_string(c.monitor)
        << ',';
    int ec = kExitOk;
    if (e.report) {
      out << to_string(e.report->termination) << ',' << violation(*e.report) << '\n';
      ec = exit_code(e.report->termination);
    } else if (e.infeasible) {
      out << "infeasible(" << e.infeasible_tag << "),-\n";
      ec = kExitInfeasible;
    } else {
      out << "error,-\n";
      ec = kExitConfig;
    }
    if (code == kExitOk) code = ec;
  }
  return code;
}

void print_restriction(const Restriction& r, double k, const BoundsReport& b,
                       const ConstantsSet& consts, std::ostream& out) {
  out << "variant " << to_string(r.variant) << '\n';
  out << "tag,k_max,ok_at_k,inequality\n";
  for (const auto& c : r.constraints) {
    const Check chk = evaluate_constraint(c.tag, k, b, consts);
    out << c.tag << ',' << (c.k_independent ? "any" : F(c.k_max)) << ','
        << (chk.ok ? "yes" : "no") << ',' << constraint_description(c.tag) << '\n';
  }
  out << "k_max=" << F(r.k_max) << " binding=" << (r.binding.empty() ? "none" : r.binding)
      << '\n';
}

/// Data norms given on the command line replace those of the configured fields.
struct NormOverrides {
  std::optional<double> u0_l2_sq, u0_h1_sq, f_hm1_sq, f_l2_sq;
};

int cmd_admissible_dt(const Globals& g, const std::string& variant, const NormOverrides& ov,
                      std::ostream& out, std::ostream& err) {
  const RunConfig cfg = load(g);
  BoundsReport b = config_bounds(cfg);
  if (ov.u0_l2_sq || ov.u0_h1_sq || ov.f_hm1_sq || ov.f_l2_sq) {
    DataNorms d = b.data;
    for (const auto& [src, dst] : {std::pair{&ov.u0_l2_sq, &d.u0_l2_sq},
                                   std::pair{&ov.u0_h1_sq, &d.u0_h1_sq},
                                   std::pair{&ov.f_hm1_sq, &d.f_hm1_sup_sq},
                                   std::pair{&ov.f_l2_sq, &d.f_l2_sup_sq}}) {
      if (!*src) continue;
      if (!(**src >= 0.0) || !std::isfinite(**src)) {
        throw ConfigError("data norms must be finite and >= 0");
      }
      *dst = **src;
    }
    b = compute_bounds(d, cfg.scheme.nu, cfg.constants);
  }
  std::vector<Variant> vs;
  if (!variant.empty()) {
    vs.push_back(variant_from_string(variant));
  } else if (cfg.monitor != Variant::none) {
    vs.push_back(cfg.monitor);
  } else {
    vs = {Variant::semi_small, Variant::semi_short, Variant::full_small, Variant::full_short};
  }
  int code = kExitOk;
  for (Variant v : vs) {
    if (v == Variant::none) throw ConfigError("variant 'none' has no restrictions");
    try {
      print_restriction(dt_restrictions(b, cfg.constants, v), cfg.scheme.k, b, cfg.constants,
                        out);
    } catch (const Infeasible& e) {
      err << to_string(v) << ": infeasible, violated " << e.constraint() << ": " << e.what()
          << '\n';
      out << "variant " << to_string(v) << "\ninfeasible binding=" << e.constraint() << '\n';
      code = kExitInfeasible;
    }
  }
  return code;
}

struct CubicArgs {
  std::optional<double> x, grad_prev, f_l2;
  double nu = 1.0, k = 0.01, c0 = 1.0, c4 = 1.0;
};

int cmd_cubic(const CubicArgs& a, std::ostream& out) {
  ConstantsSet c;
  c.c0 = a.c0;
  c.c4 = a.c4;
  c.validate();
  CubicAnalysis r;
  if (a.x) {
    r = cubic_from_x(*a.x, a.nu, a.k, c);
  } else {
    r = cubic_analyze(a.grad_prev.value_or(0.0), a.f_l2.value_or(0.0), a.nu, a.k, c);
  }
  out << "x=" << F(r.x) << '\n'
      << "G(y)=" << F(r.cubic_coeff) << "*y^3 - " << F(r.linear_coeff) << "*y + " << F(r.x)
      << '\n'
      << "y_plus=" << F(r.y_plus) << " y_minus=" << F(r.y_minus)
      << " G(y_plus)=" << F(r.g_at_y_plus) << '\n'
      << "y0=" << F(r.y0) << '\n';
  if (r.degenerate) out << "degenerate: x = 0, roots 0 and +-sqrt(linear/cubic)\n";
  if (r.has_positive_roots) {
    out << "y1=" << F(r.y1) << " y2=" << F(r.y2) << '\n';
  } else {
    out << "no positive roots; G(y_plus) >= 0\n";
  }
  out << "dtf1=" << (r.dtf1 ? "holds" : "violated") << '\n';
  if (!r.has_positive_roots && !r.dtf1) out << "no positive roots; dtf1 violated\n";
  out << "a=" << F(r.a) << " dtf3=" << (r.dtf3 ? "holds" : "violated")
      << " y_star=" << F(r.y_star) << '\n';
  return kExitOk;
}

int cmd_gronwall(double b, double x0, double r, long n, std::ostream& out) {
  if (!(b > 0.0)) throw InvalidArgument("b must be > 0");
  if (n < 0) throw InvalidArgument("n must be >= 0");
  out << "envelope=" << F(gronwall_envelope(b, x0, r, n)) << '\n';
  return kExitOk;
}

int cmd_compare(double z0, double nu, double c4, double k, std::optional<double> t, long max_rows,
                std::ostream& out) {
  if (t) {
    out << "z(t)^2=" << F(comparison_ode(z0, nu, c4, *t)) << '\n';
    return kExitOk;
  }
  if (!(k > 0.0)) throw InvalidArgument("k must be > 0");
  const double tb = comparison_flow_blowup_time(z0, nu, c4);
  long steps = max_rows;
  if (std::isfinite(tb)) {
    // rows strictly before the blow-up of the majorant
    const long before = static_cast<long>(std::ceil(tb / k)) - 1;
    steps = std::min(steps, std::max(before, 0L));
  }
  const std::vector<double> zeta = comparison_seq(z0, nu, c4, k, steps);
  out << "blowup_time=" << F(tb) << '\n';
  out << "n,t,zeta,z,ok\n";
  bool all = true;
  for (long n = 0; n <= steps; ++n) {
    const double tn = static_cast<double>(n) * k;
    const double z = comparison_flow(z0, nu, c4, tn);
    const bool ok = zeta[static_cast<std::size_t>(n)] <= z;
    all = all && ok;
    out << n << ',' << F(tn) << ',' << F(zeta[static_cast<std::size_t>(n)]) << ',' << F(z) << ','
        << (ok ? 1 : 0) << '\n';
  }
  out << (all ? "zeta_n <= z(t_n) on every row\n" : "zeta_n > z(t_n) on some row\n");
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudospectral Navier-Stokes runs and stability calculators", "nse3d"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config, "Configuration file");
  app.add_option("--set", g.sets, "Override section.key=value (repeatable)")
      ->allow_extra_args(false);
  app.add_flag("--deterministic", g.deterministic, "Bitwise-reproducible run, no wall time");
  app.add_option("--out", g.out, "Output directory");

  auto* run_cmd = app.add_subcommand("run", "Run a configured trajectory with monitors");
  run_cmd->fallthrough();

  auto* sweep_cmd = app.add_subcommand("sweep", "Run the config over several timesteps/schemes");
  sweep_cmd->fallthrough();
  std::vector<double> ks;
  std::vector<std::string> schemes;
  unsigned threads = 1;
  sweep_cmd->add_option("--k", ks, "Timesteps")->delimiter(',');
  sweep_cmd->add_option("--schemes", schemes, "Schemes (semi_implicit, fully_implicit)")
      ->delimiter(',');
  sweep_cmd->add_option("--threads", threads, "Concurrent runs (0: all cores)");

  auto* dt_cmd = app.add_subcommand("admissible-dt", "Per-constraint admissible timesteps");
  dt_cmd->fallthrough();
  std::string variant;
  dt_cmd->add_option("--variant", variant,
                     "semi_small, semi_short, full_small or full_short (default: run.monitor, "
                     "or all)");
  NormOverrides nov;
  dt_cmd->add_option("--u0-l2-sq", nov.u0_l2_sq, "Use this |u0|^2 instead of the config's");
  dt_cmd->add_option("--u0-h1-sq", nov.u0_h1_sq, "Use this |grad u0|^2 instead of the config's");
  dt_cmd->add_option("--f-hm1-sq", nov.f_hm1_sq, "Use this |f|^2_{Linf(H-1)} instead");
  dt_cmd->add_option("--f-l2-sq", nov.f_l2_sq, "Use this |f|^2_{Linf(L2)} instead");

  auto* cubic_cmd = app.add_subcommand("cubic", "Roots and extrema of the one-step cubic");
  cubic_cmd->fallthrough();
  CubicArgs ca;
  cubic_cmd->add_option("--x", ca.x, "x directly");
  cubic_cmd->add_option("--grad-prev", ca.grad_prev, "|grad u^{n-1}|^2 (when --x is absent)");
  cubic_cmd->add_option("--f-l2", ca.f_l2, "|f|^2_{Linf(L2)} (when --x is absent)");
  cubic_cmd->add_option("--nu", ca.nu, "Viscosity")->capture_default_str();
  cubic_cmd->add_option("--k", ca.k, "Timestep")->capture_default_str();
  cubic_cmd->add_option("--c0", ca.c0, "Poincare constant")->capture_default_str();
  cubic_cmd->add_option("--c4", ca.c4, "Sobolev constant c4")->capture_default_str();

  auto* gr_cmd = app.add_subcommand("gronwall", "Envelope of (1+b)x_n <= x_{n-1} + r");
  gr_cmd->fallthrough();
  double gb = 1.0, gx0 = 1.0, gr = 0.0;
  long gn = 10;
  gr_cmd->add_option("--b", gb, "Damping b > 0")->capture_default_str();
  gr_cmd->add_option("--x0", gx0, "Initial value")->capture_default_str();
  gr_cmd->add_option("--r", gr, "Sup of the source r_j")->capture_default_str();
  gr_cmd->add_option("--n", gn, "Step index")->capture_default_str();

  auto* cmp_cmd = app.add_subcommand("compare", "Discrete comparison sequence vs its ODE");
  cmp_cmd->fallthrough();
  double z0 = 1.0, cnu = 1.0, cc4 = 1.0, ck = 0.01;
  std::optional<double> ct;
  long rows = 100000;
  cmp_cmd->add_option("--z0", z0, "Initial value")->capture_default_str();
  cmp_cmd->add_option("--nu", cnu, "Viscosity")->capture_default_str();
  cmp_cmd->add_option("--c4", cc4, "Sobolev constant c4")->capture_default_str();
  cmp_cmd->add_option("--k", ck, "Timestep of the sequence")->capture_default_str();
  cmp_cmd->add_option("--t", ct, "Print z(t)^2 of the ODE at this time instead of a table");
  cmp_cmd->add_option("--max-rows", rows, "Row cap of the table")->capture_default_str();

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    if (!app.get_subcommands().empty()) {
      // subcommand help omits the options of the parent
      out << "\nGLOBAL OPTIONS:\n";
      for (const CLI::Option* o : app.get_options()) {
        if (o->get_name() == "--help") continue;
        out << "  " << o->get_name() << "  " << o->get_description() << '\n';
      }
    }
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*run_cmd) return cmd_run(g, out);
    if (*sweep_cmd) return cmd_sweep(g, ks, schemes, threads, out);
    if (*dt_cmd) return cmd_admissible_dt(g, variant, nov, out, err);
    if (*cubic_cmd) return cmd_cubic(ca, out);
    if (*gr_cmd) return cmd_gronwall(gb, gx0, gr, gn, out);
    if (*cmp_cmd) return cmd_compare(z0, cnu, cc4, ck, ct, rows, out);
  } catch (const InfeasibleConfig& e) {
    err << "infeasible (" << e.constraint() << "): " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const Infeasible& e) {
    err << "infeasible (" << e.constraint() << "): " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const NonConvergence& e) {
    err << "nonconvergence: " << e.what() << '\n';
    return kExitNonconvergence;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace nse3d
