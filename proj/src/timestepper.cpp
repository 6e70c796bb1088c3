#include "nse3d/timestepper.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <sstream>
#include <string>

#include "nse3d/errors.hpp"
#include "nse3d/spectral_ops.hpp"

namespace nse3d {

void SchemeConfig::validate() const {
  if (!(k > 0.0) || !std::isfinite(k)) throw InvalidArgument("timestep k must be > 0");
  if (!(nu > 0.0) || !std::isfinite(nu)) throw InvalidArgument("viscosity nu must be > 0");
  if (!(fp_tol > 0.0)) throw InvalidArgument("fp_tol must be > 0");
  if (fp_max_iter < 1) throw InvalidArgument("fp_max_iter must be >= 1");
}

SpectralField stokes_solve(const SpectralField& rhs, double nu_k) {
  const Grid& g = rhs.grid();
  SpectralField out(g);
  for_each_mode(g, [&](std::size_t idx, const Wavevector& k) {
    const double d = 1.0 + nu_k * double(Grid::norm_sq(k));
    const CVec3 v = rhs.at(idx);
    out.set(idx, {v[0] / d, v[1] / d, v[2] / d});
  });
  return out;
}

namespace {

double h1_norm(const SpectralField& u) { return std::sqrt(spectral_norms(u).h1_sq); }

// Picard iteration u <- (I - nu k Lap)^{-1} [u_prev + k f - k P(a(u).grad u)]
// where a(u) is the advecting velocity (lagged or current).
template <class Advect>
StepResult picard(const SpectralField& u_prev, const SpectralField& f_n,
                  const SchemeConfig& cfg, Advect&& advect) {
  cfg.validate();
  require_same_grid(u_prev, f_n);
  SpectralField base = u_prev;
  base.axpy(cfg.k, f_n);
  const double nu_k = cfg.nu * cfg.k;

  SpectralField current = u_prev;
  double residual = INFINITY;
  int iters = 0;
  for (int it = 1; it <= cfg.fp_max_iter; ++it) {
    iters = it;
    SpectralField rhs = base;
    rhs.axpy(-cfg.k, advect(current));
    SpectralField next = stokes_solve(rhs, nu_k);

    const double incr = h1_norm(next - current);
    const double scale = h1_norm(next);
    residual = incr == 0.0 ? 0.0 : incr / std::max(scale, DBL_MIN);
    if (!std::isfinite(residual)) {
      residual = INFINITY;  // the iterates blew up
      break;
    }
    current = std::move(next);
    if (residual <= cfg.fp_tol) {
      StepResult r{std::move(current), it, residual, 0.0, 0.0};
      r.increment_h1_sq = spectral_norms(r.u_new - u_prev).h1_sq;
      r.energy_identity_residual = energy_identity_residual(u_prev, r.u_new, f_n, cfg);
      return r;
    }
  }
  std::ostringstream os;
  os << to_string(cfg.scheme) << " inner iteration "
     << (std::isfinite(residual) ? "did not converge" : "diverged") << " after " << iters
     << " iterations (relative H1 increment " << residual << ", k=" << cfg.k
     << "); reduce the timestep";
  throw NonConvergence(os.str(), iters, residual);
}

}  // namespace

StepResult semi_implicit_step(const SpectralField& u_prev, const SpectralField& f_n,
                              const SchemeConfig& cfg) {
  return picard(u_prev, f_n, cfg,
                [&](const SpectralField& u) { return nonlinear_term(u_prev, u); });
}

StepResult fully_implicit_step(const SpectralField& u_prev, const SpectralField& f_n,
                               const SchemeConfig& cfg) {
  return picard(u_prev, f_n, cfg,
                [](const SpectralField& u) { return nonlinear_term(u, u); });
}

StepResult step(const SpectralField& u_prev, const SpectralField& f_n, const SchemeConfig& cfg) {
  return cfg.scheme == Scheme::semi_implicit ? semi_implicit_step(u_prev, f_n, cfg)
                                             : fully_implicit_step(u_prev, f_n, cfg);
}

double energy_identity_residual(const SpectralField& u_prev, const SpectralField& u_new,
                                const SpectralField& f_n, const SchemeConfig& cfg) {
  const NormBundle prev = spectral_norms(u_prev);
  const NormBundle next = spectral_norms(u_new);
  const double jump = spectral_norms(u_new - u_prev).l2_sq;
  const double lhs = next.l2_sq + jump + 2.0 * cfg.nu * cfg.k * next.h1_sq;
  const double rhs = prev.l2_sq + 2.0 * cfg.k * inner(f_n, u_new);
  return std::abs(lhs - rhs) / std::max(prev.l2_sq, 1e-300);
}

}  // namespace nse3d
