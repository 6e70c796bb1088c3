#pragma once

#include "nse3d/scheme.hpp"
#include "nse3d/spectral_field.hpp"

namespace nse3d {

struct SchemeConfig {
  double k = 0.01;    // timestep
  double nu = 1.0;    // viscosity
  Scheme scheme = Scheme::semi_implicit;
  double fp_tol = 1e-12;  // relative H1 increment of the inner iteration
  int fp_max_iter = 100;
  bool deterministic = false;

  /// Throws InvalidArgument unless k, nu, fp_tol > 0 and fp_max_iter >= 1.
  void validate() const;
};

struct StepResult {
  SpectralField u_new;
  int fp_iters = 0;
  double fp_residual = 0.0;
  double energy_identity_residual = 0.0;
  double increment_h1_sq = 0.0;  // |grad(u^n - u^{n-1})|^2
};

/// (u^n - u^{n-1})/k + P(u^{n-1}.grad u^n) = nu Lap u^n + f^n, solved by
/// Picard iteration started from u^{n-1}. Throws NonConvergence.
StepResult semi_implicit_step(const SpectralField& u_prev, const SpectralField& f_n,
                              const SchemeConfig& cfg);

/// (u^n - u^{n-1})/k + P(u^n.grad u^n) = nu Lap u^n + f^n, solved by Picard
/// iteration started from u^{n-1}. Throws NonConvergence.
StepResult fully_implicit_step(const SpectralField& u_prev, const SpectralField& f_n,
                               const SchemeConfig& cfg);

/// Dispatches on cfg.scheme.
StepResult step(const SpectralField& u_prev, const SpectralField& f_n, const SchemeConfig& cfg);

/// Relative residual of the discrete L2 energy identity
///   |u^n|^2 + |u^n - u^{n-1}|^2 + 2 nu k |grad u^n|^2 = |u^{n-1}|^2 + 2k (f^n, u^n),
/// normalised by max(|u^{n-1}|^2, tiny).
double energy_identity_residual(const SpectralField& u_prev, const SpectralField& u_new,
                                const SpectralField& f_n, const SchemeConfig& cfg);

/// (I - nu k Lap)^{-1} applied mode by mode.
SpectralField stokes_solve(const SpectralField& rhs, double nu_k);

}  // namespace nse3d
