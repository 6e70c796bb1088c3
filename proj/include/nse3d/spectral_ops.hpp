#pragma once

#include <numbers>
#include <vector>

#include "nse3d/spectral_field.hpp"
#include "nse3d/transform.hpp"

namespace nse3d {

/// |Omega| for Omega = (0,2pi)^3; every L2-type quantity carries this factor.
inline constexpr double kVolume = 8.0 * std::numbers::pi * std::numbers::pi * std::numbers::pi;

/// Leray projection, u_k - k (k.u_k)/|k|^2 per mode. The zero mode is left
/// untouched.
SpectralField project_leray(const SpectralField& w);

/// Gradient of a scalar given by its Fourier coefficients on the grid.
SpectralField gradient(const Grid& grid, const std::vector<Complex>& phi);

/// P(u.grad v) truncated to the retained modes. The product is evaluated on
/// the 3/2-padded grid, so it is alias free for fields on the grid and
/// (P(u.grad v), v) = 0 up to roundoff.
SpectralField nonlinear_term(const SpectralField& u, const SpectralField& v);

/// Per-thread transform for a grid; reused across calls.
Transform& transform_for(const Grid& grid);

struct NormBundle {
  double l2_sq = 0.0;      // |u|^2
  double h1_sq = 0.0;      // |grad u|^2
  double h2_sq = 0.0;      // |Lap u|^2
  double hm1_sq = 0.0;     // |u|_{H^-1}^2
  double h_half_sq = 0.0;  // |u|_{H^1/2}^2 (homogeneous)
  double l3 = 0.0;         // |u|_{L^3}, padded-grid quadrature
  double l6 = 0.0;         // |u|_{L^6}, padded-grid quadrature
};

NormBundle norms(const SpectralField& u);

/// Spectral norms only (no transforms); l3 and l6 are left at zero.
NormBundle spectral_norms(const SpectralField& u);

/// L2 inner product (u, v), real part.
double inner(const SpectralField& u, const SpectralField& v);

/// (u, v)_{H^1} = (grad u, grad v).
double inner_h1(const SpectralField& u, const SpectralField& v);

/// |u|^2 evaluated by collocation on the padded grid.
double l2_sq_quadrature(const SpectralField& u);

}  // namespace nse3d
