#include "nse3d/field_factory.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "nse3d/errors.hpp"
#include "nse3d/field_io.hpp"
#include "nse3d/spectral_ops.hpp"

namespace nse3d {
namespace {

SpectralField random_shape(const Grid& grid, const RandomFieldSpec& spec) {
  if (spec.kmax < 1 || spec.kmax > grid.kmax()) {
    throw InvalidArgument("random field kmax=" + std::to_string(spec.kmax) +
                          " must lie in [1, " + std::to_string(grid.kmax()) + "]");
  }
  if (!(spec.amplitude >= 0.0) || !std::isfinite(spec.amplitude)) {
    throw InvalidArgument("random field amplitude must be finite and non-negative");
  }
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  SpectralField raw(grid);
  const int kmax2 = spec.kmax * spec.kmax;
  // Storage order is fixed, so the draw sequence (and the field) depends only
  // on the seed.
  for_each_mode(grid, [&](std::size_t, const Wavevector& k) {
    const int k2 = Grid::norm_sq(k);
    if (k2 == 0 || k2 > kmax2 || !Grid::canonical(k)) return;
    const double env = std::pow(double(k2), -0.5 * spec.slope);
    CVec3 v;
    for (auto& c : v) {
      const double re = normal(rng);
      const double im = normal(rng);
      c = env * Complex(re, im);
    }
    raw.set_pair(k, v);
  });
  return project_leray(raw);
}

}  // namespace

SpectralField random_divfree(const Grid& grid, const RandomFieldSpec& spec) {
  SpectralField u = random_shape(grid, spec);
  const double h1 = std::sqrt(spectral_norms(u).h1_sq);
  if (h1 > 0.0) u *= spec.amplitude / h1;
  return u;
}

SpectralField random_divfree_l2(const Grid& grid, const RandomFieldSpec& spec) {
  SpectralField u = random_shape(grid, spec);
  const double l2 = std::sqrt(spectral_norms(u).l2_sq);
  if (l2 > 0.0) u *= spec.amplitude / l2;
  return u;
}

SpectralField shear_field(const Grid& grid, double amplitude) {
  SpectralField u(grid);
  // sin z = (e^{iz} - e^{-iz}) / 2i
  u.set_pair({0, 0, 1}, {Complex(0.0, -0.5 * amplitude), Complex{}, Complex{}});
  return u;
}

SpectralField planar_vortex_field(const Grid& grid, double amplitude) {
  SpectralField u(grid);
  u.set_pair({0, 1, 0}, {Complex(0.0, 0.5 * amplitude), Complex{}, Complex{}});
  u.set_pair({1, 0, 0}, {Complex{}, Complex(0.0, -0.5 * amplitude), Complex{}});
  return u;
}

SpectralField make_field(const Grid& grid, const InitialData& spec) {
  switch (spec.kind) {
    case InitialData::Kind::zero:
      return SpectralField(grid);
    case InitialData::Kind::shear:
      return shear_field(grid, spec.amplitude);
    case InitialData::Kind::planar_vortex:
      return planar_vortex_field(grid, spec.amplitude);
    case InitialData::Kind::random_divfree:
      return random_divfree(grid, spec.random);
    case InitialData::Kind::from_file: {
      SpectralField u = read_field(spec.path);
      if (!(u.grid() == grid)) {
        throw GridMismatch("field file " + spec.path + " has n=" +
                           std::to_string(u.grid().n()) + ", run uses n=" +
                           std::to_string(grid.n()));
      }
      return u;
    }
  }
  throw InvalidArgument("unknown initial data kind");
}

double Modulation::operator()(double t) const {
  return offset + scale * std::sin(omega * t + phase);
}

Forcing::Forcing(const Grid& grid, const ForcingSpec& spec)
    : spec_(spec), base_(grid), zero_(true) {
  switch (spec.kind) {
    case ForcingSpec::Kind::zero:
      break;
    case ForcingSpec::Kind::fixed_modes: {
      SpectralField raw(grid);
      for (const auto& m : spec.modes) raw.set_pair(m.kappa, m.coeff);
      base_ = project_leray(raw);
      break;
    }
    case ForcingSpec::Kind::random_divfree:
      base_ = random_divfree_l2(grid, spec.random);
      break;
  }
  const NormBundle nb = spectral_norms(base_);
  base_norms_ = {nb.hm1_sq, nb.l2_sq};
  zero_ = nb.l2_sq == 0.0;
}

double Forcing::amplitude(double t) const {
  return spec_.modulation ? (*spec_.modulation)(t) : 1.0;
}

SpectralField Forcing::at(double t) const {
  SpectralField f = base_;
  const double a = amplitude(t);
  if (a != 1.0) f *= a;
  return f;
}

ForcingNorms Forcing::norms_at(double t) const {
  const double a = amplitude(t);
  return {a * a * base_norms_.hm1_sq, a * a * base_norms_.l2_sq};
}

ForcingNorms Forcing::sup_norms(const std::vector<double>& times) const {
  ForcingNorms s;
  for (double t : times) {
    const ForcingNorms n = norms_at(t);
    s.hm1_sq = std::max(s.hm1_sq, n.hm1_sq);
    s.l2_sq = std::max(s.l2_sq, n.l2_sq);
  }
  return s;
}

}  // namespace nse3d
