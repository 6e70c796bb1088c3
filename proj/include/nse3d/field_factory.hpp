#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nse3d/spectral_field.hpp"

namespace nse3d {

/// Parameters of a random divergence-free field: Gaussian coefficients with
/// |k|^-slope envelope on 1 <= |k| <= kmax, projected and rescaled so that the
/// requested norm equals `amplitude`.
struct RandomFieldSpec {
  std::uint64_t seed = 0;
  double slope = 2.0;
  double amplitude = 1.0;
  int kmax = 2;
};

/// Random field rescaled so that |grad u| = spec.amplitude.
SpectralField random_divfree(const Grid& grid, const RandomFieldSpec& spec);

/// Random field rescaled so that |u| = spec.amplitude.
SpectralField random_divfree_l2(const Grid& grid, const RandomFieldSpec& spec);

struct InitialData {
  enum class Kind { zero, shear, planar_vortex, random_divfree, from_file };
  Kind kind = Kind::zero;
  double amplitude = 0.0;  // shear, planar_vortex
  RandomFieldSpec random;  // random_divfree: amplitude is |grad u|
  std::string path;        // from_file

  static InitialData zero() { return {}; }
  static InitialData shear(double a) { return {Kind::shear, a, {}, {}}; }
  static InitialData planar_vortex(double a) { return {Kind::planar_vortex, a, {}, {}}; }
  static InitialData random_field(const RandomFieldSpec& r) {
    return {Kind::random_divfree, 0.0, r, {}};
  }
  static InitialData file(std::string p) { return {Kind::from_file, 0.0, {}, std::move(p)}; }
};

/// A(sin z, 0, 0)
SpectralField shear_field(const Grid& grid, double amplitude);
/// A(-sin y, sin x, 0)
SpectralField planar_vortex_field(const Grid& grid, double amplitude);

SpectralField make_field(const Grid& grid, const InitialData& spec);

/// One prescribed mode of a forcing; its mirror is filled in automatically.
struct ForcingMode {
  Wavevector kappa{};
  CVec3 coeff{};
};

/// a(t) = offset + scale * sin(omega t + phase)
struct Modulation {
  double offset = 1.0;
  double scale = 0.0;
  double omega = 0.0;
  double phase = 0.0;

  double operator()(double t) const;
};

struct ForcingSpec {
  enum class Kind { zero, fixed_modes, random_divfree };
  Kind kind = Kind::zero;
  std::vector<ForcingMode> modes;  // fixed_modes
  RandomFieldSpec random;          // random_divfree: amplitude is |f|
  std::optional<Modulation> modulation;

  bool time_modulated() const { return modulation.has_value(); }
};

struct ForcingNorms {
  double hm1_sq = 0.0;  // |f|_{H^-1}^2
  double l2_sq = 0.0;   // |f|^2
};

/// Forcing f(t) = a(t) g with a fixed divergence-free, zero-mean g.
class Forcing {
 public:
  Forcing(const Grid& grid, const ForcingSpec& spec);

  SpectralField at(double t) const;
  double amplitude(double t) const;
  ForcingNorms norms_at(double t) const;
  /// Componentwise sup of the norms over the given evaluation times.
  ForcingNorms sup_norms(const std::vector<double>& times) const;
  bool is_zero() const { return zero_; }
  const SpectralField& shape() const { return base_; }

 private:
  ForcingSpec spec_;
  SpectralField base_;
  ForcingNorms base_norms_;
  bool zero_;
};

}  // namespace nse3d
