#pragma once

#include "nse3d/check.hpp"
#include "nse3d/constants.hpp"

namespace nse3d {

/// Scalar data entering every a-priori bound: norms of the initial field and
/// sup-in-time norms of the forcing over the evaluation times of a run.
struct DataNorms {
  double u0_l2_sq = 0.0;      // |u0|^2
  double u0_h1_sq = 0.0;      // |grad u0|^2
  double f_hm1_sup_sq = 0.0;  // |f|_{Linf(H^-1)}^2
  double f_l2_sup_sq = 0.0;   // |f|_{Linf(L2)}^2
};

struct BoundsReport {
  DataNorms data;
  double nu = 1.0;

  double K0 = 0.0;        // |u0|^2 + (c0/nu^2)|f|^2_{H^-1}
  double K1 = 0.0;        // |grad u0|^2 + (2c0/nu^2)|f|^2_{L2}
  double K0_tilde = 0.0;  // |u0|^2 + (2c0/nu^2)|f|^2_{H^-1}
  double K1_tilde = 0.0;  // |grad u0|^2 + (10c0/nu^2)|f|^2_{L2}
  /// (nu^2 |f|^2_{L2} / c4)^{1/3}: shift of the continuous and semi-implicit
  /// short-time estimates.
  double F_short = 0.0;
  /// (2 nu^2 |f|^2_{L2} / c4)^{1/3}: shift of the fully implicit estimate.
  double F_full = 0.0;
  /// K~ of the fully implicit short-time restrictions:
  /// 2|grad u0|^2 + 2 F_short + (10c0/nu)|f|^2_{L2}.
  double K_tilde_short = 0.0;

  /// Per-step quantity |grad u^{n-1}|^2 + (10c0/nu)|f|^2_{L2}.
  double K_step(double grad_prev_sq, const ConstantsSet& c) const;
};

BoundsReport compute_bounds(const DataNorms& data, double nu, const ConstantsSet& consts);

struct HorizonReport {
  double z0 = 0.0;                 // |grad u0|^2 + F_short
  double t_star_continuous = 0.0;  // nu^3 / (4 c4 z0^2)
  double t_star_semi = 0.0;        // nu^3 / (8 c4 z0^2)
  double t_f_star = 0.0;           // nu^3 / (8 c4 (|grad u0|^2 + F_full)^2)
  double blowup_time = 0.0;        // nu^3 / (2 c4 z0^2)
};

/// Horizons are +inf when the corresponding z0 vanishes.
HorizonReport compute_horizons(const BoundsReport& b, const ConstantsSet& consts);

enum class SmallnessVariant { continuous_K0K1, continuous_K1, semi, full };

/// slack = threshold - value:
///   continuous_K0K1: K0 K1 <= c2 nu^4
///   continuous_K1:   K1 <= c3 nu^2
///   semi:            (K0 + k|f|^2_{H^-1}/nu)(K1 + 2k|f|^2_{L2}/nu) <= c2 nu^4
///   full:            |grad u0|^2 + 2c0|f|^2_{L2}/nu^2 <= nu^2 / (2 sqrt(c0 c4))
Check smallness_check(const BoundsReport& b, const ConstantsSet& consts, double k,
                      SmallnessVariant variant);

}  // namespace nse3d
