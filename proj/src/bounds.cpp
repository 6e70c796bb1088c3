#include "nse3d/bounds.hpp"

#include <cmath>

#include "nse3d/errors.hpp"

namespace nse3d {

double BoundsReport::K_step(double grad_prev_sq, const ConstantsSet& c) const {
  return grad_prev_sq + 10.0 * c.c0 / nu * data.f_l2_sup_sq;
}

BoundsReport compute_bounds(const DataNorms& data, double nu, const ConstantsSet& c) {
  c.validate();
  if (!(nu > 0.0)) throw InvalidArgument("viscosity must be > 0");
  const double nu2 = nu * nu;
  BoundsReport b;
  b.data = data;
  b.nu = nu;
  b.K0 = data.u0_l2_sq + c.c0 / nu2 * data.f_hm1_sup_sq;
  b.K1 = data.u0_h1_sq + 2.0 * c.c0 / nu2 * data.f_l2_sup_sq;
  b.K0_tilde = data.u0_l2_sq + 2.0 * c.c0 / nu2 * data.f_hm1_sup_sq;
  b.K1_tilde = data.u0_h1_sq + 10.0 * c.c0 / nu2 * data.f_l2_sup_sq;
  b.F_short = std::cbrt(nu2 * data.f_l2_sup_sq / c.c4);
  b.F_full = std::cbrt(2.0 * nu2 * data.f_l2_sup_sq / c.c4);
  b.K_tilde_short = 2.0 * data.u0_h1_sq + 2.0 * b.F_short + 10.0 * c.c0 / nu * data.f_l2_sup_sq;
  return b;
}

HorizonReport compute_horizons(const BoundsReport& b, const ConstantsSet& c) {
  const double nu3 = b.nu * b.nu * b.nu;
  HorizonReport h;
  h.z0 = b.data.u0_h1_sq + b.F_short;
  const double zf = b.data.u0_h1_sq + b.F_full;
  const auto horizon = [&](double factor, double z) {
    return z > 0.0 ? nu3 / (factor * c.c4 * z * z) : INFINITY;
  };
  h.t_star_continuous = horizon(4.0, h.z0);
  h.t_star_semi = horizon(8.0, h.z0);
  h.t_f_star = horizon(8.0, zf);
  h.blowup_time = horizon(2.0, h.z0);
  return h;
}

Check smallness_check(const BoundsReport& b, const ConstantsSet& c, double k,
                      SmallnessVariant variant) {
  const double nu = b.nu;
  const double nu2 = nu * nu;
  switch (variant) {
    case SmallnessVariant::continuous_K0K1:
      return check_le(b.K0 * b.K1, c.c2 * nu2 * nu2);
    case SmallnessVariant::continuous_K1:
      return check_le(b.K1, c.c3() * nu2);
    case SmallnessVariant::semi: {
      const double l2 = b.K0 + k * b.data.f_hm1_sup_sq / nu;
      const double h1 = b.K1 + 2.0 * k * b.data.f_l2_sup_sq / nu;
      return check_le(l2 * h1, c.c2 * nu2 * nu2);
    }
    case SmallnessVariant::full:
      return check_le(b.data.u0_h1_sq + 2.0 * c.c0 * b.data.f_l2_sup_sq / nu2,
                      nu2 / (2.0 * std::sqrt(c.c0 * c.c4)));
  }
  throw InvalidArgument("unknown smallness variant");
}

}  // namespace nse3d
