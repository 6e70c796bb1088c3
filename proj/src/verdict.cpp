#include "nse3d/verdict.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace nse3d {
namespace {

constexpr double kEps = kRoundoffAllowance;

}  // namespace

double theorem_h1_bound(Variant v, double k, const BoundsReport& b) {
  switch (v) {
    case Variant::semi_small:
      return b.K1 + 2.0 * k / b.nu * b.data.f_l2_sup_sq;
    case Variant::semi_short:
    case Variant::full_short:
      return 2.0 * b.data.u0_h1_sq + b.F_short;
    case Variant::full_small:
      return b.K1_tilde;
    case Variant::none:
      break;
  }
  return std::numeric_limits<double>::infinity();
}

StepVerdict step_verdict(const StepInputs& in, const ConstantsSet& c, const BoundsReport& b) {
  StepVerdict v;
  const double nu = in.nu, k = in.k;
  const double nu3 = nu * nu * nu;
  const double fh_sup = b.data.f_hm1_sup_sq;
  const double fl_sup = b.data.f_l2_sup_sq;
  const bool full = in.scheme == Scheme::fully_implicit;

  v.l2_recurrence = check_le((1.0 + nu * k / c.c0) * in.next.l2_sq,
                             in.prev.l2_sq + k * in.f_hm1_sq / nu, kEps);
  v.l2_bound = check_le(in.next.l2_sq, b.K0 + k / nu * fh_sup, kEps);

  v.cubic = cubic_analyze(in.prev.h1_sq, fl_sup, nu, k, c);
  const CubicAnalysis& cub = v.cubic;
  const double y = in.next.h1_sq;

  if (full) {
    v.h1_recurrence = check_le(cub.linear_coeff * y, cub.cubic_coeff * y * y * y + cub.x, kEps);
    v.smallness = Check::not_applicable();

    const double K = b.K_step(in.prev.h1_sq, c);
    v.dtfx = check_le(K, 0.5 * std::sqrt(nu3 / (3.0 * c.c4 * k)));
    v.dtfy = check_le((1.0 + c.c5 / (nu * nu3) * b.K0_tilde * K) * K + fh_sup / (nu * nu),
                      std::sqrt(nu3 / (12.0 * c.c4 * k)));
    v.lemma_hypotheses = check_and(v.dtfx, v.dtfy);

    if (cub.has_positive_roots) {
      v.y1_membership = check_le(y, cub.y1, kEps);
    } else {
      v.y1_membership = check_le(y, -INFINITY);
      v.y1_membership.slack =
          std::min(-cub.g_at_y_plus, -std::numeric_limits<double>::denorm_min());
      v.y1_membership.fraction = -1.0;
      v.y1_membership.ok = false;
    }

    v.explicit_bound = cub.dtf3 ? check_le(y, (1.0 + cub.a * k) * cub.x, kEps)
                                : Check::not_applicable();
    const bool hypf0 = cub.x <= nu * nu / (2.0 * std::sqrt(c.c0 * c.c4));
    v.linf_recurrence = hypf0 ? check_le((1.0 + nu * k / (4.0 * c.c0)) * y, cub.x, kEps)
                              : Check::not_applicable();

    const double g1 = in.prev.h1_sq;
    const double root = std::sqrt(nu3 / (3.0 * c.c4 * k));
    const auto dtf2 = [&](double l2_new) {
      return check_le((2.0 + 2.0 * c.c5 / (nu * nu3) * l2_new * g1) * g1 + 2.0 * fh_sup / (nu * nu),
                      root);
    };
    v.dtf2_posterior = dtf2(in.next.l2_sq);
    v.dtf2_prior = dtf2(b.K0 + k / nu * fh_sup);
  } else {
    v.h1_recurrence = check_le(y + (1.5 * nu - c.c1 * in.prev.l3) * k * in.next.h2_sq,
                               in.prev.h1_sq + 2.0 * k / nu * in.f_l2_sq, kEps);
    v.smallness = check_le(in.prev.l3, nu / (2.0 * c.c1));
    v.dtfx = v.dtfy = v.lemma_hypotheses = Check::not_applicable();
    v.y1_membership = v.explicit_bound = v.linf_recurrence = Check::not_applicable();
    v.dtf2_posterior = v.dtf2_prior = Check::not_applicable();
  }

  v.bound = in.variant == Variant::none ? Check::not_applicable()
                                        : check_le(y, theorem_h1_bound(in.variant, k, b), kEps);
  return v;
}

double StepVerdict::slack_min() const {
  const std::array<const Check*, 12> all = {
      &l2_recurrence, &l2_bound,       &h1_recurrence,   &smallness,
      &dtfx,          &dtfy,           &y1_membership,   &explicit_bound,
      &linf_recurrence, &dtf2_posterior, &dtf2_prior,    &bound};
  double m = INFINITY;
  for (const Check* ch : all) {
    if (ch->applicable) m = std::min(m, ch->fraction);
  }
  return std::isfinite(m) ? m : 0.0;
}

bool StepVerdict::all_ok() const {
  const std::array<const Check*, 12> all = {
      &l2_recurrence, &l2_bound,       &h1_recurrence,   &smallness,
      &dtfx,          &dtfy,           &y1_membership,   &explicit_bound,
      &linf_recurrence, &dtf2_posterior, &dtf2_prior,    &bound};
  return std::all_of(all.begin(), all.end(),
                     [](const Check* ch) { return !ch->applicable || ch->ok; });
}

}  // namespace nse3d
