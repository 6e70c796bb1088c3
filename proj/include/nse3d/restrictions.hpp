#pragma once

#include <string>
#include <vector>

#include "nse3d/bounds.hpp"
#include "nse3d/check.hpp"
#include "nse3d/constants.hpp"
#include "nse3d/scheme.hpp"

namespace nse3d {

/// One timestep restriction of a theorem, identified by a stable tag.
///
/// Tags and the inequality each one stands for:
///   K0K1s  (K0 + k|f|^2_{H-1}/nu)(K1 + 2k|f|^2_{L2}/nu) <= c2 nu^4
///   dtf5   k <= nu^3 / (2 c4 (2|grad u0|^2 + F)^2)
///   dtfx1  K~ <= (1/2)(nu^3/(3 c4 k))^{1/2}
///   dtfy1  (1 + c5 K~0 K~ / nu^4) K~ + |f|^2_{H-1}/nu^2 <= (nu^3/(12 c4 k))^{1/2}
///   dtf4   k <= nu^{5/3} / (2 c4^{1/3} |f|_{L2}^{4/3})
///   dtfz   (2|grad u0|^2 + (1+2^{1/3}) nu^{2/3}|f|^{2/3}/c4^{1/3})^2 <= (2^{1/3}-1) nu^3/(2 c4 k)
///   hypf   |grad u0|^2 + 2c0|f|^2_{L2}/nu^2 <= nu^2/(2 sqrt(c0 c4))   (independent of k)
///   dtf0   k <= c0/nu
///   dtfa   K~1 <= (1/2)(nu^3/(3 c4 k))^{1/2}
///   dtfb   (1 + c5 K~0 K~1 / nu^4) K~1 + |f|^2_{H-1}/nu^2 <= (nu^3/(12 c4 k))^{1/2}
struct ConstraintLimit {
  std::string tag;
  double k_max = 0.0;  // +inf when unconstrained, 0 when infeasible
  bool k_independent = false;
};

struct Restriction {
  Variant variant = Variant::none;
  double k_max = 0.0;
  std::string binding;  // tag of the tightest constraint
  std::vector<ConstraintLimit> constraints;
};

/// Tags of the constraints making up a variant, in display order.
std::vector<std::string> constraint_tags(Variant v);

/// One-line description of a tag.
std::string constraint_description(const std::string& tag);

/// Evaluates one constraint in its native form at timestep k.
Check evaluate_constraint(const std::string& tag, double k, const BoundsReport& b,
                          const ConstantsSet& consts);

/// All constraints of a variant at timestep k.
std::vector<std::pair<std::string, Check>> evaluate_constraints(Variant v, double k,
                                                                const BoundsReport& b,
                                                                const ConstantsSet& consts);

/// Largest k satisfying every constraint of the variant (+inf if none binds).
/// Each constraint is inverted in closed form, then moved down by at most a
/// few ulps so that its native form holds at the returned value.
/// Throws Infeasible when a constraint fails for every k > 0.
Restriction dt_restrictions(const BoundsReport& b, const ConstantsSet& consts, Variant v);

}  // namespace nse3d
