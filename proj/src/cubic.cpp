#include "nse3d/cubic.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "nse3d/errors.hpp"

namespace nse3d {

CubicAnalysis cubic_analyze(double grad_prev_sq, double f_l2_sup_sq, double nu, double k,
                            const ConstantsSet& consts) {
  return cubic_from_x(grad_prev_sq + 2.0 * k * f_l2_sup_sq / nu, nu, k, consts);
}

CubicAnalysis cubic_from_x(double x, double nu, double k, const ConstantsSet& c) {
  if (!(nu > 0.0) || !(k > 0.0)) throw InvalidArgument("cubic analysis needs nu > 0 and k > 0");
  if (!(x >= 0.0) || !std::isfinite(x)) throw InvalidArgument("cubic constant term x must be >= 0");
  c.validate();

  const double nu3 = nu * nu * nu;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CubicAnalysis r;
  r.x = x;
  r.cubic_coeff = c.c4 * k / nu3;
  r.linear_coeff = 1.0 + nu * k / (2.0 * c.c0);
  r.y_plus = std::sqrt(nu3 / (3.0 * c.c4 * k) * r.linear_coeff);
  r.y_minus = -r.y_plus;
  r.g_at_y_plus = -2.0 / 3.0 * r.linear_coeff * r.y_plus + x;
  r.has_positive_roots = r.g_at_y_plus < 0.0;
  r.dtf1 = x < 2.0 / 3.0 * std::sqrt(nu3 / (3.0 * c.c4 * k));
  r.a = 2.0 * c.c4 * x * x / nu3;
  r.dtf3 = r.a * k <= std::cbrt(2.0) - 1.0;
  r.y_star = x / (1.0 + nu * k / (4.0 * c.c0));

  // sqrt(linear/cubic): G(+-s) = x, and G(s + x/b) > 0 > G(-s - x/b).
  const double s = std::sqrt(r.linear_coeff / r.cubic_coeff);
  if (x == 0.0) {
    r.degenerate = true;
    r.y0 = -s;
    r.y1 = 0.0;
    r.y2 = s;
    return r;
  }

  const auto g = [&](double y) { return r.G(y); };
  const auto dg = [&](double y) { return 3.0 * r.cubic_coeff * y * y - r.linear_coeff; };
  const double reach = s + x / r.linear_coeff;
  r.y0 = bracketed_newton(g, dg, -reach, r.y_minus);
  if (r.has_positive_roots) {
    r.y1 = bracketed_newton(g, dg, 0.0, r.y_plus);
    r.y2 = bracketed_newton(g, dg, r.y_plus, reach);
  } else {
    r.y1 = nan;
    r.y2 = nan;
  }
  return r;
}

double one_step_explicit_bound(double grad_prev_sq, double f_l2_sup_sq, double nu, double k,
                               double c4) {
  const double x = grad_prev_sq + 2.0 * k * f_l2_sup_sq / nu;
  const double a = 2.0 * c4 * x * x / (nu * nu * nu);
  const double limit = std::cbrt(2.0) - 1.0;
  if (a * k > limit) {
    std::ostringstream os;
    os << "explicit one-step bound needs a*k <= 2^(1/3)-1 = " << limit << ", got a*k = "
       << a * k << " (dtf3)";
    throw RestrictionViolated(os.str());
  }
  return (1.0 + a * k) * x;
}

}  // namespace nse3d
