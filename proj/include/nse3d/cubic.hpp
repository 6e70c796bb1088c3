#pragma once

#include "nse3d/constants.hpp"

namespace nse3d {

/// The one-step cubic of the fully implicit scheme,
///   G(y; x) = (c4 k / nu^3) y^3 - (1 + nu k / (2 c0)) y + x,
/// whose smallest positive root y1 bounds |grad u^n|^2 given
/// x = |grad u^{n-1}|^2 + 2k |f|^2_{L2} / nu.
struct CubicAnalysis {
  double x = 0.0;
  double cubic_coeff = 0.0;   // c4 k / nu^3
  double linear_coeff = 0.0;  // 1 + nu k / (2 c0)
  double y_plus = 0.0;        // local minimum
  double y_minus = 0.0;       // local maximum
  double g_at_y_plus = 0.0;
  double y0 = 0.0;            // negative root
  double y1 = 0.0;            // NaN unless has_positive_roots
  double y2 = 0.0;            // NaN unless has_positive_roots
  bool has_positive_roots = false;  // G(y_plus) < 0
  /// Sufficient condition x < (2/3) (nu^3 / (3 c4 k))^{1/2} for the roots.
  bool dtf1 = false;
  /// x == 0: roots 0 and +-sqrt(linear/cubic), given in closed form.
  bool degenerate = false;
  double a = 0.0;       // 2 c4 x^2 / nu^3
  bool dtf3 = false;    // a k <= 2^{1/3} - 1
  double y_star = 0.0;  // x / (1 + nu k / (4 c0))

  double G(double y) const { return (cubic_coeff * y * y - linear_coeff) * y + x; }
};

CubicAnalysis cubic_analyze(double grad_prev_sq, double f_l2_sup_sq, double nu, double k,
                            const ConstantsSet& consts);

/// Same, with x given directly.
CubicAnalysis cubic_from_x(double x, double nu, double k, const ConstantsSet& consts);

/// Root of a continuous f on [lo, hi] with f(lo) f(hi) <= 0, by Newton steps
/// safeguarded with bisection. Stops at relative bracket width rel_tol.
template <class F, class DF>
double bracketed_newton(F&& f, DF&& df, double lo, double hi, double rel_tol = 1e-13);

/// |grad u^n|^2 <= (1 + a k) x with a = 2 c4 x^2 / nu^3, valid when
/// a k <= 2^{1/3} - 1; throws RestrictionViolated otherwise.
double one_step_explicit_bound(double grad_prev_sq, double f_l2_sup_sq, double nu, double k,
                               double c4);

}  // namespace nse3d

#include "nse3d/detail/bracketed_newton.hpp"
