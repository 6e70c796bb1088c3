#pragma once

namespace nse3d {

/// Outcome of one inequality lhs <= rhs.
///
/// slack = rhs - lhs (+ a roundoff allowance for per-step checks) in the
/// inequality's own units and ok == (slack >= 0). fraction is slack scaled by
/// max(|lhs|, |rhs|), or 0 when both sides vanish.
struct Check {
  bool applicable = true;
  bool ok = true;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double fraction = 0.0;

  static Check not_applicable() {
    Check c;
    c.applicable = false;
    return c;
  }
};

/// Relative roundoff allowance used by checks of computed trajectories.
inline constexpr double kRoundoffAllowance = 1e-12;

Check check_le(double lhs, double rhs, double allowance = 0.0);

/// Conjunction: ok if both are ok; slack and fraction of the tighter one.
Check check_and(const Check& a, const Check& b);

}  // namespace nse3d
