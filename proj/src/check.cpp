#include "nse3d/check.hpp"

#include <algorithm>
#include <cmath>

namespace nse3d {

Check check_le(double lhs, double rhs, double allowance) {
  Check c;
  c.lhs = lhs;
  c.rhs = rhs;
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  c.slack = rhs - lhs;
  if (std::isfinite(scale)) c.slack += allowance * scale;
  if (std::isnan(c.slack)) c.slack = -INFINITY;
  c.ok = c.slack >= 0.0;
  c.fraction = scale > 0.0 && std::isfinite(scale) ? c.slack / scale : (c.ok ? 0.0 : -1.0);
  if (std::isinf(rhs) && rhs > 0 && std::isfinite(lhs)) c.fraction = 1.0;
  return c;
}

Check check_and(const Check& a, const Check& b) {
  if (!a.applicable) return b;
  if (!b.applicable) return a;
  Check c = a.fraction <= b.fraction ? a : b;
  c.ok = a.ok && b.ok;
  if (!c.ok && c.slack >= 0.0) c = a.ok ? b : a;
  return c;
}

}  // namespace nse3d
