#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

namespace nse3d {

template <class F, class DF>
double bracketed_newton(F&& f, DF&& df, double lo, double hi, double rel_tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  // Orient so that f(lo) < 0 < f(hi).
  if (flo > 0.0) {
    std::swap(lo, hi);
    std::swap(flo, fhi);
  }
  double y = 0.5 * (lo + hi);
  for (int it = 0; it < 400; ++it) {
    const double fy = f(y);
    if (fy == 0.0) return y;
    if (fy < 0.0) {
      lo = y;
    } else {
      hi = y;
    }
    const double width = std::abs(hi - lo);
    if (width <= rel_tol * std::max(std::abs(lo), std::abs(hi)) || width == 0.0) break;
    const double d = df(y);
    double next = d != 0.0 ? y - fy / d : 0.5 * (lo + hi);
    const double a = std::min(lo, hi);
    const double b = std::max(lo, hi);
    if (!(next > a && next < b)) next = 0.5 * (lo + hi);
    if (next == y) break;
    y = next;
  }
  // Return whichever end of the final bracket has the smaller residual.
  const double fl = std::abs(f(lo));
  const double fh = std::abs(f(hi));
  const double fy = std::abs(f(y));
  if (fy <= fl && fy <= fh) return y;
  return fl <= fh ? lo : hi;
}

}  // namespace nse3d
