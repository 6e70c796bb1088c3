#include "nse3d/comparison.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "nse3d/errors.hpp"

namespace nse3d {

double gronwall_envelope(double b, double x0, double r_max, long n) {
  if (!(b > 0.0)) throw InvalidArgument("gronwall_envelope needs b > 0");
  if (!(x0 >= 0.0) || !(r_max >= 0.0) || n < 0) {
    throw InvalidArgument("gronwall_envelope needs x0 >= 0, r_max >= 0, n >= 0");
  }
  return std::pow(1.0 + b, -static_cast<double>(n)) * x0 + (1.0 + b) / b * r_max;
}

double comparison_blowup_time(double z0, double nu, double c4) {
  if (z0 == 0.0) return std::numeric_limits<double>::infinity();
  return nu * nu * nu / (2.0 * c4 * z0 * z0);
}

double comparison_ode(double z0, double nu, double c4, double t) {
  if (!(z0 >= 0.0) || !(nu > 0.0) || !(c4 > 0.0) || !(t >= 0.0)) {
    throw InvalidArgument("comparison_ode needs z0 >= 0, nu > 0, c4 > 0, t >= 0");
  }
  const double tb = comparison_blowup_time(z0, nu, c4);
  if (t >= tb) {
    std::ostringstream os;
    os << "comparison ODE blows up at t = " << tb << " (requested t = " << t << ")";
    throw BlowUp(os.str());
  }
  const double z2 = z0 * z0;
  return z2 / (1.0 - 2.0 * t * c4 * z2 / (nu * nu * nu));
}

std::vector<double> comparison_seq(double z0, double nu, double c4, double k, long steps) {
  if (!(z0 >= 0.0) || !(nu > 0.0) || !(c4 > 0.0) || !(k > 0.0) || steps < 0) {
    throw InvalidArgument("comparison_seq needs z0 >= 0, nu, c4, k > 0 and steps >= 0");
  }
  const double g = 2.0 * c4 / (nu * nu * nu);
  std::vector<double> zeta(static_cast<std::size_t>(steps) + 1);
  zeta[0] = z0;
  for (long n = 1; n <= steps; ++n) {
    const double z = zeta[n - 1];
    zeta[n] = z + k * g * z * z * z;
  }
  return zeta;
}

double comparison_flow(double z0, double nu, double c4, double t) {
  return std::sqrt(comparison_ode(z0, nu, 2.0 * c4, t));
}

double comparison_flow_blowup_time(double z0, double nu, double c4) {
  return comparison_blowup_time(z0, nu, 2.0 * c4);
}

}  // namespace nse3d
