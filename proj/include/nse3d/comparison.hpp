#pragma once

#include <vector>

namespace nse3d {

/// Closed-form envelope for (1+b) x_n <= x_{n-1} + r_{n-1}:
///   x_n <= (1+b)^{-n} x0 + ((1+b)/b) max_j r_j.
double gronwall_envelope(double b, double x0, double r_max, long n);

/// z(t)^2 for dz/dt = (c4/nu^3) z^3, z(0) = z0:
///   z(t)^2 = z0^2 / (1 - 2 t c4 z0^2 / nu^3).
/// Throws BlowUp for t >= comparison_blowup_time(z0, nu, c4).
double comparison_ode(double z0, double nu, double c4, double t);

/// nu^3 / (2 c4 z0^2); +inf when z0 == 0.
double comparison_blowup_time(double z0, double nu, double c4);

/// zeta_0 = z0, zeta_n = zeta_{n-1} + k (2 c4 / nu^3) zeta_{n-1}^3 for n = 1..steps.
std::vector<double> comparison_seq(double z0, double nu, double c4, double k, long steps);

/// Solution of d(zeta)/dt = (2 c4 / nu^3) zeta^3, zeta(0) = z0: the
/// continuous majorant of comparison_seq. Equals comparison_ode with c4
/// replaced by 2 c4 (returned as zeta, not squared). Throws BlowUp.
double comparison_flow(double z0, double nu, double c4, double t);

/// nu^3 / (4 c4 z0^2), blow-up time of comparison_flow.
double comparison_flow_blowup_time(double z0, double nu, double c4);

}  // namespace nse3d
