#pragma once

#include <cstdint>

#include "nse3d/grid.hpp"

namespace nse3d {

/// Empirical lower bounds on the Sobolev-type constants, obtained by
/// maximizing each defining ratio over random divergence-free fields.
/// They are "estimated >=" values, never sharp constants.
struct ConstantsEstimate {
  double c1 = 0.0;  // 2|(u.grad u, Lap u)| / (|u|_{L3} |Lap u|^2)
  double c4 = 0.0;  // 27 T^4 / (16 |Lap u|^6 |grad u|^6), T = |(u.grad u, Lap u)|
  int samples = 0;
};

/// The c4 ratio is the sup over nu of 2nu^3 (T - nu |Lap u|^2 / 2) / |grad u|^6.
ConstantsEstimate estimate_constants(const Grid& grid, int samples, std::uint64_t seed,
                                     int kmax = 3, double slope = 1.0);

}  // namespace nse3d
