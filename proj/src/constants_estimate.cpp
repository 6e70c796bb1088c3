#include "nse3d/constants_estimate.hpp"

#include <algorithm>
#include <cmath>

#include "nse3d/errors.hpp"
#include "nse3d/field_factory.hpp"
#include "nse3d/spectral_ops.hpp"

namespace nse3d {

ConstantsEstimate estimate_constants(const Grid& grid, int samples, std::uint64_t seed, int kmax,
                                     double slope) {
  if (samples < 1) throw InvalidArgument("need at least one sample");
  ConstantsEstimate est;
  for (int s = 0; s < samples; ++s) {
    const SpectralField u = random_divfree(grid, {seed + std::uint64_t(s), slope, 1.0, kmax});
    // Lap u = -|k|^2 u_k
    SpectralField lap(grid);
    for_each_mode(grid, [&](std::size_t idx, const Wavevector& k) {
      const double w = -double(Grid::norm_sq(k));
      const CVec3 v = u.at(idx);
      lap.set(idx, {w * v[0], w * v[1], w * v[2]});
    });
    const double t = std::abs(inner(nonlinear_term(u, u), lap));
    const NormBundle nb = norms(u);
    const double d = nb.h2_sq;
    if (d > 0.0 && nb.l3 > 0.0) est.c1 = std::max(est.c1, 2.0 * t / (nb.l3 * d));
    if (d > 0.0 && nb.h1_sq > 0.0) {
      est.c4 = std::max(est.c4, 27.0 * std::pow(t, 4) / (16.0 * d * d * d * std::pow(nb.h1_sq, 3)));
    }
    ++est.samples;
  }
  return est;
}

}  // namespace nse3d
