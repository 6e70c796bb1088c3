#pragma once

#include <complex>
#include <span>
#include <vector>

#include "nse3d/grid.hpp"
#include "nse3d/spectral_field.hpp"

namespace nse3d {

/// Real-to-complex transforms between the retained modes of a Grid and the
/// 3/2-padded collocation grid x_j = 2 pi j / m.
///
/// Physical arrays hold m^3 doubles with x the slowest index. Instances own
/// scratch buffers and are not shareable between threads; the underlying
/// FFTW plans are shared and created under a lock.
class Transform {
 public:
  explicit Transform(const Grid& grid);

  const Grid& grid() const { return grid_; }
  int m() const { return m_; }
  std::size_t physical_size() const { return static_cast<std::size_t>(m_) * m_ * m_; }

  /// Evaluates component `comp` of u (or its derivative along `axis` when
  /// axis >= 0) on the padded grid.
  void to_physical(const SpectralField& u, int comp, int axis, std::span<double> out);

  /// Fourier coefficients of a real padded-grid function, truncated to the
  /// retained modes; the result is exactly Hermitian. Non-retained slots are
  /// zero.
  void from_physical(std::span<const double> in, std::vector<Complex>& coeffs);

 private:
  Grid grid_;
  int m_;
  int mh_;  // m/2 + 1
  std::vector<std::complex<double>> half_;
  std::vector<double> real_;
  void* plan_c2r_;
  void* plan_r2c_;

  std::size_t half_index(int kx, int ky, int kz) const;
};

}  // namespace nse3d
