#pragma once

#include <array>
#include <complex>
#include <vector>

#include "nse3d/grid.hpp"

namespace nse3d {

using Complex = std::complex<double>;
using CVec3 = std::array<Complex, 3>;

/// Fourier coefficients of a real periodic vector field,
/// u(x) = sum_kappa u_kappa exp(i kappa.x), on the retained mode set of a Grid.
///
/// Fields produced by the library are Hermitian (u_{-k} = conj u_k), have zero
/// mean and are divergence free. The container itself does not enforce this;
/// see check_invariants() and project_leray().
class SpectralField {
 public:
  explicit SpectralField(const Grid& grid);

  const Grid& grid() const { return grid_; }

  CVec3 at(std::size_t idx) const {
    return {comp_[0][idx], comp_[1][idx], comp_[2][idx]};
  }
  CVec3 at(const Wavevector& k) const { return at(grid_.index_of(k)); }
  void set(std::size_t idx, const CVec3& v) {
    for (int c = 0; c < 3; ++c) comp_[c][idx] = v[c];
  }
  /// Sets kappa and its mirror -kappa to (v, conj v).
  void set_pair(const Wavevector& k, const CVec3& v);

  std::vector<Complex>& component(int c) { return comp_[c]; }
  const std::vector<Complex>& component(int c) const { return comp_[c]; }

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(double s);
  /// this += s * o
  void axpy(double s, const SpectralField& o);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) {
    return a += b;
  }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) {
    return a -= b;
  }
  friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

  /// Bitwise equality of every stored coefficient.
  friend bool operator==(const SpectralField& a, const SpectralField& b);

  std::size_t nonzero_modes() const;

 private:
  Grid grid_;
  std::array<std::vector<Complex>, 3> comp_;
};

struct InvariantDefects {
  double hermitian = 0.0;   // max |u_{-k} - conj u_k|
  double mean = 0.0;        // |u_0|
  double divergence = 0.0;  // max |k.u_k| / (|k| max|u|)
  double outside = 0.0;     // max |u| over non-retained (Nyquist) slots
};

InvariantDefects check_invariants(const SpectralField& u);

/// Throws InvalidArgument if any defect exceeds tol (relative for divergence).
void assert_invariants(const SpectralField& u, double tol = 1e-12);

void require_same_grid(const SpectralField& a, const SpectralField& b);

}  // namespace nse3d
