#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace nse3d {

using Wavevector = std::array<int, 3>;

/// Fourier truncation of the periodic box (0,2pi)^3.
///
/// Coefficients are stored densely in FFT order: storage index i along an
/// axis holds wavenumber i for i < n/2 and i - n otherwise. The Nyquist slot
/// (i = n/2) is never part of the retained set, so the retained wavenumbers
/// along each axis are -n/2+1 .. n/2-1 and the set is symmetric under
/// kappa -> -kappa.
class Grid {
 public:
  explicit Grid(int n);

  int n() const { return n_; }
  /// Collocation resolution used for dealiased quadratic products.
  int padded() const { return m_; }
  int kmax() const { return n_ / 2 - 1; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_ * n_; }

  int wavenumber(int i) const { return i < n_ / 2 ? i : i - n_; }
  int storage(int kappa) const { return kappa >= 0 ? kappa : kappa + n_; }

  std::size_t index(int i, int j, int l) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + l;
  }
  std::size_t index_of(const Wavevector& kappa) const {
    return index(storage(kappa[0]), storage(kappa[1]), storage(kappa[2]));
  }
  Wavevector wavevector(std::size_t idx) const {
    const int l = static_cast<int>(idx % n_);
    const int j = static_cast<int>((idx / n_) % n_);
    const int i = static_cast<int>(idx / (static_cast<std::size_t>(n_) * n_));
    return {wavenumber(i), wavenumber(j), wavenumber(l)};
  }
  /// Storage index of -kappa for the mode stored at idx.
  std::size_t mirror(std::size_t idx) const {
    const Wavevector k = wavevector(idx);
    return index_of({-k[0], -k[1], -k[2]});
  }

  bool retained(const Wavevector& kappa) const {
    const int h = n_ / 2;
    for (int c : kappa) {
      if (c <= -h || c >= h) return false;
    }
    return true;
  }
  bool retained_index(std::size_t idx) const {
    return retained(wavevector(idx));
  }

  /// Representative half of the mode set: kz > 0, or kz = 0 and ky > 0, or
  /// kz = ky = 0 and kx > 0. Every nonzero mode is exactly one of kappa, -kappa.
  static bool canonical(const Wavevector& k) {
    if (k[2] != 0) return k[2] > 0;
    if (k[1] != 0) return k[1] > 0;
    return k[0] > 0;
  }

  static int norm_sq(const Wavevector& k) {
    return k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
  }

  friend bool operator==(const Grid& a, const Grid& b) { return a.n_ == b.n_; }

 private:
  int n_;
  int m_;
};

/// Calls fn(idx, kappa) for every retained mode in storage order.
template <class Fn>
void for_each_mode(const Grid& grid, Fn&& fn) {
  const int n = grid.n();
  const int h = n / 2;
  for (int i = 0; i < n; ++i) {
    if (i == h) continue;
    for (int j = 0; j < n; ++j) {
      if (j == h) continue;
      for (int l = 0; l < n; ++l) {
        if (l == h) continue;
        fn(grid.index(i, j, l),
           Wavevector{grid.wavenumber(i), grid.wavenumber(j), grid.wavenumber(l)});
      }
    }
  }
}

}  // namespace nse3d
