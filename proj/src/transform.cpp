#include "nse3d/transform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "nse3d/errors.hpp"

namespace nse3d {
namespace {

struct PlanPair {
  fftw_plan c2r = nullptr;
  fftw_plan r2c = nullptr;
};

// Plans are created once per padded size and never destroyed. The FFTW
// planner is not re-entrant, hence the lock; fftw_execute_dft_* on distinct
// arrays is.
PlanPair plans_for(int m) {
  static std::mutex mutex;
  static std::map<int, PlanPair> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  const std::size_t nr = static_cast<std::size_t>(m) * m * m;
  const std::size_t nc = static_cast<std::size_t>(m) * m * (m / 2 + 1);
  double* r = fftw_alloc_real(nr);
  fftw_complex* c = fftw_alloc_complex(nc);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  PlanPair p;
  p.c2r = fftw_plan_dft_c2r_3d(m, m, m, c, r, flags);
  p.r2c = fftw_plan_dft_r2c_3d(m, m, m, r, c, flags);
  fftw_free(r);
  fftw_free(c);
  if (p.c2r == nullptr || p.r2c == nullptr) {
    throw Error("FFTW failed to create plans for m=" + std::to_string(m));
  }
  cache.emplace(m, p);
  return p;
}

}  // namespace

Transform::Transform(const Grid& grid)
    : grid_(grid), m_(grid.padded()), mh_(grid.padded() / 2 + 1) {
  half_.resize(static_cast<std::size_t>(m_) * m_ * mh_);
  real_.resize(physical_size());
  const PlanPair p = plans_for(m_);
  plan_c2r_ = p.c2r;
  plan_r2c_ = p.r2c;
}

std::size_t Transform::half_index(int kx, int ky, int kz) const {
  const int ix = kx >= 0 ? kx : kx + m_;
  const int iy = ky >= 0 ? ky : ky + m_;
  return (static_cast<std::size_t>(ix) * m_ + iy) * mh_ + kz;
}

void Transform::to_physical(const SpectralField& u, int comp, int axis,
                            std::span<double> out) {
  if (!(u.grid() == grid_)) throw GridMismatch("transform grid mismatch");
  if (out.size() != physical_size()) throw InvalidArgument("physical buffer size");
  std::fill(half_.begin(), half_.end(), std::complex<double>{});
  const auto& coeffs = u.component(comp);
  for_each_mode(grid_, [&](std::size_t idx, const Wavevector& k) {
    if (k[2] < 0) return;
    Complex v = coeffs[idx];
    if (axis >= 0) v *= Complex(0.0, double(k[axis]));
    half_[half_index(k[0], k[1], k[2])] = v;
  });
  fftw_execute_dft_c2r(static_cast<fftw_plan>(plan_c2r_),
                       reinterpret_cast<fftw_complex*>(half_.data()), out.data());
}

void Transform::from_physical(std::span<const double> in, std::vector<Complex>& coeffs) {
  if (in.size() != physical_size()) throw InvalidArgument("physical buffer size");
  std::copy(in.begin(), in.end(), real_.begin());
  fftw_execute_dft_r2c(static_cast<fftw_plan>(plan_r2c_), real_.data(),
                       reinterpret_cast<fftw_complex*>(half_.data()));
  const double scale = 1.0 / static_cast<double>(physical_size());
  coeffs.assign(grid_.size(), Complex{});
  for_each_mode(grid_, [&](std::size_t idx, const Wavevector& k) {
    if (k == Wavevector{0, 0, 0}) {
      coeffs[idx] = Complex(half_[0].real() * scale, 0.0);
      return;
    }
    if (!Grid::canonical(k)) return;
    const Complex v = half_[half_index(k[0], k[1], k[2])] * scale;
    coeffs[idx] = v;
    coeffs[grid_.mirror(idx)] = std::conj(v);
  });
}

}  // namespace nse3d
