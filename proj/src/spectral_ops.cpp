#include "nse3d/spectral_ops.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>

#include "nse3d/errors.hpp"

namespace nse3d {

SpectralField project_leray(const SpectralField& w) {
  const Grid& g = w.grid();
  SpectralField out(g);
  for_each_mode(g, [&](std::size_t idx, const Wavevector& k) {
    const CVec3 v = w.at(idx);
    const int k2 = Grid::norm_sq(k);
    if (k2 == 0) {
      out.set(idx, v);
      return;
    }
    const Complex kv = double(k[0]) * v[0] + double(k[1]) * v[1] + double(k[2]) * v[2];
    const Complex s = kv / double(k2);
    out.set(idx, {v[0] - double(k[0]) * s, v[1] - double(k[1]) * s,
                  v[2] - double(k[2]) * s});
  });
  return out;
}

SpectralField gradient(const Grid& grid, const std::vector<Complex>& phi) {
  if (phi.size() != grid.size()) throw InvalidArgument("scalar size does not match grid");
  SpectralField out(grid);
  for_each_mode(grid, [&](std::size_t idx, const Wavevector& k) {
    const Complex p = phi[idx];
    out.set(idx, {Complex(0.0, k[0]) * p, Complex(0.0, k[1]) * p, Complex(0.0, k[2]) * p});
  });
  return out;
}

Transform& transform_for(const Grid& grid) {
  thread_local std::map<int, std::unique_ptr<Transform>> cache;
  auto& slot = cache[grid.n()];
  if (!slot) slot = std::make_unique<Transform>(grid);
  return *slot;
}

SpectralField nonlinear_term(const SpectralField& u, const SpectralField& v) {
  require_same_grid(u, v);
  const Grid& g = u.grid();
  Transform& tr = transform_for(g);
  const std::size_t np = tr.physical_size();

  std::array<std::vector<double>, 3> uphys;
  for (int c = 0; c < 3; ++c) {
    uphys[c].resize(np);
    tr.to_physical(u, c, -1, uphys[c]);
  }
  std::vector<double> dv(np);
  std::vector<double> acc(np);
  SpectralField raw(g);
  std::vector<Complex> coeffs;
  for (int i = 0; i < 3; ++i) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (int j = 0; j < 3; ++j) {
      tr.to_physical(v, i, j, dv);
      const auto& uj = uphys[j];
      for (std::size_t p = 0; p < np; ++p) acc[p] += uj[p] * dv[p];
    }
    tr.from_physical(acc, coeffs);
    coeffs[0] = Complex{};
    raw.component(i) = std::move(coeffs);
  }
  return project_leray(raw);
}

NormBundle spectral_norms(const SpectralField& u) {
  NormBundle nb;
  const Grid& g = u.grid();
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, sm1 = 0.0, shalf = 0.0;
  for_each_mode(g, [&](std::size_t idx, const Wavevector& k) {
    const int k2 = Grid::norm_sq(k);
    if (k2 == 0) return;
    const CVec3 v = u.at(idx);
    const double a = std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]);
    const double kk = double(k2);
    s0 += a;
    s1 += kk * a;
    s2 += kk * kk * a;
    sm1 += a / kk;
    shalf += std::sqrt(kk) * a;
  });
  nb.l2_sq = kVolume * s0;
  nb.h1_sq = kVolume * s1;
  nb.h2_sq = kVolume * s2;
  nb.hm1_sq = kVolume * sm1;
  nb.h_half_sq = kVolume * shalf;
  return nb;
}

NormBundle norms(const SpectralField& u) {
  NormBundle nb = spectral_norms(u);
  Transform& tr = transform_for(u.grid());
  const std::size_t np = tr.physical_size();
  std::array<std::vector<double>, 3> phys;
  for (int c = 0; c < 3; ++c) {
    phys[c].resize(np);
    tr.to_physical(u, c, -1, phys[c]);
  }
  double s3 = 0.0, s6 = 0.0;
  for (std::size_t p = 0; p < np; ++p) {
    const double m2 = phys[0][p] * phys[0][p] + phys[1][p] * phys[1][p] +
                      phys[2][p] * phys[2][p];
    s3 += m2 * std::sqrt(m2);
    s6 += m2 * m2 * m2;
  }
  const double w = kVolume / static_cast<double>(np);
  nb.l3 = std::cbrt(w * s3);
  nb.l6 = std::pow(w * s6, 1.0 / 6.0);
  return nb;
}

double inner(const SpectralField& u, const SpectralField& v) {
  require_same_grid(u, v);
  double s = 0.0;
  for_each_mode(u.grid(), [&](std::size_t idx, const Wavevector&) {
    const CVec3 a = u.at(idx);
    const CVec3 b = v.at(idx);
    s += (a[0] * std::conj(b[0]) + a[1] * std::conj(b[1]) + a[2] * std::conj(b[2])).real();
  });
  return kVolume * s;
}

double inner_h1(const SpectralField& u, const SpectralField& v) {
  require_same_grid(u, v);
  double s = 0.0;
  for_each_mode(u.grid(), [&](std::size_t idx, const Wavevector& k) {
    const CVec3 a = u.at(idx);
    const CVec3 b = v.at(idx);
    s += double(Grid::norm_sq(k)) *
         (a[0] * std::conj(b[0]) + a[1] * std::conj(b[1]) + a[2] * std::conj(b[2])).real();
  });
  return kVolume * s;
}

double l2_sq_quadrature(const SpectralField& u) {
  Transform& tr = transform_for(u.grid());
  const std::size_t np = tr.physical_size();
  std::vector<double> phys(np);
  double s = 0.0;
  for (int c = 0; c < 3; ++c) {
    tr.to_physical(u, c, -1, phys);
    for (double x : phys) s += x * x;
  }
  return kVolume * s / static_cast<double>(np);
}

}  // namespace nse3d
