#include "nse3d/spectral_field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nse3d/errors.hpp"

namespace nse3d {

SpectralField::SpectralField(const Grid& grid) : grid_(grid) {
  for (auto& c : comp_) c.assign(grid.size(), Complex{});
}

void SpectralField::set_pair(const Wavevector& k, const CVec3& v) {
  if (!grid_.retained(k)) {
    throw InvalidArgument("wavevector outside the retained mode set");
  }
  if (k == Wavevector{0, 0, 0}) {
    throw InvalidArgument("the zero mode of a zero-mean field cannot be set");
  }
  const std::size_t idx = grid_.index_of(k);
  const std::size_t mir = grid_.index_of({-k[0], -k[1], -k[2]});
  for (int c = 0; c < 3; ++c) {
    comp_[c][idx] = v[c];
    comp_[c][mir] = std::conj(v[c]);
  }
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  require_same_grid(*this, o);
  for (int c = 0; c < 3; ++c) {
    auto& a = comp_[c];
    const auto& b = o.comp_[c];
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  }
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  require_same_grid(*this, o);
  for (int c = 0; c < 3; ++c) {
    auto& a = comp_[c];
    const auto& b = o.comp_[c];
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  }
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (auto& a : comp_) {
    for (auto& v : a) v *= s;
  }
  return *this;
}

void SpectralField::axpy(double s, const SpectralField& o) {
  require_same_grid(*this, o);
  for (int c = 0; c < 3; ++c) {
    auto& a = comp_[c];
    const auto& b = o.comp_[c];
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  }
}

bool operator==(const SpectralField& a, const SpectralField& b) {
  if (!(a.grid_ == b.grid_)) return false;
  for (int c = 0; c < 3; ++c) {
    const auto& x = a.comp_[c];
    const auto& y = b.comp_[c];
    for (std::size_t i = 0; i < x.size(); ++i) {
      // Compare representations so that -0.0 and 0.0 differ, as in a file.
      if (std::signbit(x[i].real()) != std::signbit(y[i].real()) ||
          std::signbit(x[i].imag()) != std::signbit(y[i].imag()) ||
          x[i] != y[i]) {
        return false;
      }
    }
  }
  return true;
}

std::size_t SpectralField::nonzero_modes() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    if (comp_[0][i] != Complex{} || comp_[1][i] != Complex{} ||
        comp_[2][i] != Complex{}) {
      ++count;
    }
  }
  return count;
}

InvariantDefects check_invariants(const SpectralField& u) {
  const Grid& g = u.grid();
  InvariantDefects d;
  double umax = 0.0;
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    const CVec3 v = u.at(idx);
    const double mag = std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
    if (!g.retained_index(idx)) {
      d.outside = std::max(d.outside, mag);
      continue;
    }
    umax = std::max(umax, mag);
  }
  for_each_mode(g, [&](std::size_t idx, const Wavevector& k) {
    const CVec3 v = u.at(idx);
    const CVec3 w = u.at(g.mirror(idx));
    for (int c = 0; c < 3; ++c) {
      d.hermitian = std::max(d.hermitian, std::abs(w[c] - std::conj(v[c])));
    }
    const int k2 = Grid::norm_sq(k);
    if (k2 == 0) {
      d.mean = std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
      return;
    }
    const Complex div = double(k[0]) * v[0] + double(k[1]) * v[1] + double(k[2]) * v[2];
    if (umax > 0.0) {
      d.divergence = std::max(d.divergence, std::abs(div) / (std::sqrt(double(k2)) * umax));
    }
  });
  return d;
}

void assert_invariants(const SpectralField& u, double tol) {
  const InvariantDefects d = check_invariants(u);
  if (d.hermitian > 0.0 || d.mean > 0.0 || d.outside > 0.0 || d.divergence > tol) {
    std::ostringstream os;
    os << "field invariants violated: hermitian=" << d.hermitian << " mean=" << d.mean
       << " divergence=" << d.divergence << " nyquist=" << d.outside;
    throw InvalidArgument(os.str());
  }
}

void require_same_grid(const SpectralField& a, const SpectralField& b) {
  if (!(a.grid() == b.grid())) {
    throw GridMismatch("fields live on different grids (n=" +
                       std::to_string(a.grid().n()) + " vs n=" +
                       std::to_string(b.grid().n()) + ")");
  }
}

}  // namespace nse3d
