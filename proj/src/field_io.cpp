#include "nse3d/field_io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nse3d/errors.hpp"

namespace nse3d {
namespace {

template <class U>
U to_little(U v) {
  if constexpr (std::endian::native == std::endian::big) {
    U r = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i) {
      r = (r << 8) | (v & 0xff);
      v >>= 8;
    }
    return r;
  } else {
    return v;
  }
}

void put_u32(std::ostream& os, std::uint32_t v) {
  const std::uint32_t le = to_little(v);
  os.write(reinterpret_cast<const char*>(&le), sizeof le);
}

void put_f64(std::ostream& os, double v) {
  const std::uint64_t le = to_little(std::bit_cast<std::uint64_t>(v));
  os.write(reinterpret_cast<const char*>(&le), sizeof le);
}

std::uint32_t get_u32(std::istream& is) {
  std::uint32_t le = 0;
  if (!is.read(reinterpret_cast<char*>(&le), sizeof le)) {
    throw FileFormatError("truncated field file header");
  }
  return to_little(le);
}

double get_f64(std::istream& is) {
  std::uint64_t le = 0;
  if (!is.read(reinterpret_cast<char*>(&le), sizeof le)) {
    throw FileFormatError("truncated field file body");
  }
  return std::bit_cast<double>(to_little(le));
}

template <class Fn>
void for_each_lexicographic(const Grid& g, Fn&& fn) {
  const int h = g.n() / 2;
  for (int kx = -h + 1; kx < h; ++kx)
    for (int ky = -h + 1; ky < h; ++ky)
      for (int kz = -h + 1; kz < h; ++kz) fn(Wavevector{kx, ky, kz});
}

}  // namespace

void write_field(std::ostream& os, const SpectralField& u) {
  const Grid& g = u.grid();
  os.write(kFieldMagic, sizeof kFieldMagic);
  put_u32(os, kFieldVersion);
  put_u32(os, static_cast<std::uint32_t>(g.n()));
  for_each_lexicographic(g, [&](const Wavevector& k) {
    const CVec3 v = u.at(k);
    for (const Complex& c : v) {
      put_f64(os, c.real());
      put_f64(os, c.imag());
    }
  });
  if (!os) throw Error("failed writing field data");
}

SpectralField read_field(std::istream& is) {
  char magic[sizeof kFieldMagic];
  if (!is.read(magic, sizeof magic) || std::memcmp(magic, kFieldMagic, sizeof magic) != 0) {
    throw FileFormatError("not a field file (bad magic)");
  }
  const std::uint32_t version = get_u32(is);
  if (version != kFieldVersion) {
    throw FileFormatError("unsupported field file version " + std::to_string(version));
  }
  const std::uint32_t n = get_u32(is);
  if (n < 4 || n % 2 != 0 || n > 4096) {
    throw FileFormatError("invalid grid resolution " + std::to_string(n) + " in field file");
  }
  const Grid g(static_cast<int>(n));
  SpectralField u(g);
  for_each_lexicographic(g, [&](const Wavevector& k) {
    CVec3 v;
    for (auto& c : v) {
      const double re = get_f64(is);
      const double im = get_f64(is);
      c = Complex(re, im);
    }
    u.set(g.index_of(k), v);
  });
  if (is.peek() != std::char_traits<char>::eof()) {
    throw FileFormatError("trailing bytes after field data");
  }
  const InvariantDefects d = check_invariants(u);
  if (d.hermitian != 0.0 || d.mean != 0.0 || d.divergence > 1e-10) {
    std::ostringstream os;
    os << "field file does not hold a real zero-mean divergence-free field (hermitian="
       << d.hermitian << ", mean=" << d.mean << ", divergence=" << d.divergence << ")";
    throw FileFormatError(os.str());
  }
  return u;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot open " + tmp.string() + " for writing");
    os.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    os.flush();
    if (!os) throw Error("failed writing " + tmp.string());
  }
  fs::rename(tmp, target);
}

void write_field(const std::string& path, const SpectralField& u) {
  std::ostringstream os(std::ios::binary);
  write_field(os, u);
  write_file_atomic(path, os.str());
}

SpectralField read_field(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FileFormatError("cannot open field file " + path);
  return read_field(is);
}

}  // namespace nse3d
