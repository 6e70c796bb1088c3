#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "nse3d/spectral_field.hpp"

namespace nse3d {

/// Snapshot format (little endian):
///   "NSE3DFLD" | u32 version | u32 n | per retained mode, kappa in
///   lexicographic order (kx, then ky, then kz, each ascending from -n/2+1):
///   re/im of the three components as six f64.
inline constexpr char kFieldMagic[8] = {'N', 'S', 'E', '3', 'D', 'F', 'L', 'D'};
inline constexpr std::uint32_t kFieldVersion = 1;

void write_field(std::ostream& os, const SpectralField& u);
SpectralField read_field(std::istream& is);

/// Writes through a temporary file in the same directory and renames it.
void write_field(const std::string& path, const SpectralField& u);
SpectralField read_field(const std::string& path);

/// Writes `contents` to `path` via write-then-rename.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace nse3d
