#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "nse3d/errors.hpp"
#include "nse3d/field_io.hpp"
#include "test_util.hpp"

using namespace nse3d;
using nse3d::testing::l2;
using nse3d::testing::rand_field;
using nse3d::testing::rand_raw;
using nse3d::testing::rand_scalar;

namespace {
const double kPi3 = std::numbers::pi * std::numbers::pi * std::numbers::pi;
}

TEST(Grid, PaddedSizeAndModeSet) {
  EXPECT_EQ(Grid(16).padded(), 24);
  EXPECT_EQ(Grid(4).padded(), 6);
  EXPECT_EQ(Grid(6).padded(), 10);  // 9 rounded up to even
  EXPECT_EQ(Grid(16).kmax(), 7);
  EXPECT_THROW(Grid(2), InvalidArgument);
  EXPECT_THROW(Grid(7), InvalidArgument);

  const Grid g(8);
  std::size_t count = 0;
  for_each_mode(g, [&](std::size_t idx, const Wavevector& k) {
    ++count;
    EXPECT_TRUE(g.retained(k));
    EXPECT_TRUE(g.retained({-k[0], -k[1], -k[2]}));
    EXPECT_EQ(g.wavevector(idx), k);
    EXPECT_EQ(g.wavevector(g.mirror(idx)), (Wavevector{-k[0], -k[1], -k[2]}));
  });
  EXPECT_EQ(count, 7u * 7u * 7u);
  EXPECT_FALSE(g.retained({4, 0, 0}));
}

TEST(Leray, SingleModeExample) {
  const Grid g(8);
  SpectralField w(g);
  w.set_pair({1, 0, 0}, {Complex(1.0), Complex(1.0), Complex(0.0)});
  const SpectralField p = project_leray(w);
  const CVec3 v = p.at(Wavevector{1, 0, 0});
  EXPECT_EQ(v[0], Complex(0.0));
  EXPECT_EQ(v[1], Complex(1.0));
  EXPECT_EQ(v[2], Complex(0.0));
  EXPECT_EQ(p.at(Wavevector{-1, 0, 0})[1], Complex(1.0));
}

TEST(Leray, AnnihilatesGradientsAndIsIdempotent) {
  const Grid g(16);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const SpectralField grad = gradient(g, rand_scalar(g, s));
    EXPECT_LE(l2(project_leray(grad)), 1e-12 * l2(grad));

    const SpectralField w = rand_raw(g, 100 + s);
    const SpectralField p = project_leray(w);
    EXPECT_LE(l2(project_leray(p) - p), 1e-12 * l2(p));
    EXPECT_LE(std::abs(inner(p, grad)), 1e-12 * l2(p) * l2(grad));
    EXPECT_LE(check_invariants(p).divergence, 1e-14);
  }
}

TEST(Leray, DivergenceFreeFieldUnchanged) {
  const Grid g(16);
  const SpectralField u = rand_field(g, 3);
  EXPECT_LE(l2(project_leray(u) - u), 1e-14 * l2(u));
}

TEST(Nonlinear, ShearIsStationary) {
  const Grid g(16);
  const SpectralField u = shear_field(g, 1.0);
  EXPECT_LE(l2(nonlinear_term(u, u)), 1e-14);
}

TEST(Nonlinear, PlanarVortexAdvectionIsAGradient) {
  const Grid g(16);
  const SpectralField u = planar_vortex_field(g, 1.0);
  EXPECT_LE(l2(nonlinear_term(u, u)), 1e-13 * l2(u));
}

TEST(Nonlinear, SkewSymmetryOnRandomPairs) {
  const Grid g(16);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const SpectralField u = rand_field(g, 2 * s);
    const SpectralField v = rand_field(g, 2 * s + 1);
    const double scale = l2(u) * std::sqrt(spectral_norms(v).h1_sq) * l2(v);
    EXPECT_LE(std::abs(inner(nonlinear_term(u, v), v)), 1e-10 * scale);
  }
}

TEST(Nonlinear, PreservesInvariants) {
  const Grid g(12);
  const SpectralField n = nonlinear_term(rand_field(g, 1), rand_field(g, 2));
  const InvariantDefects d = check_invariants(n);
  EXPECT_EQ(d.hermitian, 0.0);
  EXPECT_EQ(d.mean, 0.0);
  EXPECT_EQ(d.outside, 0.0);
  EXPECT_LE(d.divergence, 1e-14);
}

TEST(Nonlinear, RejectsGridMismatch) {
  EXPECT_THROW(nonlinear_term(SpectralField(Grid(8)), SpectralField(Grid(12))), GridMismatch);
}

TEST(Norms, ShearValues) {
  const NormBundle nb = norms(shear_field(Grid(16), 1.0));
  const double v = 4.0 * kPi3;
  EXPECT_NEAR(nb.l2_sq, v, 1e-12 * v);
  EXPECT_NEAR(nb.h1_sq, v, 1e-12 * v);
  EXPECT_NEAR(nb.h2_sq, v, 1e-12 * v);
  EXPECT_NEAR(nb.hm1_sq, v, 1e-12 * v);
  EXPECT_NEAR(nb.l2_sq, 124.0251, 1e-4);
  // |sin z|^3 integrates to (2pi)^2 * 8/3; quadrature of |sin|^3 is only
  // algebraically accurate.
  const double l3 = std::cbrt(4.0 * std::numbers::pi * std::numbers::pi * 8.0 / 3.0);
  EXPECT_NEAR(nb.l3, l3, 1e-4 * l3);
}

TEST(Norms, ZeroField) {
  const NormBundle nb = norms(SpectralField(Grid(8)));
  EXPECT_EQ(nb.l2_sq, 0.0);
  EXPECT_EQ(nb.h1_sq, 0.0);
  EXPECT_EQ(nb.h2_sq, 0.0);
  EXPECT_EQ(nb.hm1_sq, 0.0);
  EXPECT_EQ(nb.h_half_sq, 0.0);
  EXPECT_EQ(nb.l3, 0.0);
  EXPECT_EQ(nb.l6, 0.0);
}

TEST(Norms, ShellTwoWeights) {
  SpectralField u(Grid(8));
  u.set_pair({0, 2, 0}, {Complex(1.0), Complex(0.0), Complex(0.0)});
  const NormBundle nb = spectral_norms(u);
  EXPECT_DOUBLE_EQ(nb.h1_sq, 4.0 * nb.l2_sq);
  EXPECT_DOUBLE_EQ(nb.hm1_sq, nb.l2_sq / 4.0);
  EXPECT_DOUBLE_EQ(nb.h_half_sq, 2.0 * nb.l2_sq);
  EXPECT_DOUBLE_EQ(nb.l2_sq, 2.0 * kVolume);
}

TEST(Norms, ParsevalMatchesQuadrature) {
  const Grid g(16);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const SpectralField u = rand_field(g, s);
    const double spec = spectral_norms(u).l2_sq;
    EXPECT_NEAR(l2_sq_quadrature(u), spec, 1e-10 * spec);
  }
}

TEST(Norms, PoincareSharpOnUnitShell) {
  const Grid g(16);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const NormBundle nb = spectral_norms(rand_field(g, s));
    EXPECT_GE(nb.h1_sq, nb.l2_sq);
  }
  const NormBundle unit = spectral_norms(rand_field(g, 9, 1.0, 1));
  EXPECT_DOUBLE_EQ(unit.h1_sq, unit.l2_sq);
}

TEST(Inner, Identities) {
  const Grid g(12);
  const SpectralField a = rand_field(g, 1);
  const SpectralField b = rand_field(g, 2);
  EXPECT_DOUBLE_EQ(inner(a, a), spectral_norms(a).l2_sq);
  const double aa = spectral_norms(a).l2_sq;
  const double id = 2.0 * inner(a - b, a) -
                    (aa - spectral_norms(b).l2_sq + spectral_norms(a - b).l2_sq);
  EXPECT_LE(std::abs(id), 1e-10 * aa);

  SpectralField p(g), q(g);
  p.set_pair({1, 0, 0}, {Complex(0.0), Complex(1.0), Complex(0.0)});
  q.set_pair({0, 1, 0}, {Complex(1.0), Complex(0.0), Complex(0.0)});
  EXPECT_EQ(inner(p, q), 0.0);
  EXPECT_THROW(inner(p, SpectralField(Grid(8))), GridMismatch);
}

TEST(MakeField, ShearHasTwoModes) {
  const SpectralField u = make_field(Grid(16), InitialData::shear(1.0));
  EXPECT_EQ(u.nonzero_modes(), 2u);
  EXPECT_EQ(u.at(Wavevector{0, 0, 1})[0], Complex(0.0, -0.5));
}

TEST(MakeField, RandomIsDeterministic) {
  const Grid g(16);
  RandomFieldSpec r{7, 2.0, 1.0, 3};
  const SpectralField a = make_field(g, InitialData::random_field(r));
  const SpectralField b = make_field(g, InitialData::random_field(r));
  EXPECT_TRUE(a == b);
  EXPECT_NEAR(spectral_norms(a).h1_sq, 1.0, 1e-14);
  r.seed = 8;
  EXPECT_FALSE(a == make_field(g, InitialData::random_field(r)));
  assert_invariants(a);
}

TEST(MakeField, KmaxBeyondGridThrows) {
  EXPECT_THROW(make_field(Grid(8), InitialData::random_field({1, 2.0, 1.0, 4})), InvalidArgument);
  EXPECT_THROW(make_field(Grid(8), InitialData::random_field({1, 2.0, 1.0, 0})), InvalidArgument);
}

TEST(FieldIo, RoundTripIsBitExact) {
  const Grid g(8);
  const SpectralField u = rand_field(g, 11);
  std::stringstream ss;
  write_field(ss, u);
  const std::string bytes = ss.str();
  EXPECT_EQ(bytes.size(), 16u + 7u * 7u * 7u * 48u);
  EXPECT_EQ(bytes.substr(0, 8), "NSE3DFLD");
  EXPECT_EQ(bytes[8], 1);
  EXPECT_EQ(bytes[12], 8);
  EXPECT_TRUE(read_field(ss) == u);

  const auto dir = std::filesystem::temp_directory_path() / "nse3d_fieldio";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "u.fld").string();
  write_field(path, u);
  EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
  EXPECT_TRUE(make_field(g, InitialData::file(path)) == u);
  EXPECT_THROW(make_field(Grid(12), InitialData::file(path)), GridMismatch);
}

TEST(FieldIo, RejectsMalformedFiles) {
  const Grid g(4);
  std::stringstream good;
  write_field(good, rand_field(g, 1));
  const std::string bytes = good.str();

  std::stringstream bad_magic("XXXXXXXX" + bytes.substr(8));
  EXPECT_THROW(read_field(bad_magic), FileFormatError);
  std::stringstream truncated(bytes.substr(0, bytes.size() - 3));
  EXPECT_THROW(read_field(truncated), FileFormatError);
  std::stringstream trailing(bytes + "x");
  EXPECT_THROW(read_field(trailing), FileFormatError);

  SpectralField broken(g);
  broken.set(g.index_of({1, 0, 0}), {Complex(0.0), Complex(1.0), Complex(0.0)});
  std::stringstream nonherm;
  write_field(nonherm, broken);
  EXPECT_THROW(read_field(nonherm), FileFormatError);
  EXPECT_THROW(read_field(std::string("/nonexistent/field.fld")), FileFormatError);
}

TEST(Transform, ShearOnCollocationGrid) {
  const Grid g(8);
  Transform& t = transform_for(g);
  std::vector<double> out(t.physical_size());
  t.to_physical(shear_field(g, 1.0), 0, -1, out);
  const int m = t.m();
  for (int l = 0; l < m; ++l) {
    EXPECT_NEAR(out[static_cast<std::size_t>(l)], std::sin(2.0 * std::numbers::pi * l / m),
                1e-14);
  }
  t.to_physical(shear_field(g, 1.0), 0, 2, out);  // d/dz sin z
  EXPECT_NEAR(out[0], 1.0, 1e-14);
}
