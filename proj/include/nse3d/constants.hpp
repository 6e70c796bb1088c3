#pragma once

#include <cmath>

namespace nse3d {

/// Domain constants of the energy estimates. c0 is the Poincare constant and
/// equals 1 for zero-mean fields on (0,2pi)^3; the Sobolev-type constants
/// c1, c2, c4, c5 have no known sharp values and default to 1.
/// c3 is not stored: it is always sqrt(c2/c0).
struct ConstantsSet {
  double c0 = 1.0;
  double c1 = 1.0;
  double c2 = 1.0;
  double c4 = 1.0;
  double c5 = 1.0;

  double c3() const { return std::sqrt(c2 / c0); }

  /// Throws InvalidArgument unless every constant is finite and positive.
  void validate() const;
};

}  // namespace nse3d
