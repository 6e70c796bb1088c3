#include "nse3d/constants.hpp"

#include <string>

#include "nse3d/errors.hpp"

namespace nse3d {

void ConstantsSet::validate() const {
  const double values[] = {c0, c1, c2, c4, c5};
  const char* names[] = {"c0", "c1", "c2", "c4", "c5"};
  for (int i = 0; i < 5; ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw InvalidArgument(std::string("constant ") + names[i] + " must be finite and > 0");
    }
  }
}

}  // namespace nse3d
