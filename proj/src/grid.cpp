#include "nse3d/grid.hpp"

#include <string>

#include "nse3d/errors.hpp"

namespace nse3d {

Grid::Grid(int n) : n_(n), m_(0) {
  if (n < 4 || n % 2 != 0) {
    throw InvalidArgument("grid resolution must be an even integer >= 4, got " +
                          std::to_string(n));
  }
  m_ = (3 * n + 1) / 2;
  if (m_ % 2 != 0) ++m_;
}

}  // namespace nse3d
