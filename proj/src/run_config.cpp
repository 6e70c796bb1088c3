#include "nse3d/run_config.hpp"

#include <cmath>

#include "nse3d/errors.hpp"

namespace nse3d {

void RunConfig::validate() const {
  Grid g(n);
  scheme.validate();
  constants.validate();
  if (t_end.has_value() == n_steps.has_value()) {
    throw InvalidArgument("exactly one of t_end and n_steps must be given");
  }
  if (t_end && !(*t_end >= 0.0)) throw InvalidArgument("t_end must be >= 0");
  if (n_steps && *n_steps < 0) throw InvalidArgument("n_steps must be >= 0");
  if (snapshot_every < 0) throw InvalidArgument("snapshot cadence must be >= 0");
  if (!variant_matches(monitor, scheme.scheme)) {
    throw InvalidArgument("monitor variant " + std::string(to_string(monitor)) +
                          " does not apply to the " + std::string(to_string(scheme.scheme)) +
                          " scheme");
  }
}

long RunConfig::steps() const {
  if (n_steps) return *n_steps;
  // Tolerate representation error in t_end / k (e.g. 1.0 / 0.01).
  return static_cast<long>(std::floor(*t_end / scheme.k * (1.0 + 1e-12) + 1e-9));
}

}  // namespace nse3d
