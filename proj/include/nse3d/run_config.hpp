#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nse3d/constants.hpp"
#include "nse3d/field_factory.hpp"
#include "nse3d/scheme.hpp"
#include "nse3d/timestepper.hpp"

namespace nse3d {

struct RunConfig {
  int n = 16;
  SchemeConfig scheme;
  InitialData initial;
  ForcingSpec forcing;
  ConstantsSet constants;
  std::optional<double> t_end;
  std::optional<long> n_steps;
  Variant monitor = Variant::none;

  /// Refuse to start when k exceeds the monitored variant's admissible step.
  bool enforce_restrictions = true;
  /// Short-time variants stop at their horizon unless this is set.
  bool allow_over_horizon = false;
  /// Stop after the first step whose theorem bound fails.
  bool stop_on_violation = true;

  long snapshot_every = 0;  // 0: no snapshots
  std::string out_dir;      // empty: nothing written
  std::uint64_t seed = 0;

  /// Throws InvalidArgument on inconsistent settings.
  void validate() const;
  /// Number of steps implied by n_steps or t_end / k.
  long steps() const;
};

}  // namespace nse3d
