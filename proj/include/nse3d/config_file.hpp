#pragma once

#include <string>
#include <vector>

#include "nse3d/run_config.hpp"

namespace nse3d {

// INI-style run configuration:
//
//   [scheme]
//   k = 0.01        # comments start with '#' or ';'
//
// Sections: grid, scheme, initial, forcing, constants, run, output. Unknown
// sections or keys raise ConfigError carrying the line number and key.
// forcing.mode may be repeated: "kx ky kz re_x im_x re_y im_y re_z im_z".

/// Parses config text. Each override has the form "section.key=value" and
/// replaces the file's value (forcing.mode overrides append a mode).
RunConfig parse_config(const std::string& text, const std::vector<std::string>& overrides = {});

/// Reads and parses a file; an empty path means defaults plus overrides.
RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {});

}  // namespace nse3d
