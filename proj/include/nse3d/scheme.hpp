#pragma once

#include <string>
#include <string_view>

namespace nse3d {

enum class Scheme { semi_implicit, fully_implicit };

/// Which theorem a run is monitored against.
enum class Variant { semi_small, semi_short, full_small, full_short, none };

std::string_view to_string(Scheme s);
Scheme scheme_from_string(std::string_view s);

std::string_view to_string(Variant v);
Variant variant_from_string(std::string_view s);

/// The scheme a monitor variant is stated for; none accepts either.
bool variant_matches(Variant v, Scheme s);

}  // namespace nse3d
