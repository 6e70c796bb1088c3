#include "nse3d/scheme.hpp"

#include "nse3d/errors.hpp"

namespace nse3d {

std::string_view to_string(Scheme s) {
  return s == Scheme::semi_implicit ? "semi_implicit" : "fully_implicit";
}

Scheme scheme_from_string(std::string_view s) {
  if (s == "semi_implicit" || s == "semi") return Scheme::semi_implicit;
  if (s == "fully_implicit" || s == "full") return Scheme::fully_implicit;
  throw InvalidArgument("unknown scheme '" + std::string(s) +
                        "' (expected semi_implicit or fully_implicit)");
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::semi_small: return "semi_small";
    case Variant::semi_short: return "semi_short";
    case Variant::full_small: return "full_small";
    case Variant::full_short: return "full_short";
    case Variant::none: return "none";
  }
  return "none";
}

Variant variant_from_string(std::string_view s) {
  for (Variant v : {Variant::semi_small, Variant::semi_short, Variant::full_small,
                    Variant::full_short, Variant::none}) {
    if (s == to_string(v)) return v;
  }
  throw InvalidArgument("unknown monitor variant '" + std::string(s) +
                        "' (expected semi_small, semi_short, full_small, full_short or none)");
}

bool variant_matches(Variant v, Scheme s) {
  switch (v) {
    case Variant::semi_small:
    case Variant::semi_short:
      return s == Scheme::semi_implicit;
    case Variant::full_small:
    case Variant::full_short:
      return s == Scheme::fully_implicit;
    case Variant::none:
      return true;
  }
  return false;
}

}  // namespace nse3d
