#include "nse3d/config_file.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "nse3d/errors.hpp"

namespace nse3d {
namespace {

struct Entry {
  std::string section;
  std::string key;
  std::string value;
  int line = 0;  // 0 for command-line overrides
};

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"grid", {"n"}},
      {"scheme", {"scheme", "k", "nu", "fp_tol", "fp_max_iter", "deterministic"}},
      {"initial", {"kind", "amplitude", "seed", "slope", "kmax", "path"}},
      {"forcing",
       {"kind", "mode", "amplitude", "seed", "slope", "kmax", "mod_offset", "mod_scale",
        "mod_omega", "mod_phase"}},
      {"constants", {"c0", "c1", "c2", "c3", "c4", "c5"}},
      {"run",
       {"t_end", "n_steps", "monitor", "enforce_restrictions", "allow_over_horizon",
        "stop_on_violation", "seed"}},
      {"output", {"dir", "snapshot_every"}},
  };
  return keys;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void fail(const Entry& e, const std::string& why) {
  std::ostringstream os;
  if (e.line > 0) {
    os << "line " << e.line << ": ";
  } else {
    os << "override: ";
  }
  os << e.section << '.' << e.key << ": " << why;
  throw ConfigError(os.str(), e.line, e.key);
}

void check_known(const Entry& e) {
  const auto& keys = known_keys();
  const auto it = keys.find(e.section);
  if (it == keys.end()) fail(e, "unknown section '" + e.section + "'");
  if (!it->second.count(e.key)) fail(e, "unknown key '" + e.key + "'");
}

double parse_double(const Entry& e, std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    fail(e, "expected a number, got '" + std::string(s) + "'");
  }
  if (!std::isfinite(v)) fail(e, "value must be finite");
  return v;
}

double to_double(const Entry& e) { return parse_double(e, e.value); }

double to_positive(const Entry& e) {
  const double v = to_double(e);
  if (!(v > 0.0)) fail(e, "value must be > 0");
  return v;
}

double to_nonneg(const Entry& e) {
  const double v = to_double(e);
  if (!(v >= 0.0)) fail(e, "value must be >= 0");
  return v;
}

template <class Int>
Int to_int(const Entry& e, std::string_view s) {
  Int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    fail(e, "expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

template <class Int>
Int to_int(const Entry& e) {
  return to_int<Int>(e, e.value);
}

bool to_bool(const Entry& e) {
  std::string v = e.value;
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  fail(e, "expected a boolean, got '" + e.value + "'");
}

ForcingMode to_mode(const Entry& e) {
  std::istringstream is(e.value);
  std::vector<std::string> tok;
  for (std::string t; is >> t;) tok.push_back(t);
  if (tok.size() != 9) fail(e, "expected 'kx ky kz re_x im_x re_y im_y re_z im_z'");
  ForcingMode m;
  for (int i = 0; i < 3; ++i) m.kappa[i] = to_int<int>(e, tok[i]);
  for (int c = 0; c < 3; ++c) {
    m.coeff[c] = Complex(parse_double(e, tok[3 + 2 * c]), parse_double(e, tok[4 + 2 * c]));
  }
  return m;
}

std::vector<Entry> parse_entries(const std::string& text) {
  std::vector<Entry> out;
  std::istringstream is(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    const auto hash = raw.find_first_of("#;");
    const std::string s = trim(std::string_view(raw).substr(0, hash));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError("line " + std::to_string(line) + ": bad section header", line);
      section = trim(std::string_view(s).substr(1, s.size() - 2));
      if (!known_keys().count(section)) {
        throw ConfigError("line " + std::to_string(line) + ": unknown section '" + section + "'",
                          line, section);
      }
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line) + ": expected 'key = value'", line);
    }
    Entry e{section, trim(std::string_view(s).substr(0, eq)), trim(std::string_view(s).substr(eq + 1)),
            line};
    if (section.empty()) {
      throw ConfigError("line " + std::to_string(line) + ": key '" + e.key + "' outside a section",
                        line, e.key);
    }
    check_known(e);
    out.push_back(std::move(e));
  }
  return out;
}

void apply_override(std::vector<Entry>& entries, const std::string& ov) {
  const auto eq = ov.find('=');
  const auto dot = ov.find('.');
  if (eq == std::string::npos || dot == std::string::npos || dot > eq) {
    throw ConfigError("override '" + ov + "' must look like section.key=value");
  }
  Entry e{trim(std::string_view(ov).substr(0, dot)),
          trim(std::string_view(ov).substr(dot + 1, eq - dot - 1)),
          trim(std::string_view(ov).substr(eq + 1)), 0};
  check_known(e);
  if (!(e.section == "forcing" && e.key == "mode")) {
    std::erase_if(entries, [&](const Entry& x) { return x.section == e.section && x.key == e.key; });
  }
  entries.push_back(std::move(e));
}

RunConfig build(const std::vector<Entry>& entries) {
  RunConfig c;
  std::map<std::string, const Entry*> last;
  for (const auto& e : entries) {
    const std::string id = e.section + "." + e.key;
    if (e.key != "mode" && last.count(id) && last[id]->line > 0 && e.line > 0) {
      fail(e, "duplicate key (first set on line " + std::to_string(last[id]->line) + ")");
    }
    last[id] = &e;
  }
  const auto get = [&](const std::string& id) -> const Entry* {
    const auto it = last.find(id);
    return it == last.end() ? nullptr : it->second;
  };

  if (auto e = get("grid.n")) {
    c.n = to_int<int>(*e);
    if (c.n < 4 || c.n % 2 != 0) fail(*e, "grid resolution must be even and >= 4");
  }

  if (auto e = get("scheme.scheme")) {
    try {
      c.scheme.scheme = scheme_from_string(e->value);
    } catch (const Error&) {
      fail(*e, "unknown scheme '" + e->value + "'");
    }
  }
  if (auto e = get("scheme.k")) c.scheme.k = to_positive(*e);
  if (auto e = get("scheme.nu")) c.scheme.nu = to_positive(*e);
  if (auto e = get("scheme.fp_tol")) c.scheme.fp_tol = to_positive(*e);
  if (auto e = get("scheme.fp_max_iter")) {
    c.scheme.fp_max_iter = to_int<int>(*e);
    if (c.scheme.fp_max_iter < 1) fail(*e, "value must be >= 1");
  }
  if (auto e = get("scheme.deterministic")) c.scheme.deterministic = to_bool(*e);

  if (auto e = get("run.seed")) c.seed = to_int<std::uint64_t>(*e);
  const auto random_spec = [&](const std::string& sec) {
    RandomFieldSpec r;
    r.seed = c.seed;
    if (auto e = get(sec + ".seed")) r.seed = to_int<std::uint64_t>(*e);
    if (auto e = get(sec + ".slope")) r.slope = to_double(*e);
    if (auto e = get(sec + ".amplitude")) r.amplitude = to_nonneg(*e);
    if (auto e = get(sec + ".kmax")) {
      r.kmax = to_int<int>(*e);
      if (r.kmax < 1 || r.kmax > c.n / 2 - 1) fail(*e, "kmax must lie in [1, n/2-1]");
    }
    return r;
  };

  const std::string ikind = get("initial.kind") ? get("initial.kind")->value : "zero";
  if (ikind == "zero") {
    c.initial = InitialData::zero();
  } else if (ikind == "shear" || ikind == "planar_vortex") {
    const double a = get("initial.amplitude") ? to_double(*get("initial.amplitude")) : 1.0;
    c.initial = ikind == "shear" ? InitialData::shear(a) : InitialData::planar_vortex(a);
  } else if (ikind == "random") {
    c.initial = InitialData::random_field(random_spec("initial"));
  } else if (ikind == "file") {
    const Entry* p = get("initial.path");
    if (!p || p->value.empty()) fail(*get("initial.kind"), "kind 'file' needs initial.path");
    c.initial = InitialData::file(p->value);
  } else {
    fail(*get("initial.kind"),
         "unknown initial kind '" + ikind + "' (zero, shear, planar_vortex, random, file)");
  }

  const std::string fkind = get("forcing.kind") ? get("forcing.kind")->value : "zero";
  if (fkind == "zero") {
    c.forcing.kind = ForcingSpec::Kind::zero;
  } else if (fkind == "modes") {
    c.forcing.kind = ForcingSpec::Kind::fixed_modes;
    for (const auto& e : entries) {
      if (e.section != "forcing" || e.key != "mode") continue;
      ForcingMode m = to_mode(e);
      const int h = c.n / 2;
      const bool retained = std::all_of(m.kappa.begin(), m.kappa.end(),
                                        [&](int v) { return v > -h && v < h; });
      if (!retained) fail(e, "wavevector outside the retained mode set");
      if (m.kappa == Wavevector{0, 0, 0}) fail(e, "forcing must have zero mean");
      c.forcing.modes.push_back(m);
    }
    if (c.forcing.modes.empty()) fail(*get("forcing.kind"), "kind 'modes' needs forcing.mode");
  } else if (fkind == "random") {
    c.forcing.kind = ForcingSpec::Kind::random_divfree;
    c.forcing.random = random_spec("forcing");
  } else {
    fail(*get("forcing.kind"), "unknown forcing kind '" + fkind + "' (zero, modes, random)");
  }
  if (get("forcing.mod_offset") || get("forcing.mod_scale") || get("forcing.mod_omega") ||
      get("forcing.mod_phase")) {
    Modulation m;
    if (auto e = get("forcing.mod_offset")) m.offset = to_double(*e);
    if (auto e = get("forcing.mod_scale")) m.scale = to_double(*e);
    if (auto e = get("forcing.mod_omega")) m.omega = to_double(*e);
    if (auto e = get("forcing.mod_phase")) m.phase = to_double(*e);
    c.forcing.modulation = m;
  }

  if (auto e = get("constants.c0")) c.constants.c0 = to_positive(*e);
  if (auto e = get("constants.c1")) c.constants.c1 = to_positive(*e);
  if (auto e = get("constants.c2")) c.constants.c2 = to_positive(*e);
  if (auto e = get("constants.c4")) c.constants.c4 = to_positive(*e);
  if (auto e = get("constants.c5")) c.constants.c5 = to_positive(*e);
  if (auto e = get("constants.c3")) {
    const double c3 = to_positive(*e);
    if (std::abs(c3 - c.constants.c3()) > 1e-12 * c.constants.c3()) {
      fail(*e, "c3 is derived as sqrt(c2/c0) = " + std::to_string(c.constants.c3()) +
                   "; set c2 instead");
    }
  }

  if (auto e = get("run.t_end")) c.t_end = to_nonneg(*e);
  if (auto e = get("run.n_steps")) {
    c.n_steps = to_int<long>(*e);
    if (*c.n_steps < 0) fail(*e, "value must be >= 0");
  }
  if (c.t_end && c.n_steps) fail(*get("run.n_steps"), "give either run.t_end or run.n_steps");
  if (!c.t_end && !c.n_steps) c.n_steps = 0;
  if (auto e = get("run.monitor")) {
    try {
      c.monitor = variant_from_string(e->value);
    } catch (const Error&) {
      fail(*e, "unknown monitor variant '" + e->value + "'");
    }
    if (!variant_matches(c.monitor, c.scheme.scheme)) {
      fail(*e, "variant " + e->value + " does not apply to the " +
                   std::string(to_string(c.scheme.scheme)) + " scheme");
    }
  }
  if (auto e = get("run.enforce_restrictions")) c.enforce_restrictions = to_bool(*e);
  if (auto e = get("run.allow_over_horizon")) c.allow_over_horizon = to_bool(*e);
  if (auto e = get("run.stop_on_violation")) c.stop_on_violation = to_bool(*e);

  if (auto e = get("output.dir")) c.out_dir = e->value;
  if (auto e = get("output.snapshot_every")) {
    c.snapshot_every = to_int<long>(*e);
    if (c.snapshot_every < 0) fail(*e, "value must be >= 0");
  }
  return c;
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::vector<std::string>& overrides) {
  std::vector<Entry> entries = parse_entries(text);
  for (const auto& ov : overrides) apply_override(entries, ov);
  RunConfig c = build(entries);
  try {
    c.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  return c;
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
  if (path.empty()) return parse_config("", overrides);
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config file " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str(), overrides);
}

}  // namespace nse3d
