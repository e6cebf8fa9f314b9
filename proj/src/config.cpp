#include "seabed/config.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "seabed/errors.hpp"
#include "seabed/profiles.hpp"

namespace seabed::cli {

namespace {

// Grid is immutable, so N and L are collected here and the grid is rebuilt last.
struct Draft {
  RunConfig config;
  int n = 256;
  double L = 20.0;
};

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

double parse_double(std::string_view s, int line, std::string_view key) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ParseError(line, "expected a number for '" + std::string(key) + "', got '" +
                               std::string(s) + "'");
  }
  return v;
}

int parse_int(std::string_view s, int line, std::string_view key) {
  int v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw ParseError(line, "expected an integer for '" + std::string(key) + "', got '" +
                               std::string(s) + "'");
  }
  return v;
}

struct Field {
  std::string section;
  std::string key;
  std::function<void(Draft&, std::string_view, int)> set;
  std::function<std::string(const Draft&)> get;
};

Field real(std::string section, std::string key, double& (*ref)(Draft&)) {
  const std::string k = key;
  return {std::move(section), std::move(key),
          [ref, k](Draft& d, std::string_view v, int line) { ref(d) = parse_double(v, line, k); },
          [ref](const Draft& d) { return format_double(ref(const_cast<Draft&>(d))); }};
}

Field integer(std::string section, std::string key, int& (*ref)(Draft&)) {
  const std::string k = key;
  return {std::move(section), std::move(key),
          [ref, k](Draft& d, std::string_view v, int line) { ref(d) = parse_int(v, line, k); },
          [ref](const Draft& d) { return std::to_string(ref(const_cast<Draft&>(d))); }};
}

Field word(std::string section, std::string key, std::string& (*ref)(Draft&),
           std::set<std::string> allowed) {
  const std::string k = key;
  return {std::move(section), std::move(key),
          [ref, k, allowed](Draft& d, std::string_view v, int line) {
            if (!allowed.empty() && !allowed.count(std::string(v))) {
              throw ParseError(line, "unsupported value '" + std::string(v) + "' for '" + k + "'");
            }
            ref(d) = std::string(v);
          },
          [ref](const Draft& d) { return ref(const_cast<Draft&>(d)); }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> f;
    f.push_back({"model", "model",
                 [](Draft& d, std::string_view v, int line) {
                   if (v == "muskat") {
                     d.config.sim.params.model = Model::Muskat;
                   } else if (v == "water_waves") {
                     d.config.sim.params.model = Model::WaterWaves;
                   } else {
                     throw ParseError(line, "model must be muskat or water_waves, got '" +
                                                std::string(v) + "'");
                   }
                 },
                 [](const Draft& d) {
                   return std::string(d.config.sim.params.model == Model::Muskat ? "muskat"
                                                                                 : "water_waves");
                 }});
    f.push_back(real("model", "dt", [](Draft& d) -> double& { return d.config.sim.dt; }));
    f.push_back(real("model", "t_end", [](Draft& d) -> double& { return d.config.sim.t_end; }));
    f.push_back(integer("model", "snapshot_every",
                        [](Draft& d) -> int& { return d.config.sim.snapshot_every; }));
    f.push_back(real("model", "cfl_safety", [](Draft& d) -> double& { return d.config.sim.cfl_safety; }));
    f.push_back(real("model", "picard_tol", [](Draft& d) -> double& { return d.config.sim.tol.picard; }));
    f.push_back(integer("model", "picard_max_iter",
                        [](Draft& d) -> int& { return d.config.sim.tol.picard_max_iter; }));
    f.push_back(real("model", "implicit_tol",
                     [](Draft& d) -> double& { return d.config.sim.tol.implicit; }));
    f.push_back(integer("model", "max_implicit_iter",
                        [](Draft& d) -> int& { return d.config.sim.tol.max_implicit_iter; }));
    f.push_back(real("model", "contact_tol", [](Draft& d) -> double& { return d.config.sim.contact_tol; }));
    f.push_back(real("model", "blowup_cap", [](Draft& d) -> double& { return d.config.sim.blowup_cap; }));
    f.push_back(real("model", "chord_arc_cap",
                     [](Draft& d) -> double& { return d.config.sim.chord_arc_cap; }));

    f.push_back(integer("grid", "N", [](Draft& d) -> int& { return d.n; }));
    f.push_back(real("grid", "L", [](Draft& d) -> double& { return d.L; }));

    f.push_back(real("physics", "mu_plus", [](Draft& d) -> double& { return d.config.sim.params.mu_plus; }));
    f.push_back(real("physics", "mu_minus", [](Draft& d) -> double& { return d.config.sim.params.mu_minus; }));
    f.push_back(real("physics", "rho_plus", [](Draft& d) -> double& { return d.config.sim.params.rho_plus; }));
    f.push_back(real("physics", "rho_minus", [](Draft& d) -> double& { return d.config.sim.params.rho_minus; }));
    f.push_back(real("physics", "g", [](Draft& d) -> double& { return d.config.sim.params.g; }));
    f.push_back(real("physics", "gamma", [](Draft& d) -> double& { return d.config.sim.params.gamma; }));

    f.push_back(word("initial", "profile", [](Draft& d) -> std::string& { return d.config.initial.profile; },
                     {"flat", "cosine", "pinch", "monotone"}));
    f.push_back(real("initial", "amplitude", [](Draft& d) -> double& { return d.config.initial.amplitude; }));
    f.push_back(real("initial", "depth", [](Draft& d) -> double& { return d.config.initial.depth; }));
    f.push_back(real("initial", "center", [](Draft& d) -> double& { return d.config.initial.center; }));
    f.push_back(real("initial", "plateau", [](Draft& d) -> double& { return d.config.initial.plateau; }));
    f.push_back(real("initial", "ramp", [](Draft& d) -> double& { return d.config.initial.ramp; }));
    f.push_back(real("initial", "width", [](Draft& d) -> double& { return d.config.initial.width; }));
    f.push_back(real("initial", "z1_amplitude",
                     [](Draft& d) -> double& { return d.config.initial.z1_amplitude; }));
    f.push_back(word("initial", "omega", [](Draft& d) -> std::string& { return d.config.initial.omega; },
                     {"zero", "gaussian"}));
    f.push_back(real("initial", "omega_amplitude",
                     [](Draft& d) -> double& { return d.config.initial.omega_amplitude; }));
    f.push_back(real("initial", "omega_center",
                     [](Draft& d) -> double& { return d.config.initial.omega_center; }));
    f.push_back(real("initial", "omega_width",
                     [](Draft& d) -> double& { return d.config.initial.omega_width; }));

    f.push_back(word("output", "dir", [](Draft& d) -> std::string& { return d.config.output_dir; }, {}));
    return f;
  }();
  return table;
}

constexpr std::array<std::string_view, 5> kSections{"model", "grid", "physics", "initial", "output"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

void validate_initial(const InitialSpec& s) {
  if (s.profile == "pinch" && (!(s.depth > 0.0) || !(s.depth <= 1.0))) {
    throw ValidationError("pinch depth must lie in (0, 1]");
  }
  if (!(s.plateau >= 0.0) || !(s.ramp >= 0.0)) throw ValidationError("window plateau and ramp must be >= 0");
  if (!(s.width > 0.0) || !(s.omega_width > 0.0)) throw ValidationError("widths must be positive");
}

}  // namespace

RunConfig parse_config_text(std::string_view text) {
  Draft draft;
  std::string section;
  std::set<std::string> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "unterminated section header");
      const std::string name(trim(line.substr(1, line.size() - 2)));
      if (std::find(kSections.begin(), kSections.end(), name) == kSections.end()) {
        throw ParseError(line_no, "unknown section [" + name + "]");
      }
      section = name;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "missing key before '='");
    if (value.empty() || value.find('=') != std::string_view::npos) {
      throw ParseError(line_no, "malformed value for '" + key + "'");
    }
    if (section.empty()) throw ParseError(line_no, "key '" + key + "' appears before any section");

    const auto& table = fields();
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const Field& f) { return f.section == section && f.key == key; });
    if (it == table.end()) throw ParseError(line_no, "unknown key '" + key + "' in [" + section + "]");
    if (!seen.insert(section + "." + key).second) {
      throw ParseError(line_no, "duplicate key '" + key + "' in [" + section + "]");
    }
    it->set(draft, value, line_no);
  }

  draft.config.sim.grid = Grid(draft.L, draft.n);
  draft.config.sim.validate();
  validate_initial(draft.config.initial);
  return draft.config;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string serialize(const RunConfig& config) {
  Draft draft{config, config.sim.grid.size(), config.sim.grid.half_width()};
  std::string out;
  for (const auto section : kSections) {
    if (!out.empty()) out += "\n";
    out += "[" + std::string(section) + "]\n";
    for (const auto& f : fields()) {
      if (f.section == section) out += f.key + " = " + f.get(draft) + "\n";
    }
  }
  return out;
}

std::uint64_t config_hash(const RunConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : serialize(config)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t hash) {
  std::array<char, 17> buf{};
  std::snprintf(buf.data(), buf.size(), "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buf.data());
}

State build_initial(const RunConfig& config) {
  const Grid& grid = config.sim.grid;
  const InitialSpec& s = config.initial;
  validate_initial(s);
  const profiles::Window window{s.center, s.plateau, s.ramp};

  auto make_curve = [&]() -> InterfaceCurve {
    if (s.profile == "flat") return InterfaceCurve::flat(grid);
    if (s.profile == "cosine") return profiles::cosine_bump(grid, s.amplitude, window);
    if (s.profile == "pinch") return profiles::pinch(grid, s.depth, s.center, s.width);
    if (s.profile == "monotone") return profiles::monotone_cosine(grid, s.amplitude, s.z1_amplitude, window);
    throw ValidationError("unknown initial profile '" + s.profile + "'");
  };
  InterfaceCurve curve = make_curve();

  VorticityStrength omega = VorticityStrength::zero(grid);
  if (config.sim.params.model == Model::WaterWaves && s.omega == "gaussian") {
    omega = profiles::gaussian_vorticity(grid, s.omega_amplitude, s.omega_center, s.omega_width);
  }
  return State{std::move(curve), std::move(omega), 0.0};
}

}  // namespace seabed::cli
