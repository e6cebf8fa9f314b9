#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "seabed/analysis.hpp"
#include "seabed/config.hpp"
#include "seabed/errors.hpp"
#include "seabed/evolve.hpp"

namespace seabed::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

constexpr const char* kCsvColumns =
    "t,m,alpha_star,dmdt,J,J_m,J_1,J_inf,chord_arc,c2_norm,omega_c1_norm,tail_bound";

struct Flags {
  bool seed_free = false;
  bool verbose = false;
};

void log(const Flags& flags, const std::string& msg) {
  if (flags.verbose) std::cerr << msg << "\n";
}

ordered_json header(const std::string& hash, const Flags& flags) {
  return {{"type", "header"}, {"version", kVersion}, {"config_hash", hash}, {"seed_free", flags.seed_free}};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

ordered_json to_json(const analysis::DepthDiagnostics& d) {
  return {{"t", d.t},
          {"m", d.m},
          {"alpha_star", d.alpha_star},
          {"dmdt", d.dmdt},
          {"J", d.J},
          {"J_m", d.J_m},
          {"J_1", d.J_1},
          {"J_inf", d.J_inf},
          {"chord_arc", d.chord_arc},
          {"c2_norm", d.c2_norm},
          {"omega_c1_norm", d.omega_c1_norm},
          {"tail_bound", d.tail_bound},
          {"argmin_index", d.argmin_index},
          {"ties", d.ties},
          {"near_band_clipped", d.near_band_clipped}};
}

ordered_json to_json(const analysis::ContinuationReport& r) {
  ordered_json j{{"t", r.t},
                 {"m", r.m},
                 {"alpha_star", r.alpha_star},
                 {"dmdt", r.dmdt},
                 {"curve_c0", r.curve_norms.c0},
                 {"curve_c1", r.curve_norms.c1},
                 {"curve_c2", r.curve_norms.c2},
                 {"curve_c2_norm", r.curve_c2_norm},
                 {"required_order", r.required_order}};
  if (r.required_order == 4) j["curve_c4_norm"] = r.curve_c4_norm;
  j["omega_c0_norm"] = r.omega_c0_norm;
  j["omega_c1_norm"] = r.omega_c1_norm;
  j["chord_arc"] = r.chord_arc;
  j["bound_ratio"] = r.ratio_applicable ? ordered_json(r.bound_ratio) : ordered_json("not applicable");
  j["exceeded"] = r.exceeded;
  j["verdict"] = r.verdict;
  return j;
}

ordered_json to_json(const analysis::BoundFit& f) {
  return {{"C_fit", f.C_fit}, {"slope", f.slope},     {"intercept", f.intercept},
          {"residual", f.residual}, {"t_begin", f.t_begin}, {"t_end", f.t_end}};
}

class CsvSink : public Sink {
 public:
  CsvSink(const std::filesystem::path& path, const std::string& hash) : out_(path) {
    if (!out_) throw std::runtime_error("cannot write " + path.string());
    out_ << "# " << kVersion << "\n# config_hash " << hash << "\n" << kCsvColumns << "\n";
  }
  void diagnostics(const analysis::DepthDiagnostics& d) override {
    const double row[] = {d.t, d.m, d.alpha_star, d.dmdt, d.J, d.J_m, d.J_1, d.J_inf,
                          d.chord_arc, d.c2_norm, d.omega_c1_norm, d.tail_bound};
    for (std::size_t i = 0; i < std::size(row); ++i) out_ << (i ? "," : "") << fmt(row[i]);
    out_ << "\n";
  }

 private:
  std::ofstream out_;
};

class SnapshotSink : public Sink {
 public:
  SnapshotSink(const std::filesystem::path& path, const ordered_json& head) : out_(path) {
    if (!out_) throw std::runtime_error("cannot write " + path.string());
    out_ << head.dump() << "\n";
  }
  void snapshot(const State& s) override {
    const auto z1 = s.curve.z1();
    const auto z2 = s.curve.z2();
    const auto w = s.omega.values();
    ordered_json rec{{"t", s.t},
                     {"alpha", s.curve.grid().nodes()},
                     {"z1", std::vector<double>(z1.begin(), z1.end())},
                     {"z2", std::vector<double>(z2.begin(), z2.end())},
                     {"omega", std::vector<double>(w.begin(), w.end())}};
    out_ << rec.dump() << "\n";
  }

 private:
  std::ofstream out_;
};

class ProgressSink : public Sink {
 public:
  explicit ProgressSink(const Flags& flags) : flags_(flags) {}
  void diagnostics(const analysis::DepthDiagnostics& d) override {
    log(flags_, "t = " + fmt(d.t) + "  m = " + fmt(d.m) + "  dm/dt = " + fmt(d.dmdt));
  }

 private:
  Flags flags_;
};

int cmd_run(const std::string& config_path, std::string out_dir, const Flags& flags) {
  const RunConfig config = parse_config(config_path);
  const State initial = build_initial(config);
  if (out_dir.empty()) out_dir = config.output_dir;
  const std::string hash = hash_hex(config_hash(config));
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);

  CsvSink csv(dir / "diagnostics.csv", hash);
  ordered_json head = header(hash, flags);
  head["config"] = serialize(config);
  SnapshotSink snaps(dir / "snapshots.jsonl", head);
  ProgressSink progress(flags);
  Sink* sinks[] = {&csv, &snaps, &progress};
  log(flags, "running " + std::to_string(config.sim.grid.size()) + " nodes, dt = " +
                 fmt(effective_dt(config.sim)) + ", t_end = " + fmt(config.sim.t_end));
  const RunSummary summary = run(config.sim, initial, sinks);

  ordered_json js = header(hash, flags);
  js.erase("type");
  js["steps"] = summary.steps;
  js["t_final"] = summary.t_final;
  js["dt"] = summary.dt;
  js["capillary_dt_cap"] = std::isfinite(capillary_dt_cap(config.sim))
                               ? ordered_json(capillary_dt_cap(config.sim))
                               : ordered_json(nullptr);
  js["terminal_event"] = summary.terminal_event;
  js["message"] = summary.message;
  js["min_depth_seen"] = summary.min_depth_seen;
  try {
    js["final_report"] = to_json(analysis::continuation_report(summary.final_state, config.sim.params));
  } catch (const Error& e) {
    js["final_report"] = {{"error", e.kind()}, {"message", e.what()}};
  }
  std::ofstream(dir / "summary.json") << js.dump(2) << "\n";

  if (summary.terminal_event != "none") {
    std::cerr << ordered_json{{"error", summary.terminal_event},
                              {"message", summary.message},
                              {"t", summary.t_final},
                              {"exit_code", kExitRuntime}}
                     .dump()
              << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

State read_snapshot(const RunConfig& config, const std::string& path, int& line_of_state) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open snapshot file '" + path + "'");
  std::optional<ordered_json> last;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    ordered_json rec;
    try {
      rec = ordered_json::parse(line);
    } catch (const ordered_json::exception& e) {
      throw ParseError(line_no, std::string("invalid JSON record: ") + e.what());
    }
    if (rec.contains("type") && rec["type"] == "header") continue;
    last = std::move(rec);
    line_of_state = line_no;
  }
  if (!last) throw ParseError(line_no, "snapshot file holds no state record");
  try {
    const Grid& grid = config.sim.grid;
    auto z1 = (*last)["z1"].get<std::vector<double>>();
    auto z2 = (*last)["z2"].get<std::vector<double>>();
    auto w = last->contains("omega") ? (*last)["omega"].get<std::vector<double>>()
                                     : std::vector<double>(grid.size(), 0.0);
    const double t = (*last)["t"].get<double>();
    InterfaceCurve curve(grid, std::move(z1), std::move(z2));
    VorticityStrength omega(grid, std::move(w));
    if (config.sim.params.model == Model::Muskat) omega = muskat_vorticity(curve, config.sim);
    return State{std::move(curve), std::move(omega), t};
  } catch (const ordered_json::exception& e) {
    throw ParseError(line_of_state, std::string("malformed state record: ") + e.what());
  }
}

int cmd_analyze(const std::string& config_path, const std::string& in_path, const Flags& flags) {
  const RunConfig config = parse_config(config_path);
  int line = 0;
  const State state = read_snapshot(config, in_path, line);
  log(flags, "analyzing state at t = " + fmt(state.t) + " (line " + std::to_string(line) + ")");
  ordered_json js = header(hash_hex(config_hash(config)), flags);
  js.erase("type");
  analysis::DepthDiagnostics d = analysis::depth_rate(state.curve, state.omega);
  d.t = state.t;
  js["diagnostics"] = to_json(d);
  js["report"] = to_json(analysis::continuation_report(state, config.sim.params));
  std::cout << js.dump(2) << "\n";
  return kExitOk;
}

int cmd_identity(const std::string& config_path, const Flags& flags) {
  const RunConfig config = parse_config(config_path);
  const int n = config.sim.grid.size();
  ordered_json rows = ordered_json::array();
  std::vector<double> errors;
  for (const int div : {8, 4, 2, 1}) {
    const int nk = n / div;
    if (nk < 16 || nk % 2 != 0 || n % div != 0) continue;
    RunConfig c = config;
    c.sim.grid = Grid(config.sim.grid.half_width(), nk);
    const State s = build_initial(c);
    const MinDepth md = min_depth(s.curve);
    const int j = md.ties > 1 ? nk / 2 : md.index;
    const double I = analysis::identity_I(s.curve, j);
    const double It = analysis::identity_Itilde(s.curve, j);
    const double err = std::abs(It - I - 3.141592653589793);
    errors.push_back(err);
    rows.push_back({{"N", nk}, {"h", c.sim.grid.spacing()}, {"alpha", c.sim.grid.node(j)},
                    {"I", I}, {"Itilde", It}, {"error", err}});
    log(flags, "N = " + std::to_string(nk) + "  |Itilde - I - pi| = " + fmt(err));
  }
  ordered_json orders = ordered_json::array();
  for (std::size_t k = 1; k < errors.size(); ++k) {
    orders.push_back(errors[k] > 0.0 ? ordered_json(std::log2(errors[k - 1] / errors[k]))
                                     : ordered_json(nullptr));
  }
  ordered_json js = header(hash_hex(config_hash(config)), flags);
  js.erase("type");
  js["rows"] = rows;
  js["observed_order"] = orders;
  std::cout << js.dump(2) << "\n";
  return kExitOk;
}

int cmd_fit(const std::string& in_path, const Flags& flags) {
  std::ifstream in(in_path);
  if (!in) throw ParseError(0, "cannot open diagnostics file '" + in_path + "'");
  std::string line, source_hash;
  int line_no = 0;
  int col_t = -1, col_m = -1;
  std::vector<double> t, m;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string tag = "# config_hash ";
      if (line.rfind(tag, 0) == 0) source_hash = line.substr(tag.size());
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (col_t < 0) {
      for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
        if (cells[i] == "t") col_t = i;
        if (cells[i] == "m") col_m = i;
      }
      if (col_t < 0 || col_m < 0) throw ParseError(line_no, "header lacks 't' and 'm' columns");
      continue;
    }
    if (static_cast<int>(cells.size()) <= std::max(col_t, col_m)) {
      throw ParseError(line_no, "row has too few columns");
    }
    try {
      t.push_back(std::stod(cells[col_t]));
      m.push_back(std::stod(cells[col_m]));
    } catch (const std::exception&) {
      throw ParseError(line_no, "non-numeric t or m");
    }
  }
  const analysis::BoundFit fit = analysis::fit_double_exponential(t, m);
  ordered_json js = header(source_hash, flags);
  js.erase("type");
  js["samples"] = t.size();
  js["fit"] = to_json(fit);
  js["fit_slack"] = analysis::certificate_slack(fit, t, m);
  log(flags, "C_fit = " + fmt(fit.C_fit));
  std::cout << js.dump(2) << "\n";
  return kExitOk;
}

int report_error(const Error& e, int code) {
  ordered_json rec{{"error", e.kind()}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    rec["line"] = pe->line();
    rec["reason"] = pe->reason();
  }
  rec["exit_code"] = code;
  std::cerr << rec.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contour-dynamics solver for interfaces over a flat impervious bottom"};
  app.require_subcommand(1);
  Flags flags;
  app.add_flag("--seed-free", flags.seed_free,
               "Assert a randomness-free run (the tool never draws random numbers; recorded in outputs)");
  app.add_flag("--verbose", flags.verbose, "Progress messages on stderr");

  std::string config_path, out_dir, in_path;
  auto* run_cmd = app.add_subcommand("run", "Time-integrate the configured initial state");
  run_cmd->add_option("--config", config_path, "Config file")->required();
  run_cmd->add_option("--out", out_dir, "Output directory (default: [output] dir)");

  auto* analyze_cmd = app.add_subcommand("analyze", "Diagnostics of the last state in a snapshot file");
  analyze_cmd->add_option("--config", config_path, "Config file")->required();
  analyze_cmd->add_option("--in", in_path, "snapshots.jsonl")->required();

  auto* identity_cmd = app.add_subcommand("identity", "Itilde - I - pi under grid refinement");
  identity_cmd->add_option("--config", config_path, "Config file")->required();

  auto* fit_cmd = app.add_subcommand("fit", "Double-exponential fit of m(t) from diagnostics.csv");
  fit_cmd->add_option("--in", in_path, "diagnostics.csv")->required();

  for (auto* sub : {run_cmd, analyze_cmd, identity_cmd, fit_cmd}) {
    sub->add_flag("--seed-free", flags.seed_free, "Assert a randomness-free run");
    sub->add_flag("--verbose", flags.verbose, "Progress messages on stderr");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    if (rc == 0) return kExitOk;
    std::cerr << ordered_json{{"error", "UsageError"}, {"message", e.what()}, {"exit_code", kExitConfig}}.dump()
              << "\n";
    return kExitConfig;
  }

  try {
    if (*run_cmd) return cmd_run(config_path, out_dir, flags);
    if (*analyze_cmd) return cmd_analyze(config_path, in_path, flags);
    if (*identity_cmd) return cmd_identity(config_path, flags);
    return cmd_fit(in_path, flags);
  } catch (const ParseError& e) {
    return report_error(e, kExitConfig);
  } catch (const ValidationError& e) {
    return report_error(e, kExitConfig);
  } catch (const Error& e) {
    return report_error(e, kExitRuntime);
  } catch (const std::exception& e) {
    std::cerr << ordered_json{{"error", "IOError"}, {"message", e.what()}, {"exit_code", kExitRuntime}}.dump()
              << "\n";
    return kExitRuntime;
  }
}

}  // namespace seabed::cli
