#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "seabed/config.hpp"
#include "seabed/errors.hpp"

using namespace seabed;
using namespace seabed::cli;

namespace {

struct Captured {
  int code = 0;
  std::string out;
  std::string err;
};

Captured invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "seabed");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  auto* old_out = std::cout.rdbuf(out.rdbuf());
  auto* old_err = std::cerr.rdbuf(err.rdbuf());
  Captured c;
  c.code = cli::main(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  c.out = out.str();
  c.err = err.str();
  return c;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "seabed_cli_tests" / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path) << text;
  return path.string();
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("minimal config fills defaults") {
  const auto c = parse_config_text("[model]\nmodel = muskat\n[grid]\nN = 256\nL = 20\n[initial]\nprofile = flat\n");
  CHECK(c.sim.params.model == Model::Muskat);
  CHECK(c.sim.grid.size() == 256);
  CHECK(c.sim.grid.half_width() == 20.0);
  CHECK(c.sim.params.gamma == 0.0);
  CHECK(c.sim.params.mu_plus == 1.0);
  CHECK(c.sim.cfl_safety == 0.5);
  CHECK(c.initial.profile == "flat");
  CHECK(c.sim.tol.picard == 1e-10);
}

TEST_CASE("serialization round trip is idempotent") {
  const std::string text =
      "# stable Muskat\n[model]\nmodel = muskat\ndt = 0.005\n[grid]\nN = 512\nL = 25\n"
      "[physics]\nrho_plus = 0.5\nrho_minus = 2   # heavier below\n[initial]\nprofile = cosine\n"
      "amplitude = 0.3\n[output]\ndir = results\n";
  const auto c = parse_config_text(text);
  CHECK(c.sim.params.rho_minus > c.sim.params.rho_plus);
  CHECK(c.initial.amplitude == 0.3);
  const std::string once = serialize(c);
  const auto c2 = parse_config_text(once);
  CHECK(serialize(c2) == once);
  CHECK(config_hash(c2) == config_hash(c));
  CHECK(c2.sim.dt == 0.005);
  CHECK(c2.output_dir == "results");
  CHECK(c2.initial.center == c.initial.center);

  auto changed = c;
  changed.sim.dt = 0.006;
  CHECK(config_hash(changed) != config_hash(c));
  CHECK(hash_hex(config_hash(c)).size() == 16);
}

TEST_CASE("malformed input reports the line") {
  auto line_of = [](const std::string& text) {
    try {
      parse_config_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("[model]\ndt ==\n") == 2);
  CHECK(line_of("[model]\n\n# c\nbogus = 1\n") == 4);
  CHECK(line_of("[nowhere]\n") == 1);
  CHECK(line_of("dt = 1\n") == 1);
  CHECK(line_of("[model]\ndt = fast\n") == 2);
  CHECK(line_of("[model]\ndt = 0.1\ndt = 0.2\n") == 3);
  CHECK(line_of("[model]\nmodel = stokes\n") == 2);
  CHECK(line_of("[grid]\nN\n") == 2);
  CHECK(line_of("[grid\n") == 1);
  CHECK_THROWS_AS(parse_config_text("[physics]\ngamma = -1\n"), ValidationError);
  CHECK_THROWS_AS(parse_config_text("[grid]\nN = 15\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("/nonexistent/seabed.cfg"), ParseError);
}

TEST_CASE("initial data families") {
  auto c = parse_config_text("[grid]\nN = 256\nL = 25.132741228718345\n");
  auto s = build_initial(c);
  for (int j = 0; j < 256; ++j) {
    CHECK(s.curve.z1()[j] == c.sim.grid.node(j));
    CHECK(s.curve.z2()[j] == 1.0);
  }
  c = parse_config_text("[grid]\nN = 256\nL = 25.132741228718345\n[initial]\nprofile = cosine\namplitude = 0.5\n");
  s = build_initial(c);
  const auto md = min_depth(s.curve);
  CHECK(md.m == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(md.alpha_star == doctest::Approx(3.141592653589793).epsilon(1e-9));

  c = parse_config_text("[grid]\nN = 2048\nL = 20\n[initial]\nprofile = pinch\ndepth = 0.05\ncenter = 0\n");
  CHECK(min_depth(build_initial(c).curve).m == doctest::Approx(0.05).epsilon(1e-6));

  c = parse_config_text("[model]\nmodel = water_waves\n[grid]\nN = 256\nL = 20\n[physics]\nrho_plus = 1\n"
                        "[initial]\nprofile = monotone\nz1_amplitude = 0.2\nomega = gaussian\n");
  s = build_initial(c);
  CHECK(s.omega[128] == doctest::Approx(1.0));

  c = parse_config_text("[grid]\nN = 256\nL = 20\n[initial]\nprofile = cosine\namplitude = 1.2\n");
  CHECK_THROWS_AS(build_initial(c), ValidationError);
  CHECK_THROWS_AS(parse_config_text("[initial]\nprofile = pinch\ndepth = 0\n"), ValidationError);
}

TEST_CASE("run on a flat configuration") {
  const auto dir = scratch("flat");
  const auto cfg = write(dir / "flat.cfg", "[model]\nt_end = 0.05\ndt = 0.01\n[grid]\nN = 64\nL = 20\n");
  const auto r = invoke({"run", "--config", cfg, "--out", (dir / "out").string()});
  CHECK(r.code == 0);
  std::ifstream csv(dir / "out" / "diagnostics.csv");
  std::string line;
  std::getline(csv, line);
  CHECK(line.rfind("# seabed", 0) == 0);
  std::getline(csv, line);
  CHECK(line.rfind("# config_hash ", 0) == 0);
  std::getline(csv, line);
  CHECK(line == "t,m,alpha_star,dmdt,J,J_m,J_1,J_inf,chord_arc,c2_norm,omega_c1_norm,tail_bound");
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    CHECK(line.substr(line.find(',') + 1, 2) == "1,");
  }
  CHECK(rows == 6);

  const auto summary = nlohmann::json::parse(slurp(dir / "out" / "summary.json"));
  CHECK(summary["terminal_event"] == "none");
  CHECK(summary["steps"] == 5);
  std::ifstream snaps(dir / "out" / "snapshots.jsonl");
  std::getline(snaps, line);
  CHECK(nlohmann::json::parse(line)["type"] == "header");
  std::getline(snaps, line);
  const auto rec = nlohmann::json::parse(line);
  CHECK(rec["alpha"].size() == 64);
  CHECK(rec["z2"][10] == 1.0);

  // Identical configs give identical files.
  const auto again = invoke({"run", "--config", cfg, "--out", (dir / "again").string()});
  CHECK(again.code == 0);
  for (const char* f : {"diagnostics.csv", "snapshots.jsonl", "summary.json"}) {
    CHECK(slurp(dir / "out" / f) == slurp(dir / "again" / f));
  }

  const auto analyzed = invoke({"analyze", "--config", cfg, "--in", (dir / "out" / "snapshots.jsonl").string()});
  CHECK(analyzed.code == 0);
  const auto report = nlohmann::json::parse(analyzed.out);
  CHECK(report["report"]["verdict"] == "criteria satisfied");
}

TEST_CASE("configuration and runtime errors map to exit codes") {
  const auto dir = scratch("errors");
  const auto bad = write(dir / "bad.cfg", "[model]\ndt ==\n");
  auto r = invoke({"run", "--config", bad});
  CHECK(r.code == 2);
  const auto rec = nlohmann::json::parse(r.err);
  CHECK(rec["error"] == "ParseError");
  CHECK(rec["line"] == 2);

  r = invoke({"run", "--config", write(dir / "neg.cfg", "[physics]\ngamma = -1\n")});
  CHECK(r.code == 2);
  CHECK(nlohmann::json::parse(r.err)["error"] == "ValidationError");

  r = invoke({"frobnicate"});
  CHECK(r.code == 2);

  const auto contact = write(dir / "contact.cfg",
                             "[model]\ndt = 0.01\nt_end = 2\ncontact_tol = 0.045\n[grid]\nN = 256\nL = 20\n"
                             "[physics]\nrho_plus = 20\nrho_minus = 0\n[initial]\nprofile = pinch\ndepth = 0.05\n"
                             "center = 0\n");
  r = invoke({"run", "--config", contact, "--out", (dir / "contact").string()});
  CHECK(r.code == 3);
  CHECK(nlohmann::json::parse(r.err)["error"] == "BottomContact");
  const auto summary = nlohmann::json::parse(slurp(dir / "contact" / "summary.json"));
  CHECK(summary["terminal_event"] == "BottomContact");
}

TEST_CASE("identity sweep and fit") {
  const auto dir = scratch("identity");
  const auto cfg = write(dir / "bump.cfg",
                         "[grid]\nN = 1024\nL = 40\n[initial]\nprofile = cosine\namplitude = 0.3\n");
  auto r = invoke({"identity", "--config", cfg});
  REQUIRE(r.code == 0);
  const auto table = nlohmann::json::parse(r.out);
  REQUIRE(table["rows"].size() == 4);
  for (std::size_t k = 1; k < 4; ++k) {
    CHECK(table["rows"][k]["error"].get<double>() < table["rows"][k - 1]["error"].get<double>());
  }

  std::ostringstream csv;
  csv << "# seabed\n# config_hash 00000000000000ff\nt,m,alpha_star\n";
  for (int i = 0; i <= 10; ++i) {
    const double t = 0.1 * i;
    csv.precision(17);
    csv << t << "," << std::exp(-std::exp(t)) << ",0\n";
  }
  const auto path = write(dir / "diagnostics.csv", csv.str());
  r = invoke({"fit", "--in", path});
  REQUIRE(r.code == 0);
  const auto fit = nlohmann::json::parse(r.out);
  CHECK(fit["fit"]["C_fit"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(fit["config_hash"] == "00000000000000ff");

  r = invoke({"fit", "--in", write(dir / "flat.csv", "t,m\n0,1\n1,1\n2,1\n3,1\n")});
  CHECK(r.code == 3);
  CHECK(nlohmann::json::parse(r.err)["error"] == "FitFailure");
  r = invoke({"fit", "--in", write(dir / "junk.csv", "t,m\n0,x\n")});
  CHECK(r.code == 2);
}

}
