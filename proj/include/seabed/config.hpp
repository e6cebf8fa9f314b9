#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "seabed/evolve.hpp"
#include "seabed/state.hpp"

namespace seabed::cli {

inline constexpr std::string_view kVersion = "seabed 1.0.0";

struct InitialSpec {
  /// flat | cosine | pinch | monotone
  std::string profile = "flat";
  double amplitude = 0.3;
  /// Target minimum depth of the pinch profile.
  double depth = 0.1;
  double center = 3.141592653589793;
  double plateau = 3.141592653589793;
  double ramp = 6.283185307179586;
  /// Gaussian width of the pinch profile.
  double width = 1.0;
  /// Horizontal perturbation of the monotone profile.
  double z1_amplitude = 0.0;
  /// zero | gaussian (water waves only; Muskat recomputes omega~ from the curve)
  std::string omega = "zero";
  double omega_amplitude = 1.0;
  double omega_center = 0.0;
  double omega_width = 1.0;
};

struct RunConfig {
  SimConfig sim;
  InitialSpec initial;
  std::string output_dir = "out";
};

/// Parses the sectioned key = value format. Throws ParseError on malformed or
/// unknown input and ValidationError when the values are inconsistent.
RunConfig parse_config_text(std::string_view text);
RunConfig parse_config(const std::string& path);

/// Canonical text with every key spelled out; parse_config_text(serialize(c))
/// reproduces c exactly.
std::string serialize(const RunConfig& config);

/// FNV-1a 64-bit hash of serialize(config).
std::uint64_t config_hash(const RunConfig& config);
std::string hash_hex(std::uint64_t hash);

/// Initial state on config.sim.grid. Throws ValidationError for profiles that
/// leave the admissible set.
State build_initial(const RunConfig& config);

/// Entry point of the command-line tool; returns the process exit code.
int main(int argc, char** argv);

}  // namespace seabed::cli
