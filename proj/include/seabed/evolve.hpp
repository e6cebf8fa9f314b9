#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seabed/analysis.hpp"
#include "seabed/geometry.hpp"
#include "seabed/kernels.hpp"
#include "seabed/state.hpp"

namespace seabed {

struct Tolerances {
  double picard = 1e-10;
  int picard_max_iter = 200;
  double implicit = 1e-10;
  int max_implicit_iter = 50;
};

struct SimConfig {
  PhysicalParams params;
  Grid grid{20.0, 256};
  double dt = 1e-2;
  double t_end = 1.0;
  int snapshot_every = 10;
  double cfl_safety = 0.5;
  Tolerances tol;
  double contact_tol = 1e-4;
  double blowup_cap = 1e3;
  double chord_arc_cap = 1e3;

  void validate() const;
};

struct ContourRate {
  std::vector<double> dz1;
  std::vector<double> dz2;
};

/// d_t z = BR(z, omega~)/(2 pi) + c d_alpha z at every node.
ContourRate contour_rhs(const InterfaceCurve& curve, const VorticityStrength& omega,
                        std::span<const double> c);
ContourRate contour_rhs(const BirkhoffRott& br, std::span<const double> omega,
                        std::span<const double> c);

/// Zeroes a nodal rate on the decay band, which holds the far field at the
/// flat state during time stepping.
void pin_far_field(std::vector<double>& rate, const Grid& grid);

/// Step size allowed by the third-order capillary term (infinity when gamma = 0).
double capillary_dt_cap(const SimConfig& config);

/// min(dt, capillary cap).
double effective_dt(const SimConfig& config);

/// Diagnostic vorticity for a Muskat curve (closed form or Picard).
VorticityStrength muskat_vorticity(const InterfaceCurve& curve, const SimConfig& config);

/// One classical RK4 step of size dt. Muskat recomputes omega~ at every stage;
/// water waves advance (z, omega~) jointly. Throws BottomContact when the new
/// minimum depth is <= contact_tol and StabilityFailure when the curve norms
/// leave the blow-up cap or an intermediate stage is not a valid curve.
State step(const State& state, const SimConfig& config, double dt);
State step(const State& state, const SimConfig& config);

/// Receives immutable copies of every accepted state.
class Sink {
 public:
  virtual ~Sink() = default;
  virtual void diagnostics(const analysis::DepthDiagnostics& /*diag*/) {}
  virtual void snapshot(const State& /*state*/) {}
};

struct RunSummary {
  explicit RunSummary(State initial) : final_state(std::move(initial)) {}

  int steps = 0;
  double t_final = 0.0;
  double dt = 0.0;
  /// "none", or the kind() of the terminal error.
  std::string terminal_event = "none";
  std::string message;
  double min_depth_seen = 0.0;
  std::vector<analysis::DepthDiagnostics> diagnostics;
  State final_state;
};

/// Steps from `initial` over a duration config.t_end (or up to a terminal event). Terminal errors
/// are recorded in the summary, never rethrown.
RunSummary run(const SimConfig& config, const State& initial, std::span<Sink* const> sinks = {});

}  // namespace seabed
