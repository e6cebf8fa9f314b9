#include "seabed/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "seabed/errors.hpp"
#include "seabed/muskat.hpp"
#include "seabed/waterwaves.hpp"

namespace seabed {

namespace {

constexpr double kInvTwoPi = 0.5 / std::numbers::pi;

struct Rate {
  std::vector<double> dz1;
  std::vector<double> dz2;
  std::vector<double> domega;  // empty for Muskat
};

Rate stage_rate(const State& s, const SimConfig& config, double dt) {
  const Grid& grid = s.curve.grid();
  const std::vector<double> c(grid.size(), 0.0);
  Rate r;
  if (config.params.model == Model::Muskat) {
    const VorticityStrength omega = muskat_vorticity(s.curve, config);
    ContourRate cr = contour_rhs(s.curve, omega, c);
    r.dz1 = std::move(cr.dz1);
    r.dz2 = std::move(cr.dz2);
  } else {
    ContourRate cr = contour_rhs(s.curve, s.omega, c);
    r.dz1 = std::move(cr.dz1);
    r.dz2 = std::move(cr.dz2);
    r.domega = waterwaves::omega_rhs(s, config.params, c, dt, config.tol.implicit,
                                     config.tol.max_implicit_iter)
                   .dt_omega;
    pin_far_field(r.domega, grid);
  }
  pin_far_field(r.dz1, grid);
  pin_far_field(r.dz2, grid);
  return r;
}

// Builds base + sum_i coef_i * rate_i, checking for contact and validity.
State combine(const State& base, const SimConfig& config, double t,
              std::initializer_list<std::pair<double, const Rate*>> terms) {
  const Grid& grid = base.curve.grid();
  const int n = grid.size();
  std::vector<double> z1(base.curve.z1().begin(), base.curve.z1().end());
  std::vector<double> z2(base.curve.z2().begin(), base.curve.z2().end());
  std::vector<double> w(base.omega.values().begin(), base.omega.values().end());
  const bool waves = config.params.model == Model::WaterWaves;
  for (const auto& [coef, rate] : terms) {
    for (int j = 0; j < n; ++j) {
      z1[j] += coef * rate->dz1[j];
      z2[j] += coef * rate->dz2[j];
      if (waves) w[j] += coef * rate->domega[j];
    }
  }
  for (int j = 0; j < n; ++j) {
    if (!std::isfinite(z1[j]) || !std::isfinite(z2[j]) || !std::isfinite(w[j])) {
      throw StabilityFailure("non-finite state at node " + std::to_string(j) + ", t = " +
                             std::to_string(t));
    }
  }
  const auto low = std::min_element(z2.begin(), z2.end());
  if (*low <= config.contact_tol) {
    throw BottomContact("minimum depth " + std::to_string(*low) + " at node " +
                        std::to_string(low - z2.begin()) + ", t = " + std::to_string(t));
  }
  try {
    InterfaceCurve curve(grid, std::move(z1), std::move(z2));
    if (waves) return State{std::move(curve), VorticityStrength(grid, std::move(w)), t};
    return State{curve, VorticityStrength::zero(grid), t};
  } catch (const ValidationError& e) {
    throw StabilityFailure(std::string("invalid state at t = ") + std::to_string(t) + ": " + e.what());
  }
}

}  // namespace

void SimConfig::validate() const {
  params.validate();
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ValidationError("dt must be positive");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw ValidationError("t_end must be non-negative");
  if (snapshot_every < 1) throw ValidationError("snapshot_every must be >= 1");
  if (!(cfl_safety > 0.0) || !(cfl_safety <= 1.0)) throw ValidationError("cfl_safety must lie in (0, 1]");
  if (!(tol.picard > 0.0) || !(tol.implicit > 0.0)) throw ValidationError("tolerances must be positive");
  if (tol.picard_max_iter < 1 || tol.max_implicit_iter < 1) {
    throw ValidationError("iteration limits must be >= 1");
  }
  if (!(contact_tol > 0.0) || !(blowup_cap > 0.0) || !(chord_arc_cap >= 1.0)) {
    throw ValidationError("monitor thresholds must be positive");
  }
}

ContourRate contour_rhs(const BirkhoffRott& br, std::span<const double> omega,
                        std::span<const double> c) {
  const InterfaceCurve& curve = br.curve();
  const int n = curve.size();
  if (static_cast<int>(omega.size()) != n || static_cast<int>(c.size()) != n) {
    throw ValidationError("vorticity or tangential speed does not match the grid size");
  }
  const auto raw = br.raw(omega);
  const CurveJet& jt = br.jet();
  ContourRate out{std::vector<double>(n), std::vector<double>(n)};
  for (int j = 0; j < n; ++j) {
    out.dz1[j] = kInvTwoPi * raw[j].x + c[j] * jt.d1x[j];
    out.dz2[j] = kInvTwoPi * raw[j].y + c[j] * jt.d1y[j];
  }
  return out;
}

ContourRate contour_rhs(const InterfaceCurve& curve, const VorticityStrength& omega,
                        std::span<const double> c) {
  if (!(curve.grid() == omega.grid())) {
    throw ValidationError("curve and vorticity live on different grids");
  }
  return contour_rhs(BirkhoffRott(curve), omega.values(), c);
}

void pin_far_field(std::vector<double>& rate, const Grid& grid) {
  for (int j = 0; j < grid.size(); ++j) {
    if (grid.in_decay_band(j)) rate[j] = 0.0;
  }
}

double capillary_dt_cap(const SimConfig& config) {
  const PhysicalParams& p = config.params;
  if (!(p.gamma > 0.0)) return std::numeric_limits<double>::infinity();
  const double h = config.grid.spacing();
  if (p.model == Model::Muskat) {
    const double mu_mean = 0.5 * (p.mu_plus + p.mu_minus);
    return config.cfl_safety * h * h * h * mu_mean / p.gamma;
  }
  return config.cfl_safety * std::pow(h, 1.5) * std::sqrt((p.rho_plus + p.rho_minus) / p.gamma);
}

double effective_dt(const SimConfig& config) { return std::min(config.dt, capillary_dt_cap(config)); }

VorticityStrength muskat_vorticity(const InterfaceCurve& curve, const SimConfig& config) {
  return muskat::solve_vorticity(curve, config.params, config.tol.picard,
                                 config.tol.picard_max_iter);
}

State step(const State& state, const SimConfig& config, double dt) {
  if (!(dt > 0.0)) throw ValidationError("step size must be positive");
  const double t = state.t;
  const Rate k1 = stage_rate(state, config, dt);
  const State s2 = combine(state, config, t + 0.5 * dt, {{0.5 * dt, &k1}});
  const Rate k2 = stage_rate(s2, config, dt);
  const State s3 = combine(state, config, t + 0.5 * dt, {{0.5 * dt, &k2}});
  const Rate k3 = stage_rate(s3, config, dt);
  const State s4 = combine(state, config, t + dt, {{dt, &k3}});
  const Rate k4 = stage_rate(s4, config, dt);
  State next = combine(state, config, t + dt,
                       {{dt / 6.0, &k1}, {dt / 3.0, &k2}, {dt / 3.0, &k3}, {dt / 6.0, &k4}});
  next.t = t + dt;

  const MinDepth md = min_depth(next.curve);
  if (md.m <= config.contact_tol) {
    throw BottomContact("minimum depth " + std::to_string(md.m) + " at alpha = " +
                        std::to_string(md.alpha_star) + ", t = " + std::to_string(next.t));
  }
  const double norms = holder_norms(next.curve).sum();
  if (!(norms <= config.blowup_cap)) {
    throw StabilityFailure("curve C2 norm " + std::to_string(norms) + " exceeds the blow-up cap at t = " +
                           std::to_string(next.t));
  }
  const double chord = chord_arc_constant(next.curve);
  if (!(chord <= config.chord_arc_cap)) {
    throw StabilityFailure("chord-arc constant " + std::to_string(chord) +
                           " exceeds its cap at t = " + std::to_string(next.t));
  }
  if (config.params.model == Model::Muskat) next.omega = muskat_vorticity(next.curve, config);
  return next;
}

State step(const State& state, const SimConfig& config) {
  return step(state, config, effective_dt(config));
}

RunSummary run(const SimConfig& config, const State& initial, std::span<Sink* const> sinks) {
  config.validate();
  if (!(initial.curve.grid() == config.grid) || !(initial.omega.grid() == config.grid)) {
    throw ValidationError("initial state does not live on the configured grid");
  }
  State state = initial;
  if (config.params.model == Model::Muskat) state.omega = muskat_vorticity(state.curve, config);

  RunSummary summary(state);
  const double dt_eff = effective_dt(config);
  int steps = 0;
  if (config.t_end > 0.0) {
    steps = static_cast<int>(std::ceil(config.t_end / dt_eff * (1.0 - 1e-12)));
    steps = std::max(steps, 1);
  }
  summary.dt = steps > 0 ? config.t_end / steps : 0.0;

  const auto emit = [&](const State& s, bool snap) {
    analysis::DepthDiagnostics d = analysis::depth_rate(s.curve, s.omega);
    d.t = s.t;
    summary.diagnostics.push_back(d);
    summary.min_depth_seen = std::min(summary.min_depth_seen, d.m);
    for (Sink* sink : sinks) {
      sink->diagnostics(d);
      if (snap) sink->snapshot(s);
    }
  };

  summary.min_depth_seen = std::numeric_limits<double>::infinity();
  try {
    emit(state, true);
    for (int i = 1; i <= steps; ++i) {
      State next = step(state, config, summary.dt);
      next.t = initial.t + (i == steps ? config.t_end : i * summary.dt);
      state = std::move(next);
      summary.steps = i;
      summary.t_final = state.t;
      summary.final_state = state;
      emit(state, i % config.snapshot_every == 0 || i == steps);
    }
  } catch (const Error& e) {
    summary.terminal_event = e.kind();
    summary.message = e.what();
  }
  summary.t_final = state.t;
  summary.final_state = state;
  return summary;
}

}  // namespace seabed
