#pragma once

#include <span>
#include <string>
#include <vector>

#include "seabed/geometry.hpp"
#include "seabed/kernels.hpp"
#include "seabed/state.hpp"

namespace seabed::analysis {

/// Minimum-depth diagnostics at one instant. J is the raw principal-value
/// integral driving d m/dt = J/(2 pi); J_m, J_1, J_inf split the same sum by
/// parameter distance |s - alpha_t| < m, m <= . < 1, and >= 1.
struct DepthDiagnostics {
  double t = 0.0;
  double m = 0.0;
  double alpha_star = 0.0;
  double dmdt = 0.0;
  double J = 0.0;
  double J_m = 0.0;
  double J_1 = 0.0;
  double J_inf = 0.0;
  double chord_arc = 0.0;
  double c2_norm = 0.0;
  double omega_c1_norm = 0.0;
  /// Bound on the part of J neglected outside the grid.
  double tail_bound = 0.0;
  int argmin_index = 0;
  int ties = 1;
  /// True when m >= 1 and the J_1 band is empty.
  bool near_band_clipped = false;
};

/// Diagnostics at the parabolically refined minimum of z2. The PV sums are
/// node-centred; their values at the three bracketing nodes are interpolated
/// to alpha_t with the same parabola that refines m.
DepthDiagnostics depth_rate(const InterfaceCurve& curve, const VorticityStrength& omega);

/// Same quantities with alpha_t pinned to grid node j (no interpolation).
DepthDiagnostics depth_rate_at(const InterfaceCurve& curve, const VorticityStrength& omega, int j);

/// |J| / (m log(1/m)). Throws OutOfRegime unless 0 < m < 1/e.
double log_bound_ratio(const DepthDiagnostics& diag);

/// PV integral of d_s z2 (z1(alpha_t) - z1(s)) [1/|z_t - z(s)|^2 - 1/|z_t - zbar(s)|^2].
double identity_I(const InterfaceCurve& curve, int j_star);

/// PV integral of d_s z1 [(z2_t - z2(s))/|z_t - z(s)|^2 + (z2_t + z2(s))/|z_t - zbar(s)|^2],
/// including the closed-form contribution of the flat far field beyond the grid.
double identity_Itilde(const InterfaceCurve& curve, int j_star);

struct BoundFit {
  double C_fit = 0.0;
  /// Least-squares slope and intercept of log log(1/m) against t.
  double slope = 0.0;
  double intercept = 0.0;
  /// RMS residual of the linear fit.
  double residual = 0.0;
  double t_begin = 0.0;
  double t_end = 0.0;
};

/// Fits log log(1/m) = slope t + intercept and returns C = max(slope, e^intercept),
/// the smallest C for which C t + log C dominates the fitted line on t >= 0.
BoundFit fit_double_exponential(std::span<const double> t, std::span<const double> m);

/// Lower bound e^{-C e^{C t}}.
double double_exponential_bound(double C, double t);

/// Smallest s >= 0 with m_i >= bound_i (1 - s) for every sample.
double certificate_slack(const BoundFit& fit, std::span<const double> t,
                         std::span<const double> m);

struct Caps {
  double norm_cap = 1e3;
  double chord_arc_cap = 1e3;
  double contact_tol = 1e-4;
};

struct ContinuationReport {
  double t = 0.0;
  double m = 0.0;
  double alpha_star = 0.0;
  double dmdt = 0.0;
  HolderNorms curve_norms;
  double curve_c2_norm = 0.0;
  /// Curve regularity the criterion asks for: C^{2 + 2 sgn(gamma)} for Muskat, C^2 for water waves.
  int required_order = 2;
  /// C^4 norm of z - (alpha, 1); only filled when required_order == 4.
  double curve_c4_norm = 0.0;
  double omega_c0_norm = 0.0;
  double omega_c1_norm = 0.0;
  double chord_arc = 0.0;
  /// |J|/(m log(1/m)) when 0 < m < 1/e, otherwise absent.
  bool ratio_applicable = false;
  double bound_ratio = 0.0;
  std::vector<std::string> exceeded;
  std::string verdict;
};

/// Hypothesis quantities of the no-contact continuation criteria and which of
/// them exceed the configured caps.
ContinuationReport continuation_report(const State& state, const PhysicalParams& params,
                                       const Caps& caps = {});

}  // namespace seabed::analysis
