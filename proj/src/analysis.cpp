#include "seabed/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "seabed/errors.hpp"

namespace seabed::analysis {

namespace {

struct Bands {
  double m = 0.0;
  double one = 0.0;
  double inf = 0.0;
};

class BandRule {
 public:
  BandRule(double alpha_t, double m) : alpha_t_(alpha_t), m_(m) {}
  bool clipped() const { return m_ >= 1.0; }
  double* slot(Bands& b, double s) const {
    const double d = std::abs(s - alpha_t_);
    if (d < std::min(m_, 1.0)) return &b.m;
    if (d < 1.0) return &b.one;
    return &b.inf;
  }

 private:
  double alpha_t_;
  double m_;
};

// Vertical Birkhoff-Rott sum at node k, split into parameter-distance bands
// measured from alpha_t.
Bands vertical_sum_by_band(const InterfaceCurve& curve, const CurveJet& jet,
                           std::span<const double> omega, std::span<const double> domega, int k,
                           const BandRule& rule) {
  const Grid& grid = curve.grid();
  const Vec2 target = curve.at(k);
  Bands b;
  for (int l = 0; l < grid.size(); ++l) {
    const double wl = grid.weight(l) * omega[l];
    if (wl == 0.0) continue;
    const Vec2 source = curve.at(l);
    double term = -image_kernel(target, source).y;
    if (l != k) term += direct_kernel(target, source).y;
    *rule.slot(b, grid.node(l)) += wl * term;
  }
  *rule.slot(b, grid.node(k)) +=
      grid.weight(k) * diagonal_limit({1.0, 0.0}, omega[k], domega[k], jet.d1(k), jet.d2(k));
  return b;
}

double tail_bound(const InterfaceCurve& curve, std::span<const double> omega, double alpha_t,
                  double m) {
  const Grid& grid = curve.grid();
  double edge = 0.0;
  for (int j = 0; j < grid.size(); ++j) {
    if (grid.in_decay_band(j)) edge = std::max(edge, std::abs(omega[j]));
  }
  if (edge == 0.0) return 0.0;
  const double left = alpha_t - grid.node(0);
  const double right = grid.node(grid.size() - 1) - alpha_t;
  // |integrand| <= 4 m |omega| / d^3 for a flat far field at unit height.
  return 2.0 * m * edge * (1.0 / (left * left) + 1.0 / (right * right));
}

DepthDiagnostics assemble(const InterfaceCurve& curve, const VorticityStrength& omega,
                          std::span<const int> nodes, std::span<const double> weights,
                          double alpha_t, double m) {
  if (!(curve.grid() == omega.grid())) {
    throw ValidationError("curve and vorticity live on different grids");
  }
  const CurveJet j = jet(curve);
  const auto domega = differentiate(omega.values(), curve.grid(), 0.0);
  const BandRule rule(alpha_t, m);

  DepthDiagnostics d;
  d.m = m;
  d.alpha_star = alpha_t;
  d.near_band_clipped = rule.clipped();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (weights[i] == 0.0) continue;
    const Bands b = vertical_sum_by_band(curve, j, omega.values(), domega, nodes[i], rule);
    d.J_m += weights[i] * b.m;
    d.J_1 += weights[i] * b.one;
    d.J_inf += weights[i] * b.inf;
  }
  d.J = d.J_m + d.J_1 + d.J_inf;
  d.dmdt = d.J / (2.0 * std::numbers::pi);
  d.chord_arc = chord_arc_constant(curve);
  d.c2_norm = holder_norms(curve).sum();
  const HolderNorms wn = scalar_norms(omega.values(), curve.grid());
  d.omega_c1_norm = wn.c0 + wn.c1;
  d.tail_bound = tail_bound(curve, omega.values(), alpha_t, m);
  return d;
}

}  // namespace

DepthDiagnostics depth_rate(const InterfaceCurve& curve, const VorticityStrength& omega) {
  const MinDepth md = min_depth(curve);
  const int n = curve.size();
  DepthDiagnostics d;
  if (md.index == 0 || md.index == n - 1 || md.theta == 0.0) {
    const std::array<int, 1> nodes{md.index};
    const std::array<double, 1> weights{1.0};
    d = assemble(curve, omega, nodes, weights, md.alpha_star, md.m);
  } else {
    const double th = md.theta;
    const std::array<int, 3> nodes{md.index - 1, md.index, md.index + 1};
    const std::array<double, 3> weights{0.5 * th * (th - 1.0), 1.0 - th * th,
                                        0.5 * th * (th + 1.0)};
    d = assemble(curve, omega, nodes, weights, md.alpha_star, md.m);
  }
  d.argmin_index = md.index;
  d.ties = md.ties;
  return d;
}

DepthDiagnostics depth_rate_at(const InterfaceCurve& curve, const VorticityStrength& omega,
                               int j) {
  if (j < 0 || j >= curve.size()) throw ValidationError("node index out of range");
  const std::array<int, 1> nodes{j};
  const std::array<double, 1> weights{1.0};
  DepthDiagnostics d = assemble(curve, omega, nodes, weights, curve.grid().node(j), curve.z2()[j]);
  d.argmin_index = j;
  return d;
}

double log_bound_ratio(const DepthDiagnostics& diag) {
  if (!(diag.m > 0.0) || !(diag.m < std::exp(-1.0))) {
    throw OutOfRegime("m = " + std::to_string(diag.m) + " is outside (0, 1/e)");
  }
  return std::abs(diag.J) / (diag.m * std::log(1.0 / diag.m));
}

double identity_I(const InterfaceCurve& curve, int j_star) {
  const Grid& grid = curve.grid();
  const CurveJet jt = jet(curve);
  const Vec2 target = curve.at(j_star);
  double sum = 0.0;
  for (int l = 0; l < grid.size(); ++l) {
    const double wl = grid.weight(l) * jt.d1y[l];
    if (wl == 0.0) continue;
    const Vec2 source = curve.at(l);
    double term = -image_kernel(target, source).y;
    if (l != j_star) term += direct_kernel(target, source).y;
    sum += wl * term;
  }
  sum += grid.weight(j_star) * diagonal_limit({1.0, 0.0}, jt.d1y[j_star], jt.d2y[j_star],
                                              jt.d1(j_star), jt.d2(j_star));
  return sum;
}

double identity_Itilde(const InterfaceCurve& curve, int j_star) {
  const Grid& grid = curve.grid();
  const CurveJet jt = jet(curve);
  const Vec2 target = curve.at(j_star);
  double sum = 0.0;
  for (int l = 0; l < grid.size(); ++l) {
    const Vec2 source = curve.at(l);
    const double dx = target.x - source.x;
    const double sum_y = target.y + source.y;
    double term = sum_y / (dx * dx + sum_y * sum_y);
    if (l != j_star) {
      const double dy = target.y - source.y;
      term += dy / (dx * dx + dy * dy);
    }
    sum += grid.weight(l) * jt.d1x[l] * term;
  }
  sum += grid.weight(j_star) * diagonal_limit({0.0, 1.0}, jt.d1x[j_star], jt.d2x[j_star],
                                              jt.d1(j_star), jt.d2(j_star));

  // Flat far field z(s) = (s, 1) beyond the grid:
  // int_R^inf b / ((s - x)^2 + b^2) ds = atan2(b, R - x).
  const double right = grid.node(grid.size() - 1) - target.x;
  const double left = target.x - grid.node(0);
  for (const double b : {target.y - 1.0, target.y + 1.0}) {
    sum += std::atan2(b, right) + std::atan2(b, left);
  }
  return sum;
}

BoundFit fit_double_exponential(std::span<const double> t, std::span<const double> m) {
  if (t.size() != m.size()) throw FitFailure("time and depth series differ in length");
  if (t.size() < 4) throw FitFailure("need at least 4 samples");
  const std::size_t n = t.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(m[i] > 0.0) || !(m[i] < 1.0) || !std::isfinite(t[i])) {
      throw FitFailure("samples must satisfy 0 < m < 1 with finite t");
    }
    y[i] = std::log(std::log(1.0 / m[i]));
  }
  double tm = 0.0, ym = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    tm += t[i];
    ym += y[i];
  }
  tm /= n;
  ym /= n;
  double stt = 0.0, sty = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    stt += (t[i] - tm) * (t[i] - tm);
    sty += (t[i] - tm) * (y[i] - ym);
  }
  if (!(stt > 0.0)) throw FitFailure("degenerate time window");

  BoundFit fit;
  fit.slope = sty / stt;
  fit.intercept = ym - fit.slope * tm;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.slope * t[i] + fit.intercept);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  fit.C_fit = std::max(fit.slope, std::exp(fit.intercept));
  fit.t_begin = *std::min_element(t.begin(), t.end());
  fit.t_end = *std::max_element(t.begin(), t.end());
  if (!(fit.C_fit > 0.0) || !std::isfinite(fit.C_fit)) throw FitFailure("non-positive fit constant");
  return fit;
}

double double_exponential_bound(double C, double t) { return std::exp(-C * std::exp(C * t)); }

double certificate_slack(const BoundFit& fit, std::span<const double> t,
                         std::span<const double> m) {
  double slack = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double bound = double_exponential_bound(fit.C_fit, t[i]);
    if (m[i] < bound) slack = std::max(slack, 1.0 - m[i] / bound);
  }
  return slack;
}

ContinuationReport continuation_report(const State& state, const PhysicalParams& params,
                                       const Caps& caps) {
  params.validate();
  const DepthDiagnostics d = depth_rate(state.curve, state.omega);
  ContinuationReport r;
  r.t = state.t;
  r.m = d.m;
  r.alpha_star = d.alpha_star;
  r.dmdt = d.dmdt;
  r.curve_norms = holder_norms(state.curve);
  r.curve_c2_norm = r.curve_norms.sum();
  if (params.model == Model::Muskat && params.gamma > 0.0) {
    r.required_order = 4;
    const Grid& grid = state.curve.grid();
    const CurveDerivative d2 = derivative(state.curve, 2);
    const auto d3x = differentiate(d2.dz1, grid, 0.0);
    const auto d3y = differentiate(d2.dz2, grid, 0.0);
    const auto d4x = differentiate2(d2.dz1, grid, 0.0);
    const auto d4y = differentiate2(d2.dz2, grid, 0.0);
    double c3 = 0.0, c4 = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
      c3 = std::max(c3, std::hypot(d3x[j], d3y[j]));
      c4 = std::max(c4, std::hypot(d4x[j], d4y[j]));
    }
    r.curve_c4_norm = r.curve_c2_norm + c3 + c4;
  }
  const HolderNorms wn = scalar_norms(state.omega.values(), state.curve.grid());
  r.omega_c0_norm = wn.c0;
  r.omega_c1_norm = wn.c0 + wn.c1;
  r.chord_arc = d.chord_arc;
  if (d.m > 0.0 && d.m < std::exp(-1.0)) {
    r.ratio_applicable = true;
    r.bound_ratio = log_bound_ratio(d);
  }

  if (!(r.curve_c2_norm <= caps.norm_cap)) r.exceeded.push_back("curve_c2_norm");
  if (r.required_order == 4 && !(r.curve_c4_norm <= caps.norm_cap)) {
    r.exceeded.push_back("curve_c4_norm");
  }
  // The vorticity C1 bound is a hypothesis for water waves and for unequal
  // viscosities; for equal-viscosity Muskat it follows from the curve norms.
  const bool omega_hypothesis = params.model == Model::WaterWaves || params.mu_jump() != 0.0;
  if (omega_hypothesis && !(r.omega_c1_norm <= caps.norm_cap)) {
    r.exceeded.push_back("omega_c1_norm");
  }
  if (!(r.chord_arc <= caps.chord_arc_cap)) r.exceeded.push_back("chord_arc");
  if (!(r.m > caps.contact_tol)) r.exceeded.push_back("min_depth");
  if (r.exceeded.empty()) {
    r.verdict = "criteria satisfied";
  } else {
    r.verdict = "criteria exceeded:";
    for (const auto& e : r.exceeded) r.verdict += " " + e;
  }
  return r;
}

}  // namespace seabed::analysis
