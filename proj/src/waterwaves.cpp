#include "seabed/waterwaves.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "seabed/errors.hpp"
#include "seabed/evolve.hpp"

namespace seabed::waterwaves {

namespace {

constexpr double kPi = std::numbers::pi;

void require_model(const State& state, const PhysicalParams& params, std::span<const double> c) {
  if (params.model != Model::WaterWaves) throw ValidationError("water-wave closure needs WaterWaves params");
  params.validate();
  if (!(state.curve.grid() == state.omega.grid())) {
    throw ValidationError("curve and vorticity live on different grids");
  }
  if (static_cast<int>(c.size()) != state.curve.size()) {
    throw ValidationError("tangential speed does not match the grid size");
  }
}

std::vector<double> bracket(const BirkhoffRott& br, const State& state,
                            const PhysicalParams& params, std::span<const double> c) {
  const int n = state.curve.size();
  const CurveJet& jt = br.jet();
  const auto omega = state.omega.values();
  const auto raw = br.raw(omega);
  const double A = params.atwood();
  const double rho_sum = params.rho_plus + params.rho_minus;
  std::vector<double> kappa;
  if (params.gamma > 0.0) kappa = curvature(state.curve, jt);

  std::vector<double> b(n);
  for (int j = 0; j < n; ++j) {
    const Vec2 d1 = jt.d1(j);
    const double speed2 = dot(d1, d1);
    const double tangential = dot(raw[j], d1);
    double v = A / (4.0 * kPi * kPi) * dot(raw[j], raw[j]) - 0.25 * A * omega[j] * omega[j] / speed2 +
               (A / kPi) * tangential * c[j] - c[j] * omega[j] - 2.0 * A * params.g * state.curve.z2()[j];
    if (params.gamma > 0.0) v -= 2.0 * params.gamma * kappa[j] / rho_sum;
    b[j] = v;
  }
  return b;
}

}  // namespace

std::vector<double> bracket_term(const State& state, const PhysicalParams& params,
                                 std::span<const double> c) {
  require_model(state, params, c);
  const BirkhoffRott br(state.curve);
  return bracket(br, state, params, c);
}

OmegaRate omega_rhs(const State& state, const PhysicalParams& params, std::span<const double> c,
                    double dt_probe, double tol, int max_iter) {
  require_model(state, params, c);
  if (!(dt_probe > 0.0)) throw ValidationError("dt_probe must be positive");
  const Grid& grid = state.curve.grid();
  const int n = grid.size();
  const BirkhoffRott br(state.curve);

  OmegaRate out;
  out.dt_omega = differentiate(bracket(br, state, params, c), grid, 0.0);
  for (double& v : out.dt_omega) v = -v;
  const std::vector<double> forcing = out.dt_omega;
  const double A = params.atwood();
  if (A == 0.0) return out;

  // Virtual forward curve z + dt_probe d_t z. Since BR.z' is linear in omega,
  // D_t = [Q(z+, omega) - Q(z, omega)]/dt_probe + Q(z+, w).
  ContourRate rate = contour_rhs(br, state.omega.values(), c);
  pin_far_field(rate.dz1, grid);
  pin_far_field(rate.dz2, grid);
  std::vector<double> z1(n), z2(n);
  for (int j = 0; j < n; ++j) {
    z1[j] = state.curve.z1()[j] + dt_probe * rate.dz1[j];
    z2[j] = state.curve.z2()[j] + dt_probe * rate.dz2[j];
  }
  const BirkhoffRott br_plus(InterfaceCurve(grid, std::move(z1), std::move(z2)));
  const auto q0 = br.tangential(state.omega.values());
  const auto q1 = br_plus.tangential(state.omega.values());
  std::vector<double> base(n);
  for (int j = 0; j < n; ++j) base[j] = forcing[j] + (A / kPi) * (q1[j] - q0[j]) / dt_probe;

  std::vector<double> w = forcing;
  pin_far_field(w, grid);
  for (int k = 1; k <= max_iter; ++k) {
    const auto qw = br_plus.tangential(w);
    double change = 0.0;
    for (int j = 0; j < n; ++j) {
      const double next = grid.in_decay_band(j) ? 0.0 : base[j] + (A / kPi) * qw[j];
      change = std::max(change, std::abs(next - w[j]));
      w[j] = next;
    }
    out.increments.push_back(change);
    out.iterations = k;
    if (!std::isfinite(change)) break;
    if (change <= tol) {
      out.dt_omega = std::move(w);
      return out;
    }
  }
  throw NoConvergence(out.iterations, out.increments.empty() ? 0.0 : out.increments.back());
}

}  // namespace seabed::waterwaves
