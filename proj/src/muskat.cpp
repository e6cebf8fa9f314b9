#include "seabed/muskat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "seabed/errors.hpp"

namespace seabed::muskat {

namespace {

void require_muskat(const PhysicalParams& params) {
  params.validate();
  if (params.model != Model::Muskat) throw ValidationError("Muskat closure needs Muskat params");
}

double sup_diff(std::span<const double> a, std::span<const double> b) {
  double out = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) out = std::max(out, std::abs(a[j] - b[j]));
  return out;
}

}  // namespace

std::vector<double> vorticity_rhs(const InterfaceCurve& curve, const PhysicalParams& params) {
  require_muskat(params);
  const Grid& grid = curve.grid();
  const CurveJet j = jet(curve);
  std::vector<double> rhs(grid.size());
  const double buoyancy = params.rho_jump() * params.g;
  for (int k = 0; k < grid.size(); ++k) rhs[k] = buoyancy * j.d1y[k];
  if (params.gamma > 0.0) {
    const auto kappa = curvature(curve, j);
    const auto dkappa = differentiate(kappa, grid, 0.0);
    for (int k = 0; k < grid.size(); ++k) rhs[k] += params.gamma * dkappa[k];
  }
  return rhs;
}

VorticityStrength solve_vorticity_equal(const InterfaceCurve& curve, const PhysicalParams& params) {
  require_muskat(params);
  if (params.mu_plus != params.mu_minus) {
    throw ValidationError("equal-viscosity closure called with mu_plus != mu_minus");
  }
  auto omega = vorticity_rhs(curve, params);
  for (double& w : omega) w /= params.mu_plus;
  return VorticityStrength(curve.grid(), std::move(omega));
}

std::vector<double> apply_operator(const BirkhoffRott& br, const PhysicalParams& params,
                                   std::span<const double> omega) {
  const Grid& grid = br.curve().grid();
  const double mean_mu = 0.5 * (params.mu_plus + params.mu_minus);
  const double coupling = params.mu_jump() / (2.0 * std::numbers::pi);
  std::vector<double> out(grid.size());
  const auto tangential = coupling != 0.0 ? br.tangential(omega) : std::vector<double>(grid.size());
  for (int k = 0; k < grid.size(); ++k) {
    out[k] = grid.in_decay_band(k) ? omega[k] : coupling * tangential[k] + mean_mu * omega[k];
  }
  return out;
}

Solution solve_vorticity_general(const InterfaceCurve& curve, const PhysicalParams& params,
                                 double tol, int max_iter) {
  require_muskat(params);
  if (!(tol > 0.0)) throw ValidationError("Picard tolerance must be positive");
  const Grid& grid = curve.grid();
  const int n = grid.size();
  const double mean_mu = 0.5 * (params.mu_plus + params.mu_minus);
  const double coupling = params.mu_jump() / (2.0 * std::numbers::pi);
  const auto rhs = vorticity_rhs(curve, params);
  const BirkhoffRott br(curve);

  std::vector<double> omega(n);
  for (int k = 0; k < n; ++k) omega[k] = grid.in_decay_band(k) ? 0.0 : rhs[k] / mean_mu;

  Solution sol{VorticityStrength::zero(grid), 0, 0.0, {}};
  std::vector<double> next(n);
  double change = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    const auto tangential =
        coupling != 0.0 ? br.tangential(omega) : std::vector<double>(n, 0.0);
    for (int k = 0; k < n; ++k) {
      next[k] = grid.in_decay_band(k) ? 0.0 : (rhs[k] - coupling * tangential[k]) / mean_mu;
    }
    change = sup_diff(next, omega);
    sol.increments.push_back(change);
    omega.swap(next);
    if (!std::isfinite(change)) break;
    if (change <= tol) {
      sol.iterations = it;
      const auto lhs = apply_operator(br, params, omega);
      for (int k = 0; k < n; ++k) {
        const double target = grid.in_decay_band(k) ? 0.0 : rhs[k];
        sol.residual = std::max(sol.residual, std::abs(lhs[k] - target));
      }
      sol.omega = VorticityStrength(grid, std::move(omega));
      return sol;
    }
  }
  throw NoConvergence(max_iter, change);
}

VorticityStrength solve_vorticity(const InterfaceCurve& curve, const PhysicalParams& params,
                                  double tol, int max_iter) {
  if (params.mu_plus == params.mu_minus) return solve_vorticity_equal(curve, params);
  return solve_vorticity_general(curve, params, tol, max_iter).omega;
}

}  // namespace seabed::muskat
