#pragma once

#include <vector>

#include "seabed/geometry.hpp"
#include "seabed/kernels.hpp"

namespace seabed::muskat {

/// gamma d_alpha kappa + [rho] g d_alpha z2 at every node.
std::vector<double> vorticity_rhs(const InterfaceCurve& curve, const PhysicalParams& params);

/// Equal viscosities: omega~ = vorticity_rhs / mu.
VorticityStrength solve_vorticity_equal(const InterfaceCurve& curve, const PhysicalParams& params);

struct Solution {
  VorticityStrength omega;
  int iterations = 0;
  /// Sup norm of the discrete equation residual at the returned omega~.
  double residual = 0.0;
  /// Sup-norm change of every Picard sweep, in order.
  std::vector<double> increments;
};

/// Left-hand side of the discrete integral equation,
///   ([mu]/(2 pi)) BR(omega~) . d_alpha z + ((mu_- + mu_+)/2) omega~,
/// with BR the raw principal-value Birkhoff-Rott sum. Decay-band rows are the
/// identity (omega~ = 0 there).
std::vector<double> apply_operator(const BirkhoffRott& br, const PhysicalParams& params,
                                   std::span<const double> omega);

/// Picard iteration for unequal viscosities, started from the equal-viscosity
/// solution with the mean viscosity. Throws NoConvergence past max_iter.
Solution solve_vorticity_general(const InterfaceCurve& curve, const PhysicalParams& params,
                                 double tol = 1e-10, int max_iter = 200);

/// Dispatches on [mu]: closed form when the viscosities match, Picard otherwise.
VorticityStrength solve_vorticity(const InterfaceCurve& curve, const PhysicalParams& params,
                                  double tol = 1e-10, int max_iter = 200);

}  // namespace seabed::muskat
