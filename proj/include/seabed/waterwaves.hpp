#pragma once

#include <span>
#include <vector>

#include "seabed/geometry.hpp"
#include "seabed/kernels.hpp"
#include "seabed/state.hpp"

namespace seabed::waterwaves {

/// Nodewise value of the quantity differentiated in the omega~ equation:
///   A/(4 pi^2)|BR|^2 - (A/4) omega~^2/|z'|^2 + (A/pi)(BR.z') c - c omega~
///   - 2 gamma kappa/(rho_+ + rho_-) - 2 A g z2,
/// with A the Atwood number and BR the raw principal-value sum.
std::vector<double> bracket_term(const State& state, const PhysicalParams& params,
                                 std::span<const double> c);

struct OmegaRate {
  std::vector<double> dt_omega;
  int iterations = 0;
  std::vector<double> increments;
};

/// d omega~/dt. The implicit (A/pi) d_t[BR.z'] term is resolved by fixed-point
/// iteration against a virtual forward state advanced by dt_probe.
OmegaRate omega_rhs(const State& state, const PhysicalParams& params, std::span<const double> c,
                    double dt_probe, double tol = 1e-10, int max_iter = 50);

}  // namespace seabed::waterwaves
