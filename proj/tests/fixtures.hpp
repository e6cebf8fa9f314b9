#pragma once

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "seabed/geometry.hpp"
#include "seabed/kernels.hpp"
#include "seabed/profiles.hpp"

namespace fixture {

/// Random smooth compactly perturbed graph-like curve on `grid` (needs L >= 10).
inline seabed::InterfaceCurve random_curve(const seabed::Grid& grid, oracle::Gen& gen) {
  const seabed::profiles::Window w{gen.uniform(-2.0, 2.0), gen.uniform(0.5, 2.0), gen.uniform(1.0, 3.0)};
  const double a1 = gen.uniform(-0.3, 0.3), a2 = gen.uniform(-0.2, 0.2);
  const double k1 = gen.uniform(0.3, 1.5), k2 = gen.uniform(0.3, 2.0);
  const double p1 = gen.uniform(0.0, 6.0), p2 = gen.uniform(0.0, 6.0);
  const double b = gen.uniform(-0.1, 0.1), k3 = gen.uniform(0.3, 1.5);
  std::vector<double> z1(grid.size()), z2(grid.size());
  for (int j = 0; j < grid.size(); ++j) {
    const double s = grid.node(j);
    z1[j] = s + b * w(s) * std::sin(k3 * s);
    z2[j] = 1.0 + w(s) * (a1 * std::cos(k1 * s + p1) + a2 * std::cos(k2 * s + p2));
  }
  return seabed::InterfaceCurve(grid, std::move(z1), std::move(z2));
}

inline seabed::VorticityStrength random_vorticity(const seabed::Grid& grid, oracle::Gen& gen) {
  const seabed::profiles::Window w{gen.uniform(-2.0, 2.0), gen.uniform(0.5, 2.0), gen.uniform(1.0, 3.0)};
  const double c1 = gen.uniform(-1.0, 1.0), c2 = gen.uniform(-1.0, 1.0), k = gen.uniform(0.3, 2.0);
  std::vector<double> omega(grid.size());
  for (int j = 0; j < grid.size(); ++j) {
    const double s = grid.node(j);
    omega[j] = w(s) * (c1 * std::cos(k * s) + c2 * std::sin(k * s));
  }
  return seabed::VorticityStrength(grid, std::move(omega));
}

/// Samples an analytic curve on the grid.
inline seabed::InterfaceCurve sample(const seabed::Grid& grid, const oracle::AnalyticCurve& c) {
  std::vector<double> z1(grid.size()), z2(grid.size());
  for (int j = 0; j < grid.size(); ++j) {
    z1[j] = c.z1(grid.node(j));
    z2[j] = c.z2(grid.node(j));
  }
  return seabed::InterfaceCurve(grid, std::move(z1), std::move(z2));
}

inline std::vector<double> sample(const seabed::Grid& grid, double (*f)(double)) {
  std::vector<double> v(grid.size());
  for (int j = 0; j < grid.size(); ++j) v[j] = f(grid.node(j));
  return v;
}

}  // namespace fixture
