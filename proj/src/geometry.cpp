#include "seabed/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "seabed/errors.hpp"

namespace seabed {

Grid::Grid(double half_width, int node_count)
    : half_width_(half_width), node_count_(node_count), spacing_(2.0 * half_width / node_count) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw ValidationError("grid half width must be positive and finite");
  }
  if (node_count < 16 || node_count % 2 != 0) {
    throw ValidationError("grid node count must be even and >= 16, got " +
                          std::to_string(node_count));
  }
}

std::vector<double> Grid::nodes() const {
  std::vector<double> a(node_count_);
  for (int j = 0; j < node_count_; ++j) a[j] = node(j);
  return a;
}

InterfaceCurve::InterfaceCurve(Grid grid, std::vector<double> z1, std::vector<double> z2)
    : grid_(grid), z1_(std::move(z1)), z2_(std::move(z2)) {
  const int n = grid_.size();
  if (static_cast<int>(z1_.size()) != n || static_cast<int>(z2_.size()) != n) {
    throw ValidationError("curve arrays do not match the grid size");
  }
  for (int j = 0; j < n; ++j) {
    if (!std::isfinite(z1_[j]) || !std::isfinite(z2_[j])) {
      throw ValidationError("curve sample " + std::to_string(j) + " is not finite");
    }
    if (!(z2_[j] > 0.0)) {
      throw ValidationError("curve touches or crosses the bottom at node " + std::to_string(j));
    }
    if (grid_.in_decay_band(j)) {
      const double dev = std::abs(z1_[j] - grid_.node(j)) + std::abs(z2_[j] - 1.0);
      if (dev > kDecayTol) {
        throw ValidationError("far field is not flat at node " + std::to_string(j));
      }
    }
    if (j > 0 && std::hypot(z1_[j] - z1_[j - 1], z2_[j] - z2_[j - 1]) <= kCollisionTol) {
      throw ValidationError("coincident neighbouring samples at node " + std::to_string(j));
    }
  }
}

InterfaceCurve InterfaceCurve::flat(const Grid& grid) {
  return InterfaceCurve(grid, grid.nodes(), std::vector<double>(grid.size(), 1.0));
}

InterfaceCurve InterfaceCurve::translated(int cells) const {
  const int n = grid_.size();
  std::vector<double> z1(n), z2(n);
  for (int j = 0; j < n; ++j) {
    const int src = j - cells;
    if (src >= 0 && src < n) {
      z1[j] = grid_.node(j) + (z1_[src] - grid_.node(src));
      z2[j] = z2_[src];
    } else {
      z1[j] = grid_.node(j);
      z2[j] = 1.0;
    }
  }
  return InterfaceCurve(grid_, std::move(z1), std::move(z2));
}

void PhysicalParams::validate() const {
  const auto finite_nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!finite_nonneg(rho_plus) || !finite_nonneg(rho_minus)) {
    throw ValidationError("densities must be finite and non-negative");
  }
  if (!finite_nonneg(g)) throw ValidationError("gravity must be finite and non-negative");
  if (!finite_nonneg(gamma)) throw ValidationError("surface tension must be finite and non-negative");
  if (model == Model::Muskat) {
    if (!(mu_plus > 0.0) || !(mu_minus > 0.0) || !std::isfinite(mu_plus) ||
        !std::isfinite(mu_minus)) {
      throw ValidationError("viscosities must be positive and finite");
    }
  } else if (!(rho_plus + rho_minus > 0.0)) {
    throw ValidationError("water waves need rho_plus + rho_minus > 0");
  }
}

std::vector<double> differentiate(std::span<const double> f, const Grid& grid, double edge) {
  const int n = grid.size();
  const double scale = 1.0 / (12.0 * grid.spacing());
  std::vector<double> df(n, edge);
  for (int j = kDecayBand; j < n - kDecayBand; ++j) {
    df[j] = (f[j - 2] - 8.0 * f[j - 1] + 8.0 * f[j + 1] - f[j + 2]) * scale;
  }
  return df;
}

std::vector<double> differentiate2(std::span<const double> f, const Grid& grid, double edge) {
  const int n = grid.size();
  const double h = grid.spacing();
  const double scale = 1.0 / (12.0 * h * h);
  std::vector<double> d2f(n, edge);
  for (int j = kDecayBand; j < n - kDecayBand; ++j) {
    d2f[j] = (-f[j - 2] + 16.0 * f[j - 1] - 30.0 * f[j] + 16.0 * f[j + 1] - f[j + 2]) * scale;
  }
  return d2f;
}

namespace {

// z1 - alpha: differentiating the perturbation avoids cancellation in alpha/h.
std::vector<double> horizontal_perturbation(const InterfaceCurve& curve) {
  const Grid& grid = curve.grid();
  std::vector<double> p(grid.size());
  for (int j = 0; j < grid.size(); ++j) p[j] = curve.z1()[j] - grid.node(j);
  return p;
}

}  // namespace

CurveDerivative derivative(const InterfaceCurve& curve, int order) {
  const Grid& grid = curve.grid();
  const auto p1 = horizontal_perturbation(curve);
  if (order == 1) {
    auto d1 = differentiate(p1, grid, 0.0);
    for (double& v : d1) v += 1.0;
    return {std::move(d1), differentiate(curve.z2(), grid, 0.0)};
  }
  if (order == 2) {
    return {differentiate2(p1, grid, 0.0), differentiate2(curve.z2(), grid, 0.0)};
  }
  throw ValidationError("derivative order must be 1 or 2");
}

CurveJet jet(const InterfaceCurve& curve) {
  auto first = derivative(curve, 1);
  auto second = derivative(curve, 2);
  return {std::move(first.dz1), std::move(first.dz2), std::move(second.dz1),
          std::move(second.dz2)};
}

std::vector<double> curvature(const InterfaceCurve& curve) { return curvature(curve, jet(curve)); }

std::vector<double> curvature(const InterfaceCurve& curve, const CurveJet& jet) {
  const int n = curve.size();
  std::vector<double> kappa(n);
  for (int j = 0; j < n; ++j) {
    const double speed2 = jet.d1x[j] * jet.d1x[j] + jet.d1y[j] * jet.d1y[j];
    if (std::sqrt(speed2) < kArcFloor) {
      throw DegenerateParametrization("|dz/dalpha| below arc floor at node " + std::to_string(j));
    }
    kappa[j] = (jet.d1x[j] * jet.d2y[j] - jet.d1y[j] * jet.d2x[j]) / (speed2 * std::sqrt(speed2));
  }
  return kappa;
}

double chord_arc_constant(const InterfaceCurve& curve) {
  const int n = curve.size();
  const Grid& grid = curve.grid();
  const auto z1 = curve.z1();
  const auto z2 = curve.z2();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double chord = std::hypot(z1[i] - z1[j], z2[i] - z2[j]);
      if (chord < kCollisionTol) {
        throw SelfIntersection("curve nodes " + std::to_string(i) + " and " + std::to_string(j) +
                               " coincide");
      }
      worst = std::max(worst, (j - i) * grid.spacing() / chord);
    }
  }
  return worst;
}

MinDepth min_depth(const InterfaceCurve& curve) {
  const auto z2 = curve.z2();
  const int n = curve.size();
  int best = 0;
  for (int j = 1; j < n; ++j) {
    if (z2[j] < z2[best]) best = j;
  }
  MinDepth out;
  out.index = best;
  out.m = z2[best];
  out.alpha_star = curve.grid().node(best);
  out.ties = static_cast<int>(std::count(z2.begin(), z2.end(), z2[best]));
  if (best == 0 || best == n - 1) return out;

  const double left = z2[best - 1];
  const double mid = z2[best];
  const double right = z2[best + 1];
  const double curv = left - 2.0 * mid + right;
  if (!(curv > 0.0)) return out;
  out.theta = std::clamp((left - right) / (2.0 * curv), -0.5, 0.5);
  out.m = mid - 0.125 * (right - left) * (right - left) / curv;
  out.m = std::min(out.m, mid);
  out.alpha_star = curve.grid().node(best) + out.theta * curve.grid().spacing();
  return out;
}

HolderNorms holder_norms(const InterfaceCurve& curve) {
  const Grid& grid = curve.grid();
  const auto d1 = derivative(curve, 1);
  const auto d2 = derivative(curve, 2);
  HolderNorms out;
  for (int j = 0; j < grid.size(); ++j) {
    out.c0 = std::max(out.c0, std::hypot(curve.z1()[j] - grid.node(j), curve.z2()[j] - 1.0));
    out.c1 = std::max(out.c1, std::hypot(d1.dz1[j] - 1.0, d1.dz2[j]));
    out.c2 = std::max(out.c2, std::hypot(d2.dz1[j], d2.dz2[j]));
  }
  return out;
}

HolderNorms scalar_norms(std::span<const double> f, const Grid& grid) {
  const auto df = differentiate(f, grid, 0.0);
  HolderNorms out;
  for (int j = 0; j < grid.size(); ++j) {
    out.c0 = std::max(out.c0, std::abs(f[j]));
    out.c1 = std::max(out.c1, std::abs(df[j]));
  }
  return out;
}

}  // namespace seabed
