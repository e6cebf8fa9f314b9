#include "seabed/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "seabed/errors.hpp"

namespace seabed {

namespace {
constexpr double kInvTwoPi = 0.5 / std::numbers::pi;
}

VorticityStrength::VorticityStrength(Grid grid, std::vector<double> omega)
    : grid_(grid), omega_(std::move(omega)) {
  if (static_cast<int>(omega_.size()) != grid_.size()) {
    throw ValidationError("vorticity array does not match the grid size");
  }
  for (int j = 0; j < grid_.size(); ++j) {
    if (!std::isfinite(omega_[j])) {
      throw ValidationError("vorticity sample " + std::to_string(j) + " is not finite");
    }
    if (grid_.in_decay_band(j) && std::abs(omega_[j]) > kDecayTol) {
      throw ValidationError("vorticity does not decay at node " + std::to_string(j));
    }
  }
}

VorticityStrength VorticityStrength::zero(const Grid& grid) {
  return VorticityStrength(grid, std::vector<double>(grid.size(), 0.0));
}

double diagonal_limit(Vec2 a, double g, double dg, Vec2 d1, Vec2 d2) {
  const double speed2 = dot(d1, d1);
  if (std::sqrt(speed2) < kArcFloor) {
    throw DegenerateParametrization("|dz/dalpha| below arc floor in principal-value rule");
  }
  const double a1 = dot(a, d1);
  return -dg * a1 / speed2 - 0.5 * g * dot(a, d2) / speed2 + g * a1 * dot(d1, d2) / (speed2 * speed2);
}

BirkhoffRott::BirkhoffRott(const InterfaceCurve& curve) : curve_(curve), jet_(seabed::jet(curve)) {}

Vec2 BirkhoffRott::raw_at(std::span<const double> omega, std::span<const double> domega,
                          int j) const {
  const Grid& grid = curve_.grid();
  const int n = grid.size();
  const Vec2 target = curve_.at(j);
  Vec2 sum;
  for (int k = 0; k < n; ++k) {
    const double wk = grid.weight(k) * omega[k];
    if (wk == 0.0) continue;
    const Vec2 source = curve_.at(k);
    const Vec2 reflected = image_kernel(target, source);
    if (k != j) {
      const Vec2 direct = direct_kernel(target, source);
      sum.x += wk * (direct.x - reflected.x);
      sum.y += wk * (direct.y - reflected.y);
    } else {
      sum.x -= wk * reflected.x;
      sum.y -= wk * reflected.y;
    }
  }
  // (t - s)^perp has components a.(t - s) with a = (0, -1) and a = (1, 0).
  const Vec2 d1 = jet_.d1(j);
  const Vec2 d2 = jet_.d2(j);
  const double wj = grid.weight(j);
  sum.x += wj * diagonal_limit({0.0, -1.0}, omega[j], domega[j], d1, d2);
  sum.y += wj * diagonal_limit({1.0, 0.0}, omega[j], domega[j], d1, d2);
  return sum;
}

std::vector<Vec2> BirkhoffRott::raw(std::span<const double> omega) const {
  const Grid& grid = curve_.grid();
  const auto domega = differentiate(omega, grid, 0.0);
  std::vector<Vec2> out(grid.size());
  for (int j = 0; j < grid.size(); ++j) out[j] = raw_at(omega, domega, j);
  return out;
}

std::vector<double> BirkhoffRott::tangential(std::span<const double> omega) const {
  const auto br = raw(omega);
  std::vector<double> out(br.size());
  for (std::size_t j = 0; j < br.size(); ++j) out[j] = dot(br[j], jet_.d1(static_cast<int>(j)));
  return out;
}

Velocity2 velocity_at_point(const InterfaceCurve& curve, const VorticityStrength& omega, Vec2 p) {
  const Grid& grid = curve.grid();
  const int n = grid.size();
  const auto d1 = derivative(curve, 1);
  double max_speed = 0.0;
  double nearest = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    max_speed = std::max(max_speed, std::hypot(d1.dz1[k], d1.dz2[k]));
    nearest = std::min(nearest, std::hypot(p.x - curve.z1()[k], p.y - curve.z2()[k]));
  }
  const double collar = 3.0 * grid.spacing() * max_speed;
  if (nearest < collar) {
    throw TooCloseToCurve("evaluation point is " + std::to_string(nearest) +
                          " from the curve, inside the near-field collar " +
                          std::to_string(collar));
  }
  Velocity2 vel;
  for (int k = 0; k < n; ++k) {
    const double wk = grid.weight(k) * omega[k];
    if (wk == 0.0) continue;
    const Vec2 source = curve.at(k);
    const Vec2 direct = direct_kernel(p, source);
    const Vec2 reflected = image_kernel(p, source);
    vel.u += wk * (direct.x - reflected.x);
    vel.v += wk * (direct.y - reflected.y);
  }
  vel.u *= kInvTwoPi;
  vel.v *= kInvTwoPi;
  return vel;
}

Velocity2 pv_boundary_integral(const InterfaceCurve& curve, const VorticityStrength& omega, int j) {
  if (!(curve.grid() == omega.grid())) {
    throw ValidationError("curve and vorticity live on different grids");
  }
  const BirkhoffRott br(curve);
  const auto domega = differentiate(omega.values(), curve.grid(), 0.0);
  const Vec2 raw = br.raw_at(omega.values(), domega, j);
  return {kInvTwoPi * raw.x, kInvTwoPi * raw.y};
}

Velocity2 plemelj_velocity(const InterfaceCurve& curve, const VorticityStrength& omega, int j,
                           Side side) {
  Velocity2 mean = pv_boundary_integral(curve, omega, j);
  const auto d1 = derivative(curve, 1);
  const Vec2 tangent{d1.dz1[j], d1.dz2[j]};
  const double speed2 = dot(tangent, tangent);
  const double sign = side == Side::Plus ? -0.5 : 0.5;
  mean.u += sign * omega[j] * tangent.x / speed2;
  mean.v += sign * omega[j] * tangent.y / speed2;
  return mean;
}

}  // namespace seabed
