#pragma once

#include <span>
#include <vector>

#include "seabed/geometry.hpp"

namespace seabed {

/// Sampled vorticity strength omega~(alpha_j) on a curve's grid.
class VorticityStrength {
 public:
  /// Throws ValidationError unless |omega| <= kDecayTol on the decay band.
  VorticityStrength(Grid grid, std::vector<double> omega);

  static VorticityStrength zero(const Grid& grid);

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return omega_; }
  double operator[](int j) const { return omega_[j]; }

 private:
  Grid grid_;
  std::vector<double> omega_;
};

struct Velocity2 {
  double u = 0.0;
  double v = 0.0;
};

enum class Side { Plus, Minus };

/// Reflection through the bottom: (x, y) -> (x, -y).
inline Vec2 image_point(Vec2 p) { return {p.x, -p.y}; }

/// (t - s)^perp / |t - s|^2, the free-space Biot-Savart kernel without 1/(2 pi).
inline Vec2 direct_kernel(Vec2 target, Vec2 source) {
  const double dx = target.x - source.x;
  const double dy = target.y - source.y;
  const double r2 = dx * dx + dy * dy;
  return {-dy / r2, dx / r2};
}

/// Kernel of the reflected charge at image_point(source).
inline Vec2 image_kernel(Vec2 target, Vec2 source) {
  return direct_kernel(target, image_point(source));
}

/// Finite part at s = alpha of g(s) a.(z(alpha) - z(s)) / |z(alpha) - z(s)|^2
/// after its odd 1/(s - alpha) singularity is removed. d1, d2 are the first
/// two derivatives of z at alpha; dg is g'(alpha).
double diagonal_limit(Vec2 a, double g, double dg, Vec2 d1, Vec2 d2);

/// Principal-value Birkhoff-Rott sums on a fixed curve. The geometric jet is
/// computed once so repeated applications (Picard sweeps, RK stages) only pay
/// for the O(N^2) pair loop.
///
/// The rule is the trapezoid sum over s != alpha_j plus h times the diagonal
/// limit of the regular remainder; the reflected term is smooth and summed
/// over all nodes. Results are the raw integral, without the 1/(2 pi).
class BirkhoffRott {
 public:
  explicit BirkhoffRott(const InterfaceCurve& curve);

  const InterfaceCurve& curve() const { return curve_; }
  const CurveJet& jet() const { return jet_; }

  /// Raw sum at node j given omega and its derivative.
  Vec2 raw_at(std::span<const double> omega, std::span<const double> domega, int j) const;
  /// Raw sums at every node.
  std::vector<Vec2> raw(std::span<const double> omega) const;
  /// Raw sums dotted with d_alpha z at every node.
  std::vector<double> tangential(std::span<const double> omega) const;

 private:
  InterfaceCurve curve_;
  CurveJet jet_;
};

/// Off-curve velocity by trapezoid quadrature. Throws TooCloseToCurve when
/// p lies within 3 h max|d_alpha z| of a curve node.
Velocity2 velocity_at_point(const InterfaceCurve& curve, const VorticityStrength& omega, Vec2 p);

/// Principal-value (mean) velocity on the curve at node j.
Velocity2 pv_boundary_integral(const InterfaceCurve& curve, const VorticityStrength& omega, int j);

/// One-sided limit from Omega_+ (above) or Omega_- (below).
Velocity2 plemelj_velocity(const InterfaceCurve& curve, const VorticityStrength& omega, int j,
                           Side side);

}  // namespace seabed
