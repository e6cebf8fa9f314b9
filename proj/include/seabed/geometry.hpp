#pragma once

#include <span>
#include <vector>

namespace seabed {

// Discretization constants shared by every module.
inline constexpr double kDecayTol = 1e-10;
inline constexpr int kDecayBand = 8;
inline constexpr double kArcFloor = 1e-8;
inline constexpr double kCollisionTol = 1e-10;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
/// Rotation by +90 degrees: (a, b) -> (-b, a).
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

/// Uniform truncated parameter grid: alpha_j = -L + j h, h = 2L/N, j = 0..N-1.
class Grid {
 public:
  Grid(double half_width, int node_count);

  double half_width() const { return half_width_; }
  int size() const { return node_count_; }
  double spacing() const { return spacing_; }
  double node(int j) const { return -half_width_ + j * spacing_; }
  std::vector<double> nodes() const;

  /// True for the outermost kDecayBand nodes on either side.
  bool in_decay_band(int j) const {
    return j < kDecayBand || j >= node_count_ - kDecayBand;
  }
  /// Trapezoid weight on [alpha_0, alpha_{N-1}].
  double weight(int j) const {
    return (j == 0 || j == node_count_ - 1) ? 0.5 * spacing_ : spacing_;
  }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.half_width_ == b.half_width_ && a.node_count_ == b.node_count_;
  }

 private:
  double half_width_;
  int node_count_;
  double spacing_;
};

/// Sampled graph-like interface z(alpha) = (z1, z2) above the bottom y = 0.
///
/// Construction enforces z2 > 0, separated neighbouring samples, and the
/// far-field flatness |z1 - alpha| + |z2 - 1| <= kDecayTol on the decay band.
/// The global no-crossing check is O(N^2) and lives in chord_arc_constant().
class InterfaceCurve {
 public:
  InterfaceCurve(Grid grid, std::vector<double> z1, std::vector<double> z2);

  static InterfaceCurve flat(const Grid& grid);

  const Grid& grid() const { return grid_; }
  int size() const { return grid_.size(); }
  std::span<const double> z1() const { return z1_; }
  std::span<const double> z2() const { return z2_; }
  Vec2 at(int j) const { return {z1_[j], z2_[j]}; }

  /// Rigid horizontal translation of the perturbation by `cells` grid spacings
  /// (the parametrization moves with it, so the far field stays flat).
  InterfaceCurve translated(int cells) const;

 private:
  Grid grid_;
  std::vector<double> z1_;
  std::vector<double> z2_;
};

enum class Model { Muskat, WaterWaves };

struct PhysicalParams {
  Model model = Model::Muskat;
  double mu_plus = 1.0;
  double mu_minus = 1.0;
  double rho_plus = 0.0;
  double rho_minus = 1.0;
  double g = 1.0;
  double gamma = 0.0;

  /// Density jump [rho] = rho_+ - rho_-.
  double rho_jump() const { return rho_plus - rho_minus; }
  double mu_jump() const { return mu_plus - mu_minus; }
  double atwood() const { return (rho_plus - rho_minus) / (rho_plus + rho_minus); }

  /// Throws ValidationError when the parameter set is physically inconsistent.
  void validate() const;
};

/// 4th-order central first derivative of sampled data. On the decay band the
/// value `edge` (the flat-state derivative) is substituted.
std::vector<double> differentiate(std::span<const double> f, const Grid& grid, double edge);

/// Same for the second derivative.
std::vector<double> differentiate2(std::span<const double> f, const Grid& grid, double edge);

struct CurveDerivative {
  std::vector<double> dz1;
  std::vector<double> dz2;
};

/// d^order z / d alpha^order for order 1 or 2.
CurveDerivative derivative(const InterfaceCurve& curve, int order);

/// First and second derivatives bundled; computed once and reused by the
/// quadrature kernels.
struct CurveJet {
  std::vector<double> d1x, d1y, d2x, d2y;
  Vec2 d1(int j) const { return {d1x[j], d1y[j]}; }
  Vec2 d2(int j) const { return {d2x[j], d2y[j]}; }
};

CurveJet jet(const InterfaceCurve& curve);

std::vector<double> curvature(const InterfaceCurve& curve);
std::vector<double> curvature(const InterfaceCurve& curve, const CurveJet& jet);

/// max_{i != j} |alpha_i - alpha_j| / |z_i - z_j|.
double chord_arc_constant(const InterfaceCurve& curve);

struct MinDepth {
  double m = 0.0;
  double alpha_star = 0.0;
  int index = 0;
  /// Parabolic offset of alpha_star from node `index`, in units of h (|theta| <= 1/2).
  double theta = 0.0;
  /// Number of nodes sharing the minimal sampled z2.
  int ties = 1;
};

MinDepth min_depth(const InterfaceCurve& curve);

struct HolderNorms {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double sum() const { return c0 + c1 + c2; }
};

/// Discrete sup norms of z - (alpha, 1) and its first two derivatives.
HolderNorms holder_norms(const InterfaceCurve& curve);

/// Sup norm of a sampled scalar and of its first derivative (edge value 0).
HolderNorms scalar_norms(std::span<const double> f, const Grid& grid);

}  // namespace seabed
