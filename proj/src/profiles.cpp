#include "seabed/profiles.hpp"

#include <cmath>

#include "seabed/errors.hpp"

namespace seabed::profiles {

double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / x);
  const double b = std::exp(-1.0 / (1.0 - x));
  return a / (a + b);
}

double Window::operator()(double alpha) const {
  const double u = std::abs(alpha - center);
  if (u <= plateau) return 1.0;
  if (ramp <= 0.0) return 0.0;
  return smooth_step((plateau + ramp - u) / ramp);
}

double cosine_height(double alpha, double amplitude, const Window& window) {
  return 1.0 + amplitude * std::cos(alpha) * window(alpha);
}

InterfaceCurve cosine_bump(const Grid& grid, double amplitude, const Window& window) {
  std::vector<double> z1 = grid.nodes();
  std::vector<double> z2(grid.size());
  for (int j = 0; j < grid.size(); ++j) z2[j] = cosine_height(z1[j], amplitude, window);
  return InterfaceCurve(grid, std::move(z1), std::move(z2));
}

double pinch_height(double alpha, double depth, double center, double width) {
  const Window envelope{center, 3.0 * width, 3.0 * width};
  const double x = (alpha - center) / width;
  return 1.0 - (1.0 - depth) * std::exp(-x * x) * envelope(alpha);
}

InterfaceCurve pinch(const Grid& grid, double depth, double center, double width) {
  if (!(depth > 0.0) || !(depth <= 1.0)) {
    throw ValidationError("pinch depth must lie in (0, 1]");
  }
  std::vector<double> z1 = grid.nodes();
  std::vector<double> z2(grid.size());
  for (int j = 0; j < grid.size(); ++j) z2[j] = pinch_height(z1[j], depth, center, width);
  return InterfaceCurve(grid, std::move(z1), std::move(z2));
}

InterfaceCurve monotone_cosine(const Grid& grid, double amplitude, double z1_amplitude,
                               const Window& window) {
  std::vector<double> z1(grid.size());
  std::vector<double> z2(grid.size());
  for (int j = 0; j < grid.size(); ++j) {
    const double a = grid.node(j);
    z1[j] = a + z1_amplitude * std::sin(a - window.center) * window(a);
    z2[j] = cosine_height(a, amplitude, window);
  }
  return InterfaceCurve(grid, std::move(z1), std::move(z2));
}

VorticityStrength gaussian_vorticity(const Grid& grid, double amplitude, double center,
                                     double width) {
  std::vector<double> omega(grid.size());
  for (int j = 0; j < grid.size(); ++j) {
    const double x = (grid.node(j) - center) / width;
    omega[j] = amplitude * std::exp(-x * x);
  }
  return VorticityStrength(grid, std::move(omega));
}

}  // namespace seabed::profiles
