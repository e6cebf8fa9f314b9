#pragma once

#include <numbers>

#include "seabed/geometry.hpp"
#include "seabed/kernels.hpp"

/// Initial-data families: flat, windowed cosine, pinch toward the bottom,
/// monotone-z1 variants, and Gaussian vorticity.
namespace seabed::profiles {

/// C-infinity step: 0 for x <= 0, 1 for x >= 1.
double smooth_step(double x);

/// Plateau window: 1 for |alpha - center| <= plateau, C-infinity ramp of width
/// `ramp`, exactly 0 beyond.
struct Window {
  double center = std::numbers::pi;
  double plateau = std::numbers::pi;
  double ramp = 2.0 * std::numbers::pi;
  double operator()(double alpha) const;
};

/// z = (alpha, 1 + a cos(alpha) W(alpha)). With the default window the unique
/// minimum 1 - a sits at the window center alpha = pi.
InterfaceCurve cosine_bump(const Grid& grid, double amplitude, const Window& window = {});

/// Profile value of cosine_bump at a continuous alpha.
double cosine_height(double alpha, double amplitude, const Window& window = {});

/// z2 = 1 - (1 - depth) exp(-((alpha - center)/width)^2) W(alpha), minimum
/// exactly `depth` at `center`.
InterfaceCurve pinch(const Grid& grid, double depth, double center = 0.0, double width = 1.0);
double pinch_height(double alpha, double depth, double center = 0.0, double width = 1.0);

/// Cosine bump whose horizontal coordinate is z1 = alpha + b sin(alpha - c) W(alpha),
/// strictly increasing for |b| < 0.5.
InterfaceCurve monotone_cosine(const Grid& grid, double amplitude, double z1_amplitude,
                               const Window& window = {});

/// omega~ = amplitude exp(-((alpha - center)/width)^2).
VorticityStrength gaussian_vorticity(const Grid& grid, double amplitude, double center,
                                     double width);

}  // namespace seabed::profiles
