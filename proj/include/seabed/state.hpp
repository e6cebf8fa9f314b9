#pragma once

#include "seabed/geometry.hpp"
#include "seabed/kernels.hpp"

namespace seabed {

/// Interface plus vorticity strength at time t. For water waves omega~ is
/// prognostic; for Muskat it is recomputed from the curve.
struct State {
  InterfaceCurve curve;
  VorticityStrength omega;
  double t = 0.0;
};

}  // namespace seabed
