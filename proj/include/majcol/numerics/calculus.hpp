#pragma once

#include "majcol/numerics/report.hpp"

namespace majcol::numerics {

/// Exponential rate of the overlap count at overlap alpha in (0,1).
double f_alpha(double alpha);
/// f_alpha after the substitution alpha = sin^2 x, x in (0, pi/2).
double g_x(double x);

struct GMeshOptions {
  double step = 1e-5;
  double gap = 0.1;
  double max_bound = -0.02;
  double small_step = 1e-3;
  double tolerance = 1e-13;
};
/// Mesh checks of g on (0, pi/2) and of f_alpha < 0 away from 1/2.
VerificationReport verify_g_mesh(const GMeshOptions& opts = {});

}  // namespace majcol::numerics
