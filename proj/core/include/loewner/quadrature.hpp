#pragma once

#include <functional>

#include "loewner/errors.hpp"

namespace loewner {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int max_depth_used = 0;
};

// Adaptive Gauss-Kronrod 7/15 with bisection. Throws QualityError when the
// requested tolerance cannot be met within max_depth.
QuadResult adaptive_gk15(const std::function<double(double)>& f, double a, double b,
                         double rel_tol = 1e-9, double abs_tol = 1e-300, int max_depth = 30);

}  // namespace loewner
