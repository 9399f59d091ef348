#pragma once

#include "loewner/errors.hpp"
#include "loewner/levy.hpp"
#include "loewner/numeric.hpp"

namespace loewner {

struct EvolveOptions {
  // Minimum RK4 substeps per driver step (piecewise-constant driving).
  int substeps = 4;
  // Abort threshold on |f~ - lambda|.
  double singularity_floor = 1e-9;
  // Extra refinement near the driving point: substep h <= gap_frac*|f~-lambda|^2.
  // The gap grows like sqrt(t), so this costs only O(log) extra substeps.
  double gap_frac = 0.05;
  // Hard cap on substeps per trajectory.
  int64_t max_substeps = int64_t(1) << 40;
};

// State of the reversed radial flow at time t, with branch-tracked logs:
// log_deriv = log f~'_t(z) and log_ratio = log(f~_t(z)/z) are integrated as
// ODEs, so their imaginary parts are the continuous branches.
struct FlowState {
  Complex w;          // f~_t(z)
  Complex log_deriv;  // log f~'_t(z), continuous in t
  Complex log_ratio;  // log (f~_t(z)/z), continuous in t
};

struct EvolveOutcome {
  FlowState state;
  bool blown_up = false;
  double min_gap = 0.0;  // min over the trajectory of |f~ - lambda|
  double max_abs_w = 0.0;
};

// Integrates d f~/dt = f~ (f~+lambda)/(f~-lambda), f~_0 = z, jointly with the
// variational equation for f~' (via log f~'), freezing lambda within each
// driver step and advancing with classical RK4.
EvolveOutcome integrate_reversed_flow(const DriverPath& driver, Complex z, double T,
                                      const EvolveOptions& opts = {});

// e^T f~_T(z) and e^T f~'_T(z); by Lemma "equivalence in law" these converge
// to the whole-plane map f_0(z) and its derivative as T grows.
struct MapSample {
  Complex z;
  Complex f;
  Complex fprime;
  double T = 0.0;
};

// Throws BlowUpError when the trajectory hits the singularity floor.
MapSample evolve(const DriverPath& driver, Complex z, double T, const EvolveOptions& opts = {});

}  // namespace loewner
