#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "loewner/evolve.hpp"
#include "loewner/levy.hpp"
#include "loewner/types.hpp"

namespace loewner {

struct MomentOptions {
  double dt = 1e-3;
  // Horizon; 0 selects the default 10 + 5*log(1/(1-r_max)) so that e^-T is
  // negligible against 1 - |z|.
  double T = 0.0;
  int threads = 0;  // 0: LOEWNER_THREADS env or hardware
  int n_theta = 256;
  double fit_window = 0.1;         // use radii with 1-r <= fit_window
  double max_discard_frac = 0.01;  // quality cap on blown-up samples
  double max_rel_stderr = 0.2;     // per-radius quality cap for estimate_beta
  EvolveOptions evolve;
  int64_t chunk = 256;  // samples per reduction chunk (fixed => thread-count independent)
};

double default_horizon(double r_max);

struct PointMomentResult {
  double mean = 0.0;
  double stderr_ = 0.0;
  int64_t n = 0;
  int64_t discarded = 0;
  double T = 0.0;
};

// Empirical mean and standard error of |f'(z)^p (z/f(z))^q| over n
// independent drivers; complex powers via the continuously tracked logs.
PointMomentResult estimate_moment_pointwise(const LevySymbol& symbol, MomentExponents pq,
                                            Complex z, int64_t n, const MomentOptions& opts,
                                            uint64_t seed);

struct MomentEstimate {
  MomentExponents pq;
  LevySymbol symbol;
  std::vector<double> r_grid;
  std::vector<double> M_hat;    // circle integral (d-theta normalization) of the estimator
  std::vector<double> stderr_;  // per-radius standard error of M_hat
  int64_t n_samples = 0;
  int64_t discarded = 0;
  uint64_t seed = 0;
  double dt = 0.0;
  double T = 0.0;
  int n_theta = 0;
};

struct BetaFit {
  double beta_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double slope_stderr = 0.0;
  MomentEstimate estimate;
};

// Trapezoid circle integrals of the pointwise estimator per radius, then the
// least-squares slope of log M against log 1/(1-r) over the fit window.
BetaFit estimate_beta(const LevySymbol& symbol, MomentExponents pq,
                      const std::vector<double>& r_grid, int64_t n, const MomentOptions& opts,
                      uint64_t seed);

// columns: r, M_hat, stderr (deterministic %.17g formatting)
void write_csv(const MomentEstimate& est, std::ostream& os);
void write_json(const MomentEstimate& est, const BetaFit* fit, std::ostream& os);

}  // namespace loewner
