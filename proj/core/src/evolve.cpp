#include "loewner/evolve.hpp"

#include <algorithm>
#include <cmath>

namespace loewner {

namespace {

struct Derivs {
  Complex dw, du, dv;
  bool ok;
};

inline Derivs rhs(const FlowState& y, Complex lambda, double floor2) {
  Complex d = y.w - lambda;
  double d2 = std::norm(d);
  if (d2 < floor2) return {Complex{}, Complex{}, Complex{}, false};
  Complex ratio = (y.w + lambda) / d;
  Complex dw = y.w * ratio;
  // d/dw [w(w+lambda)/(w-lambda)] = ratio - 2 lambda w / (w-lambda)^2
  Complex du = ratio - 2.0 * lambda * y.w / (d * d);
  return {dw, du, ratio, true};
}

inline bool rk4_step(FlowState& y, Complex lambda, double h, double floor2) {
  Derivs k1 = rhs(y, lambda, floor2);
  if (!k1.ok) return false;
  FlowState y2{y.w + 0.5 * h * k1.dw, y.log_deriv + 0.5 * h * k1.du,
               y.log_ratio + 0.5 * h * k1.dv};
  Derivs k2 = rhs(y2, lambda, floor2);
  if (!k2.ok) return false;
  FlowState y3{y.w + 0.5 * h * k2.dw, y.log_deriv + 0.5 * h * k2.du,
               y.log_ratio + 0.5 * h * k2.dv};
  Derivs k3 = rhs(y3, lambda, floor2);
  if (!k3.ok) return false;
  FlowState y4{y.w + h * k3.dw, y.log_deriv + h * k3.du, y.log_ratio + h * k3.dv};
  Derivs k4 = rhs(y4, lambda, floor2);
  if (!k4.ok) return false;
  y.w += h / 6.0 * (k1.dw + 2.0 * k2.dw + 2.0 * k3.dw + k4.dw);
  y.log_deriv += h / 6.0 * (k1.du + 2.0 * k2.du + 2.0 * k3.du + k4.du);
  y.log_ratio += h / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
  return true;
}

}  // namespace

EvolveOutcome integrate_reversed_flow(const DriverPath& driver, Complex z, double T,
                                      const EvolveOptions& opts) {
  if (std::abs(z) >= 1.0) throw DomainError("evolve: |z| must be < 1");
  if (T > driver.horizon() * (1 + 1e-9) + 1e-12) {
    throw DomainError("evolve: T exceeds driver horizon");
  }

  EvolveOutcome out;
  out.state = FlowState{z, Complex{0, 0}, Complex{0, 0}};
  out.min_gap = 2.0;
  out.max_abs_w = std::abs(z);
  if (z == Complex{0, 0}) {
    // f~_t(0) = 0, f~'_t(0) = e^{-t}
    out.state.log_deriv = Complex(-T, 0);
    out.state.log_ratio = Complex(-T, 0);
    return out;
  }

  const double dt = driver.dt;
  const size_t n_steps = std::min<size_t>(driver.steps(), size_t(std::llround(T / dt)));
  const double floor2 = opts.singularity_floor * opts.singularity_floor;
  const double h_base = dt / double(std::max(1, opts.substeps));
  int64_t budget = opts.max_substeps;

  FlowState& y = out.state;
  for (size_t k = 0; k < n_steps; ++k) {
    const Complex lambda = driver.lambda(k);
    double remaining = dt;
    while (remaining > 0) {
      double gap2 = std::norm(y.w - lambda);
      double gap = std::sqrt(gap2);
      out.min_gap = std::min(out.min_gap, gap);
      if (gap2 < floor2 || --budget < 0) {
        out.blown_up = true;
        return out;
      }
      double h = std::min({remaining, h_base, opts.gap_frac * gap2});
      if (!rk4_step(y, lambda, h, floor2)) {
        out.blown_up = true;
        return out;
      }
      out.max_abs_w = std::max(out.max_abs_w, std::abs(y.w));
      remaining -= h;
    }
  }
  return out;
}

MapSample evolve(const DriverPath& driver, Complex z, double T, const EvolveOptions& opts) {
  EvolveOutcome out = integrate_reversed_flow(driver, z, T, opts);
  if (out.blown_up) {
    throw BlowUpError("evolve: trajectory hit the singularity floor");
  }
  MapSample s;
  s.z = z;
  s.T = T;
  s.f = std::exp(T) * out.state.w;
  s.fprime = std::exp(Complex(T, 0) + out.state.log_deriv);
  return s;
}

}  // namespace loewner
