#pragma once

#include <vector>

#include "loewner/fuchsian.hpp"
#include "loewner/types.hpp"

namespace loewner {

// Candidate two-point function of the integrable family:
//   G(z1, z2b) = (1-z1)^alpha (1-z2b)^conj(alpha) (1-z1 z2b)^(-kappa alpha conj(alpha)/2),
// evaluated with z2b treated as an independent complex variable.
struct CandidateG {
  Complex alpha;
  SleParams params;
  double margin = 1e-3;  // min distance of 1-z1, 1-z2b, 1-z1 z2b from 0

  Complex value(Complex z1, Complex z2b) const;
};

struct AbcCoefficients {
  Complex A, B, C;  // P(d)(1-z)^a = A (1-z)^a + B (1-z)^(a-1) + C (1-z)^(a-2)
};

AbcCoefficients abc_coefficients(Complex alpha, MomentExponents pq, SleParams params);

// Direct application of the single-variable operator
//   P(d) = -kappa/2 (z d)^2 + ((z+1)/(z-1) + ia) z d + p - q + q/(1-z) - p/(1-z)^2
// to (1-z)^alpha, using analytic derivatives (oracle for the A/B/C identity).
Complex pdelta_on_power(Complex alpha, Complex z, MomentExponents pq, SleParams params);

// P(D) G at (z1, z2b) from closed-form logarithmic derivatives of G.
Complex pde_residual(const CandidateG& g, MomentExponents pq, Complex z1, Complex z2b);

// Central finite-difference evaluation of P(D) G (meta-test of the analytic
// path; step 1e-5).
Complex pde_residual_fd(const CandidateG& g, MomentExponents pq, Complex z1, Complex z2b);

// Mode-wise action of the Levy generator: Lambda z^k zbar^l = -eta(k-l) z^k zbar^l.
Complex levy_generator_on_monomial(const LevySymbol& symbol, int k, int l, Complex z);

struct ModeResidual {
  int n;
  double max_abs;
};

// Residual of the Fourier-mode recursion for every |n| <= table.N over the
// grid (negative modes exercise the theta_{-n} = xi^n theta_n symmetry).
std::vector<ModeResidual> levy_mode_residuals(const FourierTable& table,
                                              const std::vector<double>& xi_grid);

}  // namespace loewner
