#pragma once

#include "loewner/types.hpp"

namespace loewner {

// Conformal map from the unit disk to the complement of the complete
// logarithmic spiral exp[(1+ia)t], t real:
//   Phi(z) = exp[(2/(1-ia)) log(i(1-z)/(1+z))], principal log.
// The Moebius image lies in the upper half-plane, so the log is single-valued.
Complex spiral_phi(Complex z, double a);

// Phi'(z) = -(4/(1-ia)) Phi(z)/(1-z^2).
Complex spiral_phi_prime(Complex z, double a);

// log Phi and log Phi' continuous on the circle |z| = r (principal-branch
// composition; no cut crosses the circle for r < 1).
Complex spiral_log_phi(Complex z, double a);
Complex spiral_log_phi_prime(Complex z, double a);

// Circle integral of |Phi'(z)^p / Phi(z)^q| |dz| at |z| = r, adaptive
// Gauss-Kronrod with panels concentrated near the peaks at theta = 0, pi.
double spiral_integral_means(MomentExponents pq, double a, double r);

// Theorem "complete spiral": sup{0, beta1, beta2} with
// beta1/2 = +-2 Re((p-q)/(1-ia)) + Re p - 1.
SpectrumResult spiral_spectrum_complete(MomentExponents pq, double a);

// Theorem "half spiral": sup{-Re p - 1, 0, beta1}.
SpectrumResult spiral_spectrum_half(MomentExponents pq, double a);

}  // namespace loewner
