#include "loewner/spiral.hpp"

#include <cmath>

#include "loewner/errors.hpp"
#include "loewner/quadrature.hpp"

namespace loewner {

namespace {

inline Complex moebius_xi(Complex z) { return Complex(0, 1) * (1.0 - z) / (1.0 + z); }

}  // namespace

Complex spiral_log_phi(Complex z, double a) {
  if (z == Complex(1, 0) || z == Complex(-1, 0)) {
    throw DomainError("spiral_phi: z = +-1 are the singular boundary points");
  }
  Complex c = 2.0 / Complex(1.0, -a);
  return c * std::log(moebius_xi(z));
}

Complex spiral_phi(Complex z, double a) { return std::exp(spiral_log_phi(z, a)); }

Complex spiral_log_phi_prime(Complex z, double a) {
  // Phi' = -(4/(1-ia)) Phi/(1-z^2); 1-z^2 has positive real part on |z|<1,
  // so its principal log is continuous along circles.
  Complex pref = -4.0 / Complex(1.0, -a);
  return std::log(pref) + spiral_log_phi(z, a) - std::log(1.0 - z * z);
}

Complex spiral_phi_prime(Complex z, double a) {
  return std::exp(spiral_log_phi_prime(z, a));
}

double spiral_integral_means(MomentExponents pq, double a, double r) {
  if (!(r > 0 && r < 1)) throw DomainError("spiral_integral_means: r must be in (0,1)");
  auto integrand = [&](double theta) {
    Complex z = r * Complex(std::cos(theta), std::sin(theta));
    Complex expo = pq.p * spiral_log_phi_prime(z, a) - pq.q * spiral_log_phi(z, a);
    return std::exp(expo.real());
  };
  // peaks sit at theta = 0 and pi with width ~ 1-r; split there
  double total = 0.0;
  const double cuts[5] = {0.0, M_PI / 2, M_PI, 3 * M_PI / 2, 2 * M_PI};
  for (int i = 0; i < 4; ++i) {
    total += adaptive_gk15(integrand, cuts[i], cuts[i + 1], 1e-9, 1e-300, 34).value;
  }
  return r * total;  // |dz| = r dtheta
}

SpectrumResult spiral_spectrum_complete(MomentExponents pq, double a) {
  double re_b = ((pq.p - pq.q) / Complex(1.0, -a)).real();
  double beta1 = 2.0 * re_b + pq.p.real() - 1.0;
  double beta2 = -2.0 * re_b + pq.p.real() - 1.0;
  SpectrumResult res;
  res.tau = re_b;
  if (beta1 >= beta2 && beta1 >= 0.0) {
    res.beta = beta1;
    res.branch = Branch::BetaOne;
  } else if (beta2 >= 0.0) {
    res.beta = beta2;
    res.branch = Branch::BetaTwo;
  } else {
    res.beta = 0.0;
    res.branch = Branch::Bulk;
  }
  return res;
}

SpectrumResult spiral_spectrum_half(MomentExponents pq, double a) {
  double re_b = ((pq.p - pq.q) / Complex(1.0, -a)).real();
  double beta_tip = -pq.p.real() - 1.0;
  double beta1 = 2.0 * re_b + pq.p.real() - 1.0;
  SpectrumResult res;
  res.tau = re_b;
  if (beta_tip >= beta1 && beta_tip >= 0.0) {
    res.beta = beta_tip;
    res.branch = Branch::Tip;
  } else if (beta1 >= 0.0) {
    res.beta = beta1;
    res.branch = Branch::BetaOne;
  } else {
    res.beta = 0.0;
    res.branch = Branch::Bulk;
  }
  return res;
}

}  // namespace loewner
