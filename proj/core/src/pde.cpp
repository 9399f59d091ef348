#include "loewner/pde.hpp"

#include <cmath>

#include "loewner/errors.hpp"
#include "loewner/levy.hpp"

namespace loewner {

namespace {

void check_margin(const CandidateG& g, Complex z1, Complex z2b) {
  double m = std::min({std::abs(1.0 - z1), std::abs(1.0 - z2b), std::abs(1.0 - z1 * z2b)});
  if (m < g.margin) throw DomainError("pde_residual: evaluation point violates margin");
}

}  // namespace

Complex CandidateG::value(Complex z1, Complex z2b) const {
  check_margin(*this, z1, z2b);
  Complex ac = std::conj(alpha);
  Complex s = params.kappa / 2.0 * alpha * ac;
  return std::exp(alpha * std::log(1.0 - z1) + ac * std::log(1.0 - z2b) -
                  s * std::log(1.0 - z1 * z2b));
}

AbcCoefficients abc_coefficients(Complex alpha, MomentExponents pq, SleParams params) {
  const double k = params.kappa;
  const Complex ia(0.0, params.a);
  AbcCoefficients out;
  out.A = -k / 2.0 * alpha * alpha + (1.0 + ia) * alpha + pq.p - pq.q;
  out.B = k * alpha * alpha - (k / 2.0 + 3.0 - ia) * alpha + pq.q;
  out.C = -k / 2.0 * alpha * alpha + (2.0 + k / 2.0) * alpha - pq.p;
  return out;
}

Complex pdelta_on_power(Complex alpha, Complex z, MomentExponents pq, SleParams params) {
  // phi = (1-z)^alpha; z d phi and (z d)^2 phi analytically.
  const Complex pw = std::pow(1.0 - z, alpha);
  const Complex pw1 = std::pow(1.0 - z, alpha - 1.0);
  const Complex pw2 = std::pow(1.0 - z, alpha - 2.0);
  const Complex zd = -alpha * z * pw1;
  const Complex zd2 = -alpha * z * pw1 + alpha * (alpha - 1.0) * z * z * pw2;
  const Complex ia(0.0, params.a);
  return -params.kappa / 2.0 * zd2 + ((z + 1.0) / (z - 1.0) + ia) * zd +
         (pq.p - pq.q) * pw + pq.q * pw1 - pq.p * pw2;
}

namespace {

struct LogDerivs {
  Complex g;          // G
  Complex l1, l2;     // d log G / d z1, d log G / d z2b
  Complex d1l1, d2l2; // second log-derivatives
  Complex d2l1;       // d^2 log G / d z1 d z2b
};

LogDerivs log_derivs(const CandidateG& g, Complex z1, Complex z2b) {
  LogDerivs d;
  const Complex al = g.alpha;
  const Complex ac = std::conj(al);
  const Complex s = g.params.kappa / 2.0 * al * ac;
  const Complex u1 = 1.0 - z1, u2 = 1.0 - z2b, u12 = 1.0 - z1 * z2b;
  d.g = std::exp(al * std::log(u1) + ac * std::log(u2) - s * std::log(u12));
  d.l1 = -al / u1 + s * z2b / u12;
  d.l2 = -ac / u2 + s * z1 / u12;
  d.d1l1 = -al / (u1 * u1) + s * z2b * z2b / (u12 * u12);
  d.d2l2 = -ac / (u2 * u2) + s * z1 * z1 / (u12 * u12);
  d.d2l1 = s / (u12 * u12);
  return d;
}

}  // namespace

Complex pde_residual(const CandidateG& g, MomentExponents pq, Complex z1, Complex z2b) {
  check_margin(g, z1, z2b);
  const LogDerivs d = log_derivs(g, z1, z2b);
  // G derivatives from log-derivatives
  const Complex G = d.g;
  const Complex G1 = G * d.l1;
  const Complex G2 = G * d.l2;
  const Complex G11 = G * (d.l1 * d.l1 + d.d1l1);
  const Complex G22 = G * (d.l2 * d.l2 + d.d2l2);
  const Complex G12 = G * (d.l1 * d.l2 + d.d2l1);
  // (z1 d1 - z2b d2)^2 G
  const Complex euler2 = z1 * G1 + z1 * z1 * G11 - 2.0 * z1 * z2b * G12 + z2b * G2 +
                         z2b * z2b * G22;
  const Complex ia(0.0, g.params.a);
  const Complex p = pq.p, q = pq.q;
  const Complex pc = std::conj(p), qc = std::conj(q);
  return -g.params.kappa / 2.0 * euler2 + z1 * ((z1 + 1.0) / (z1 - 1.0) + ia) * G1 +
         z2b * ((z2b + 1.0) / (z2b - 1.0) - ia) * G2 + (p - q + pc - qc) * G -
         p / ((1.0 - z1) * (1.0 - z1)) * G + q / (1.0 - z1) * G -
         pc / ((1.0 - z2b) * (1.0 - z2b)) * G + qc / (1.0 - z2b) * G;
}

Complex pde_residual_fd(const CandidateG& g, MomentExponents pq, Complex z1, Complex z2b) {
  check_margin(g, z1, z2b);
  const double h = 1e-5;
  auto G = [&](Complex a, Complex b) { return g.value(a, b); };
  const Complex G0 = G(z1, z2b);
  const Complex G1 = (G(z1 + h, z2b) - G(z1 - h, z2b)) / (2.0 * h);
  const Complex G2 = (G(z1, z2b + h) - G(z1, z2b - h)) / (2.0 * h);
  const Complex G11 = (G(z1 + h, z2b) - 2.0 * G0 + G(z1 - h, z2b)) / (h * h);
  const Complex G22 = (G(z1, z2b + h) - 2.0 * G0 + G(z1, z2b - h)) / (h * h);
  const Complex G12 = (G(z1 + h, z2b + h) - G(z1 + h, z2b - h) - G(z1 - h, z2b + h) +
                       G(z1 - h, z2b - h)) /
                      (4.0 * h * h);
  const Complex euler2 = z1 * G1 + z1 * z1 * G11 - 2.0 * z1 * z2b * G12 + z2b * G2 +
                         z2b * z2b * G22;
  const Complex ia(0.0, g.params.a);
  const Complex p = pq.p, q = pq.q;
  const Complex pc = std::conj(p), qc = std::conj(q);
  return -g.params.kappa / 2.0 * euler2 + z1 * ((z1 + 1.0) / (z1 - 1.0) + ia) * G1 +
         z2b * ((z2b + 1.0) / (z2b - 1.0) - ia) * G2 + (p - q + pc - qc) * G0 -
         p / ((1.0 - z1) * (1.0 - z1)) * G0 + q / (1.0 - z1) * G0 -
         pc / ((1.0 - z2b) * (1.0 - z2b)) * G0 + qc / (1.0 - z2b) * G0;
}

Complex levy_generator_on_monomial(const LevySymbol& symbol, int k, int l, Complex z) {
  Complex zb = std::conj(z);
  return -symbol.eta(double(k - l)) * std::pow(z, k) * std::pow(zb, l);
}

std::vector<ModeResidual> levy_mode_residuals(const FourierTable& table,
                                              const std::vector<double>& xi_grid) {
  std::vector<ModeResidual> out;
  for (int n = -table.N; n <= table.N; ++n) {
    double worst = 0.0;
    for (double xi : xi_grid) {
      worst = std::max(worst, std::fabs(fourier_recursion_residual(table, n, xi)));
    }
    out.push_back({n, worst});
  }
  return out;
}

}  // namespace loewner
