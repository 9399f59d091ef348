#include "loewner/fuchsian.hpp"

#include <cmath>
#include <limits>

#include "loewner/errors.hpp"
#include "loewner/special_functions.hpp"

namespace loewner {

double FourierTable::eta_n(int n) const {
  int m = std::abs(n);
  if (m >= int(eta.size())) {
    throw DomainError("FourierTable: eta not tabulated for |n|=" + std::to_string(m));
  }
  return eta[m];
}

double FourierTable::theta(int n, double xi) const {
  if (n < 0) return std::pow(xi, -n) * theta(-n, xi);
  if (n > N) return 0.0;
  return theta_val[n](xi);
}

double FourierTable::theta_deriv(int n, double xi) const {
  if (n < 0) {
    int m = -n;
    return double(m) * std::pow(xi, m - 1) * theta(m, xi) + std::pow(xi, m) * theta_deriv(m, xi);
  }
  if (n > N) return 0.0;
  return theta_der[n](xi);
}

double fourier_recursion_residual(const FourierTable& table, int n, double xi) {
  const double q = table.q;
  const double eta = table.eta_n(n);
  return 2.0 * xi * (xi - 1.0) * table.theta_deriv(n, xi) -
         (eta + n + (eta + 2.0 * q - n - 6.0) * xi) * table.theta(n, xi) +
         xi * (eta + n + q - 2.0) * table.theta(n + 1, xi) +
         (eta - n + q - 2.0) * table.theta(n - 1, xi);
}

double integral_means_from_table(const FourierTable& table, double r) {
  if (!(r > 0 && r < 1)) throw DomainError("integral_means_from_table: r in (0,1)");
  const double x = r * r;
  return (1.0 + x) * table.theta(0, x) - 2.0 * x * table.theta(1, x);
}

namespace {

double pow_neg(double base, double expo) { return std::pow(base, expo); }

}  // namespace

Hyp4mqSolution solve_4mq(double q, double eta1) {
  if (!(q <= 4.0) || !(eta1 >= 1.0 - q / 4.0 - 1e-14)) {
    throw DomainError("solve_4mq: (q, eta1) outside D_{4-q}");
  }
  Hyp4mqSolution sol;
  sol.q = q;
  sol.eta1 = eta1;
  sol.Z = eta1 * eta1 - 2.0 * (2.0 - q) * (eta1 + q - 3.0);
  if (sol.Z < 0) {
    if (sol.Z > -1e-12) sol.Z = 0.0;
    else throw DomainError("solve_4mq: Z < 0 (outside the green ellipse exterior)");
  }
  const double root = std::sqrt(sol.Z);
  sol.delta_prime_plus = 0.5 * (root - eta1);
  sol.delta_plus = 3.0 - q + sol.delta_prime_plus;
  sol.beta = sol.delta_plus;
  sol.c = 0.5 * (1.0 + eta1);
  sol.a_plus = 0.5 * (eta1 - root);
  sol.b_plus = 0.5 * (1.0 - root);
  sol.q_equals_2 = std::fabs(q - 2.0) < 1e-12;

  sol.table.q = q;
  sol.table.eta = {0.0, eta1, 4.0 - q};
  sol.table.N = 2;
  sol.table.theta_val.resize(3);
  sol.table.theta_der.resize(3);
  sol.table.theta_val[2] = [](double) { return 0.0; };
  sol.table.theta_der[2] = [](double) { return 0.0; };

  const double delta = sol.delta_plus;
  if (sol.q_equals_2) {
    // limit formulas: f0 = 1, delta+ = 1, I(r)/2pi ~ (3 - 1/eta1)(1-r^2)^-1
    sol.delta_prime_plus = 0.0;
    sol.delta_plus = 1.0;
    sol.beta = 1.0;
    sol.asymptotic_constant = 3.0 - 1.0 / eta1;
    const double e1 = eta1;
    sol.table.theta_val[0] = [](double x) { return 1.0 / (1.0 - x); };
    sol.table.theta_der[0] = [](double x) { return 1.0 / ((1.0 - x) * (1.0 - x)); };
    if (std::fabs(e1 - 1.0) < 1e-14) {
      sol.table.theta_val[1] = [](double) { return 0.0; };
      sol.table.theta_der[1] = [](double) { return 0.0; };
    } else {
      HypergeometricParams H(1.0, 0.5 * (3.0 - e1), 0.5 * (3.0 + e1));
      auto f1 = [e1, H](double x) {
        double h = hyp2f1(H, x);
        return (e1 - 1.0) / (2.0 * e1) *
               (1.0 - (1.0 - e1) / (1.0 + e1) * (1.0 - x) * h);
      };
      auto f1p = [e1, H](double x) {
        double h = hyp2f1(H, x);
        double hp = hyp2f1_derivative(H, x);
        return (e1 - 1.0) / (2.0 * e1) * (-(1.0 - e1) / (1.0 + e1)) *
               ((1.0 - x) * hp - h);
      };
      sol.table.theta_val[1] = [f1](double x) { return f1(x) / (1.0 - x); };
      sol.table.theta_der[1] = [f1, f1p](double x) {
        return f1p(x) / (1.0 - x) + f1(x) / ((1.0 - x) * (1.0 - x));
      };
    }
    return sol;
  }

  const double a = sol.a_plus, b = sol.b_plus, c = sol.c;
  HypergeometricParams P0(a, b, c);
  HypergeometricParams P1(a + 1.0, b + 1.0, c + 1.0);
  HypergeometricParams P2(a + 2.0, b + 2.0, c + 2.0);
  auto f0 = [P0](double x) { return hyp2f1(P0, x); };
  auto f0p = [P0, P1, a, b, c](double x) { return a * b / c * hyp2f1(P1, x); };
  auto f1 = [P0, P1, a, b, c, q](double x) {
    return a / (2.0 - q) * hyp2f1(P0, x) +
           a * b * (x - 1.0) / (c * (2.0 - q)) * hyp2f1(P1, x);
  };
  auto f1p = [P0, P1, P2, a, b, c, q](double x) {
    double Fp = a * b / c * hyp2f1(P1, x);
    double F1p = (a + 1.0) * (b + 1.0) / (c + 1.0) * hyp2f1(P2, x);
    return a / (2.0 - q) * Fp + a * b / (c * (2.0 - q)) * (hyp2f1(P1, x) + (x - 1.0) * F1p);
  };
  sol.table.theta_val[0] = [f0, delta](double x) { return pow_neg(1.0 - x, -delta) * f0(x); };
  sol.table.theta_der[0] = [f0, f0p, delta](double x) {
    return pow_neg(1.0 - x, -delta) * (f0p(x) + delta * f0(x) / (1.0 - x));
  };
  sol.table.theta_val[1] = [f1, delta](double x) { return pow_neg(1.0 - x, -delta) * f1(x); };
  sol.table.theta_der[1] = [f1, f1p, delta](double x) {
    return pow_neg(1.0 - x, -delta) * (f1p(x) + delta * f1(x) / (1.0 - x));
  };

  // asymptotic constant of (Ireq); c - a - b = sqrt(Z) > 0 needed for the
  // Gauss value (Z = 0 only touches D_{4-q} at the SLE tangency point).
  if (root > 0) {
    HypergeometricParams G(a, b, c);
    sol.asymptotic_constant = 2.0 * (1.0 - a / (2.0 - q)) * hyp2f1_at_one(G);
  } else {
    sol.asymptotic_constant = std::numeric_limits<double>::quiet_NaN();
  }
  return sol;
}

std::vector<AlgebraicFamily> algebraic_families_4mq(int n) {
  if (n < 0) throw DomainError("algebraic_families_4mq: n >= 0");
  std::vector<AlgebraicFamily> fams;
  const double inf = std::numeric_limits<double>::infinity();

  AlgebraicFamily hyp;
  hyp.name = "a+=-" + std::to_string(n);
  hyp.n = n;
  hyp.q_min = -inf;
  hyp.q_max = n == 0 ? 8.0 / 3.0 : (n == 1 ? 0.0 : 2.0 - 2.0 * n);
  hyp.eta1_of_q = [n](double q) {
    return ((2.0 - q) * (3.0 - q) - 2.0 * double(n) * double(n)) / (2.0 - q + 2.0 * n);
  };
  hyp.beta_of_q = [n](double q) { return 3.0 - q + double(n); };
  fams.push_back(hyp);

  const double w = double(2 * n + 1);
  const double q_lo = 3.0 - std::sqrt(w * w + 1.0);
  auto disc = [w](double q) { return (2.0 - q) * (q - 4.0) + w * w; };

  AlgebraicFamily ellp;
  ellp.name = "b+=-" + std::to_string(n) + " +";
  ellp.n = n;
  ellp.q_min = q_lo;
  ellp.q_max = 4.0;
  ellp.eta1_of_q = [disc](double q) { return 2.0 - q + std::sqrt(disc(q)); };
  ellp.beta_of_q = [disc, w](double q) { return 0.5 * (w + 4.0 - q - std::sqrt(disc(q))); };
  fams.push_back(ellp);

  if (n >= 1) {
    AlgebraicFamily ellm;
    ellm.name = "b+=-" + std::to_string(n) + " -";
    ellm.n = n;
    ellm.q_min = q_lo;
    ellm.q_max = 8.0 * (1.0 - double(n)) / 5.0;
    ellm.eta1_of_q = [disc](double q) { return 2.0 - q - std::sqrt(disc(q)); };
    ellm.beta_of_q = [disc, w](double q) { return 0.5 * (w + 4.0 - q + std::sqrt(disc(q))); };
    fams.push_back(ellm);
  }
  return fams;
}

FuchsianEigenvalues fuchsian_classification(double q, double eta1) {
  if (!(q <= 0.0) || !(eta1 >= -q / 4.0 - 1e-14)) {
    throw DomainError("fuchsian_classification: (q, eta1) outside D_{-q}");
  }
  FuchsianEigenvalues out;
  const double zhat = (eta1 - 2.0) * (eta1 - 2.0) + 2.0 * q * (eta1 + q - 3.0);
  const double root = std::sqrt(std::max(0.0, zhat));
  out.alpha_plus = 3.0 - q + 0.5 * (2.0 - eta1 + root);
  out.alpha_minus = 3.0 - q + 0.5 * (2.0 - eta1 - root);
  out.beta = out.alpha_plus;
  auto near_int = [](double x) { return std::fabs(x - std::round(x)) < 1e-9; };
  out.resonant_pm = near_int(out.alpha_plus - out.alpha_minus);
  out.resonant_plus1 = near_int(out.alpha_plus - 1.0);
  out.resonant_minus1 = near_int(out.alpha_minus - 1.0);
  return out;
}

}  // namespace loewner
