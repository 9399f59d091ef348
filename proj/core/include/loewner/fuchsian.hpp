#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "loewner/quadext.hpp"
#include "loewner/types.hpp"

namespace loewner {

// ---- Fourier-mode tables h(z, zbar) = sum_n theta_n(xi) z^n, xi = z zbar ----

struct FourierTable {
  double q = 0.0;
  std::vector<double> eta;  // eta[n] for n = 0..N (eta[0] = 0)
  int N = 0;                // highest stored mode; theta_n = 0 for n > N

  std::vector<std::function<double(double)>> theta_val;
  std::vector<std::function<double(double)>> theta_der;

  // theta_n for any integer n via theta_{-n}(xi) = xi^n theta_n(xi).
  double theta(int n, double xi) const;
  double theta_deriv(int n, double xi) const;
  double eta_n(int n) const;
};

// Left-hand side of the mode-n recursion
//   2 xi(xi-1) theta_n' - (eta_n + n + (eta_n + 2q - n - 6) xi) theta_n
//   + xi (eta_n + n + q - 2) theta_{n+1} + (eta_n - n + q - 2) theta_{n-1};
// zero for exact solutions.
double fourier_recursion_residual(const FourierTable& table, int n, double xi);

// I(r)/2pi = (1+r^2) theta_0(r^2) - 2 r^2 theta_1(r^2).
double integral_means_from_table(const FourierTable& table, double r);

// ---- eta_2 = 4 - q: hypergeometric solutions ----

struct Hyp4mqSolution {
  double q = 0.0, eta1 = 0.0;
  double Z = 0.0;          // eta1^2 - 2(2-q)(eta1+q-3)
  double a_plus = 0.0, b_plus = 0.0, c = 0.0;
  double delta_prime_plus = 0.0, delta_plus = 0.0;
  double beta = 0.0;       // 3 - q + (sqrt(Z) - eta1)/2
  double asymptotic_constant = 0.0;  // I(r)/2pi ~ const * (1-r^2)^(-delta_plus)
  bool q_equals_2 = false;
  FourierTable table;
};

// Domain D_{4-q}: q <= 4, eta1 >= 1 - q/4. q = 2 is a removable singularity
// handled by its explicit limit formulas.
Hyp4mqSolution solve_4mq(double q, double eta1);

// Algebraic (polynomial) families inside the eta_2 = 4-q analysis.
struct AlgebraicFamily {
  std::string name;       // "a+=-n" (hyperbola) or "b+=-n +/-" (ellipse branch)
  int n = 0;
  double q_min = 0.0, q_max = 0.0;
  std::function<double(double)> eta1_of_q;
  std::function<double(double)> beta_of_q;
};

std::vector<AlgebraicFamily> algebraic_families_4mq(int n);

// ---- eta_2 = -q: exact matrix recursion over Q(sqrt(Zhat)) ----

struct RecursionState {
  int n = 0;  // closure degree
  Rational q, eta1;
  Rational Zhat;             // (eta1-2)^2 + 2q(eta1+q-3)
  QuadExt alpha_plus, alpha_minus;
  // coeff[k][j] = A_j^k, normalized so theta_0(0) = sum_k A_0^k = 1
  std::vector<std::array<QuadExt, 3>> coeff;
  bool used_particular_k1 = false;
  std::vector<std::string> notes;
};

// Runs the exact recursion D_k A^k = C_{k-1} A^{k-1} from the null
// eigenvector of D_0(alpha_0^+). Throws SingularityError on eigenvalue
// collisions other than the handled n = 1 case.
RecursionState build_recursion_mq(const Rational& q, const Rational& eta1, int n);

struct ClosureVerdict {
  bool closed = false;
  bool bracket_vanishes = false;  // 2n - (eta1 + 2 alpha + 2q - 7) == 0
  bool a2n_zero = false;          // A_2^n == 0
  Rational beta;                  // alpha_0^+ (rational on the ellipse)
  RecursionState state;
};

// Exact verification that the recursion closes (A_2^n = 0) at a rational
// point of the ellipse (q-1)^2 + (eta1+q-2)^2 = (2n-1)^2 + 1 inside D_{-q}.
ClosureVerdict verify_closure_on_ellipse(int n, const Rational& q, const Rational& eta1);

struct FalsifyResult {
  Rational q, eta1;
  Rational witness;  // (eta1+q+1) A_1^n - (eta1+q-1) A_2^n, exact
  bool no_further_solution = false;  // true iff witness != 0
  RecursionState state;
};

// Alternative closure condition curve eta1 + q - 1 = q(q-2)/(4(n+1)) - n.
FalsifyResult falsify_alternative_condition(int n, const Rational& q);

// Rational points on the closure ellipse from the chord construction through
// (Xhat, Y) = (2n-1, 1), filtered to D_{-q}; skip_exceptional drops points
// with an alpha_0^+ - k = 1 collision for some 1 <= k <= n.
std::vector<std::pair<Rational, Rational>> rational_ellipse_points(int n, int count,
                                                                   bool skip_exceptional = true);

// ---- Fuchsian residue-matrix classification ----

struct FuchsianEigenvalues {
  double alpha_plus = 0.0;
  double alpha_minus = 0.0;
  double one = 1.0;
  bool resonant_pm = false;     // alpha+ - alpha- integer
  bool resonant_plus1 = false;  // alpha+ - 1 integer
  bool resonant_minus1 = false; // alpha- - 1 integer
  double beta = 0.0;            // = alpha_plus on D_{-q}
};

FuchsianEigenvalues fuchsian_classification(double q, double eta1);

// Exact determinants for the identity det(B - alpha I) = det D_0(alpha)/4.
Rational det_D0_exact(const Rational& alpha, const Rational& q, const Rational& eta1);
Rational det_D0_factored(const Rational& alpha, const Rational& q, const Rational& eta1);
Rational det_B_minus_alpha_exact(const Rational& alpha, const Rational& q,
                                 const Rational& eta1);

// Exact Z and Zhat (for the translation identity Zhat(eta1,q) = Z(eta1-2,q+2)).
Rational Z_exact(const Rational& eta1, const Rational& q);
Rational Zhat_exact(const Rational& eta1, const Rational& q);

}  // namespace loewner
