#include "loewner/special_functions.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace loewner {

namespace {

bool exact_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

// Lanczos, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

double gamma_positive(double x) {
  // valid for x >= 0.5
  double xm1 = x - 1.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (xm1 + i);
  double t = xm1 + 7.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, xm1 + 0.5) * std::exp(-t) * acc;
}

}  // namespace

double gamma_fn(double x) {
  if (exact_integer(x) && x <= 0.0) {
    throw DomainError("gamma_fn: pole at non-positive integer x=" + std::to_string(x));
  }
  if (x >= 0.5) return gamma_positive(x);
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  return M_PI / (sin_pi(x) * gamma_positive(1.0 - x));
}

HypergeometricParams::HypergeometricParams(double a_, double b_, double c_)
    : a(a_), b(b_), c(c_) {
  if (exact_integer(c) && c <= 0.0) {
    throw DomainError("hypergeometric: c is zero or a negative integer");
  }
  a_exact_int_ = exact_integer(a);
  b_exact_int_ = exact_integer(b);
}

namespace {

constexpr double kTermStop = 1e-17;
constexpr int kMaxTerms = 100000;

// Exact finite sum when a (or b) = -n, n >= 0: exactly n+1 terms.
double hyp2f1_polynomial(const HypergeometricParams& p, double x) {
  double na = p.a_is_nonpos_int() ? -p.a : HUGE_VAL;
  double nb = p.b_is_nonpos_int() ? -p.b : HUGE_VAL;
  int n = int(std::min(na, nb));
  double a = p.a, b = p.b, c = p.c;
  double sum = 1.0, term = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
  }
  return sum;
}

// Plain series; stop when the term is < 1e-17 * |partial sum| three times in
// a row.
double hyp2f1_series(double a, double b, double c, double x) {
  double sum = 1.0, term = 1.0;
  int small_streak = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
    sum += term;
    if (std::fabs(term) < kTermStop * std::fabs(sum)) {
      if (++small_streak >= 3) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw ConvergenceError("hyp2f1: series did not converge within 100000 terms");
}

double hyp2f1_impl(const HypergeometricParams& p, double x, bool allow_transform) {
  if (x < 0.0 || x >= 1.0) throw DomainError("hyp2f1: x must lie in [0,1)");
  if (p.a_is_nonpos_int() || p.b_is_nonpos_int()) {
    return hyp2f1_polynomial(p, x);
  }
  if (x == 0.0) return 1.0;
  double s = p.c - p.a - p.b;
  // Near x=1 the term decay exponent is s for the direct series and -s after
  // the Euler transformation; pick the representation that decays faster.
  if (allow_transform && x > 0.9 && s < 0.0) {
    HypergeometricParams t(p.c - p.a, p.c - p.b, p.c);
    return std::pow(1.0 - x, s) * hyp2f1_impl(t, x, false);
  }
  return hyp2f1_series(p.a, p.b, p.c, x);
}

}  // namespace

double hyp2f1(const HypergeometricParams& params, double x) {
  return hyp2f1_impl(params, x, true);
}

double hyp2f1_at_one(const HypergeometricParams& p) {
  double s = p.c - p.a - p.b;
  if (p.a_is_nonpos_int() || p.b_is_nonpos_int()) {
    // polynomial: evaluate the finite sum at x=1
    return hyp2f1_polynomial(p, 1.0);
  }
  if (s <= 0.0) {
    throw DomainError("hyp2f1_at_one: diverges, c-a-b <= 0");
  }
  return gamma_fn(p.c) * gamma_fn(s) / (gamma_fn(p.c - p.a) * gamma_fn(p.c - p.b));
}

double euler_transform(const HypergeometricParams& p, double x) {
  if (x < 0.0 || x >= 1.0) throw DomainError("euler_transform: x must lie in [0,1)");
  HypergeometricParams t(p.c - p.a, p.c - p.b, p.c);
  return std::pow(1.0 - x, p.c - p.a - p.b) * hyp2f1_impl(t, x, false);
}

double hyp2f1_derivative(const HypergeometricParams& p, double x) {
  HypergeometricParams up(p.a + 1.0, p.b + 1.0, p.c + 1.0);
  return p.a * p.b / p.c * hyp2f1(up, x);
}

}  // namespace loewner
