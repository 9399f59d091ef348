#pragma once

#include "loewner/errors.hpp"
#include "loewner/numeric.hpp"

namespace loewner {

// Gauss hypergeometric parameters; c must not be zero or a negative integer.
// a and b carry exactness flags so that exactly-integer inputs trigger the
// finite polynomial summation path.
struct HypergeometricParams {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;

  HypergeometricParams() = default;
  HypergeometricParams(double a_, double b_, double c_);

  bool a_is_nonpos_int() const { return a_exact_int_ && a <= 0.0; }
  bool b_is_nonpos_int() const { return b_exact_int_ && b <= 0.0; }

 private:
  bool a_exact_int_ = false;
  bool b_exact_int_ = false;
};

// Real Gamma function (Lanczos approximation, reflection for x < 0.5).
// Relative error <= ~1e-13 on [-50, 50] away from the poles at 0, -1, -2, ...
double gamma_fn(double x);

// 2F1(a,b;c;x) for real parameters and x in [0,1). Direct series with an
// Euler transformation fallback when c-a-b < 0 improves the term decay;
// non-positive-integer a or b truncates to the exact polynomial.
double hyp2f1(const HypergeometricParams& params, double x);

// Gauss summation at x=1: Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)).
// Requires c-a-b > 0.
double hyp2f1_at_one(const HypergeometricParams& params);

// (1-x)^(c-a-b) * 2F1(c-a, c-b; c; x); equals hyp2f1(a,b,c,x) identically.
double euler_transform(const HypergeometricParams& params, double x);

// d/dx 2F1(a,b;c;x) = (ab/c) 2F1(a+1,b+1;c+1;x).
double hyp2f1_derivative(const HypergeometricParams& params, double x);

}  // namespace loewner
