#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace loewner {

using Complex = std::complex<double>;

// Compensated (double-double) accumulator. Addition order still matters for
// the final bits, so deterministic reductions must fix the order; this type
// keeps the rounding error itself negligible for ~1e9 summands.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  void add(double x) {
    // Knuth two-sum
    double s = hi + x;
    double bb = s - hi;
    double err = (hi - (s - bb)) + (x - bb);
    hi = s;
    lo += err;
  }
  void add(const DoubleDouble& o) {
    add(o.hi);
    lo += o.lo;
  }
  double value() const { return hi + lo; }
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
};

// Ordinary least squares y = slope*x + intercept with the usual
// residual-based standard error on the slope.
inline LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  const size_t n = x.size();
  double sx = 0, sy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / double(n), my = sy / double(n);
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (n > 2) {
    double ss_res = 0;
    for (size_t i = 0; i < n; ++i) {
      double r = y[i] - (fit.intercept + fit.slope * x[i]);
      ss_res += r * r;
    }
    fit.slope_stderr = std::sqrt(ss_res / double(n - 2) / sxx);
  }
  return fit;
}

// sin(pi*x) with exact argument reduction; avoids the catastrophic relative
// error of sin(M_PI*x) near integer x.
inline double sin_pi(double x) {
  double n = std::round(x);
  double z = x - n;  // exact for |x| < 2^52
  double s = std::sin(M_PI * z);
  return (std::fmod(std::fabs(n), 2.0) == 1.0) ? -s : s;
}

inline bool nearly_integer(double x, double tol = 1e-12) {
  return std::fabs(x - std::round(x)) <= tol;
}

}  // namespace loewner
