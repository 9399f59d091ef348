#include "loewner/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace loewner {

namespace {

// Kronrod-15 nodes (positive half) and weights; Gauss-7 weights on the
// shared nodes (odd Kronrod indices).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double integral;
  double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fc = f(c);
  double res_g = fc * kWg[3];
  double res_k = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    double x = h * kXgk[j];
    double f1 = f(c - x), f2 = f(c + x);
    res_k += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) res_g += kWg[j / 2] * (f1 + f2);
  }
  return {res_k * h, std::fabs((res_k - res_g) * h)};
}

void refine(const std::function<double(double)>& f, double a, double b, double tol_per_len,
            double total_len, int depth, int max_depth, double& acc, double& err_acc,
            int& depth_used) {
  Panel p = gk15(f, a, b);
  double tol = tol_per_len * (b - a) / total_len;
  if (p.error <= tol || depth >= max_depth) {
    if (p.error > tol && depth >= max_depth) {
      throw QualityError("adaptive_gk15: refinement stalled at max depth");
    }
    acc += p.integral;
    err_acc += p.error;
    depth_used = std::max(depth_used, depth);
    return;
  }
  double m = 0.5 * (a + b);
  refine(f, a, m, tol_per_len, total_len, depth + 1, max_depth, acc, err_acc, depth_used);
  refine(f, m, b, tol_per_len, total_len, depth + 1, max_depth, acc, err_acc, depth_used);
}

}  // namespace

QuadResult adaptive_gk15(const std::function<double(double)>& f, double a, double b,
                         double rel_tol, double abs_tol, int max_depth) {
  Panel whole = gk15(f, a, b);
  double tol = std::max(abs_tol, rel_tol * std::fabs(whole.integral));
  QuadResult out;
  refine(f, a, b, tol, b - a, 0, max_depth, out.value, out.error, out.max_depth_used);
  return out;
}

}  // namespace loewner
