#include "loewner/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

#include "loewner/errors.hpp"

namespace loewner {

namespace {

void require_positive_kappa(double kappa, const char* who) {
  if (!(kappa > 0)) {
    throw DomainError(std::string(who) + ": kappa must be > 0 (kappa = 0 is the spiral case)");
  }
}

}  // namespace

DriftlessPhases beta_driftless_phases(double p, double q, double kappa) {
  require_positive_kappa(kappa, "beta_driftless_phases");
  DriftlessPhases out;
  const double s4k = 4.0 + kappa;
  const double disc = s4k * s4k - 8.0 * kappa * p;
  out.tip_bulk_defined = disc >= 0.0;
  if (out.tip_bulk_defined) {
    const double root = std::sqrt(disc);
    out.beta_tip = -p - 1.0 + 0.25 * (s4k - root);
    out.beta0 = -p + s4k / (4.0 * kappa) * (s4k - root);
  }
  out.beta_lin = p - s4k * s4k / (16.0 * kappa);
  const double u = 1.0 + 2.0 * kappa * (p - q);
  out.beta1_defined = u >= 0.0;
  if (out.beta1_defined) {
    out.beta1 = p + 2.0 * (p - q) - 0.5 - 0.5 * std::sqrt(u);
  }
  return out;
}

std::array<double, 2> driftless_Q0(double kappa) {
  return {-1.0 - 3.0 * kappa / 8.0, -2.0 - 7.0 * kappa / 8.0};
}

std::array<double, 2> driftless_P0(double kappa) {
  return {3.0 * (4.0 + kappa) * (4.0 + kappa) / (32.0 * kappa),
          (4.0 + kappa) * (8.0 + kappa) / (16.0 * kappa)};
}

BranchPair beta1_complex_branches(MomentExponents pq, SleParams params) {
  require_positive_kappa(params.kappa, "beta1_complex");
  // The printed claim carries (1+ia)^2 here, but its own kappa->0 limit
  // (half-spiral beta1 with 1/(1-ia)) and the red-parabola perfect square
  // (1-ia-kappa alpha)^2 both require (1-ia)^2; see the consistency tests.
  const Complex w = Complex(1.0, -params.a) * Complex(1.0, -params.a) +
                    2.0 * params.kappa * (pq.p - pq.q);
  const double one_plus = 0.5 * (w.real() + std::abs(w));  // = (Re sqrt(w))^2 >= 0
  const double tau = (one_plus - 1.0) / (2.0 * params.kappa);
  const double root = std::sqrt(std::max(0.0, one_plus));
  BranchPair out;
  out.plus = {2.0 * tau + 0.5 - 0.5 * root + pq.p.real() - 1.0, Branch::BetaOnePlus, tau};
  out.minus = {2.0 * tau + 0.5 + 0.5 * root + pq.p.real() - 1.0, Branch::BetaOneMinus, tau};
  return out;
}

SpectrumResult beta1_complex(MomentExponents pq, SleParams params) {
  SpectrumResult res = beta1_complex_branches(pq, params).plus;
  res.branch = Branch::BetaOne;
  return res;
}

SpectrumResult beta1_real_drift(double p, double q, SleParams params) {
  require_positive_kappa(params.kappa, "beta1_real_drift");
  const double a2 = params.a * params.a;
  const double base = 1.0 - a2 + 2.0 * params.kappa * (p - q);
  const double one_plus = 0.5 * (base + std::sqrt(base * base + 4.0 * a2));
  const double tau = (one_plus - 1.0) / (2.0 * params.kappa);
  SpectrumResult res;
  res.tau = tau;
  res.beta = p + 2.0 * tau - 0.5 - 0.5 * std::sqrt(one_plus);
  res.branch = Branch::BetaOne;
  return res;
}

double pq_from_tau(double tau, SleParams params) {
  const double one_plus = 1.0 + 2.0 * params.kappa * tau;
  return tau * (1.0 + params.a * params.a / one_plus);
}

double tau_from_pq(double p_minus_q, SleParams params) {
  const double a2 = params.a * params.a;
  const double base = 1.0 - a2 + 2.0 * params.kappa * p_minus_q;
  const double one_plus = 0.5 * (base + std::sqrt(base * base + 4.0 * a2));
  return (one_plus - 1.0) / (2.0 * params.kappa);
}

BranchPair beta0_complex_branches(Complex p, double kappa) {
  require_positive_kappa(kappa, "beta0_complex");
  const double b_prime = (4.0 + kappa) * (4.0 + kappa) / (8.0 * kappa);
  const Complex w = b_prime - p;
  const double tau_bar = 0.5 * (w.real() + std::abs(w));
  const double root = 2.0 * std::sqrt(std::max(0.0, b_prime * tau_bar));
  BranchPair out;
  out.plus = {1.0 + 2.0 * tau_bar + root + p.real() - 1.0, Branch::BetaZeroPlus, tau_bar};
  out.minus = {1.0 + 2.0 * tau_bar - root + p.real() - 1.0, Branch::BetaZeroMinus, tau_bar};
  return out;
}

SpectrumResult beta0_complex(Complex p, double kappa) {
  SpectrumResult res = beta0_complex_branches(p, kappa).minus;
  res.branch = Branch::Bulk;
  return res;
}

RedParabolaPoint red_parabola(Complex alpha, SleParams params) {
  require_positive_kappa(params.kappa, "red_parabola");
  RedParabolaPoint pt;
  pt.alpha = alpha;
  pt.params = params;
  const double k = params.kappa;
  pt.pq.p = -k / 2.0 * alpha * alpha + (2.0 + k / 2.0) * alpha;
  pt.pq.q = pt.pq.p + (-k / 2.0 * alpha * alpha + Complex(1.0, -params.a) * alpha);
  pt.beta_bulk = 0.5 * k * std::norm(alpha);
  pt.tip_applies = 2.0 * alpha.real() <= -1.0;
  pt.beta_tip = pt.beta_bulk - 2.0 * alpha.real() - 1.0;
  return pt;
}

RedParabolaPoint red_parabola_real_point(SleParams params) {
  const double k = params.kappa;
  const Complex alpha =
      (4.0 + k) / (2.0 * k) * Complex(1.0, -2.0 * params.a / (2.0 + k));
  return red_parabola(alpha, params);
}

// ---- LQG helpers ----

LqgQuantities lqg_suite(double kappa, double a) {
  require_positive_kappa(kappa, "lqg_suite");
  LqgQuantities q;
  q.kappa = kappa;
  q.a = a;
  q.b = (4.0 - kappa) * (4.0 - kappa) / (8.0 * kappa);
  q.b_prime = (4.0 + kappa) * (4.0 + kappa) / (8.0 * kappa);
  q.c = 1.0 / (2.0 * kappa);
  q.x1 = (6.0 - kappa) * (2.0 - kappa) / (8.0 * kappa);
  q.x1_tilde = (6.0 - kappa) / (2.0 * kappa);
  q.t_tilde0 = -a / kappa;
  return q;
}

double lqg_U(double kappa, double x) { return 0.25 * x * (kappa * x + 4.0 - kappa); }

double lqg_U_inv(double kappa, double x) {
  const double disc = (4.0 - kappa) * (4.0 - kappa) + 16.0 * kappa * x;
  if (disc < 0) throw DomainError("lqg_U_inv: negative discriminant");
  return (kappa - 4.0 + std::sqrt(disc)) / (2.0 * kappa);
}

double lqg_V(double kappa, double x) {
  return (kappa * kappa * x * x - (4.0 - kappa) * (4.0 - kappa)) / (16.0 * kappa);
}

double lqg_x1_of_s(double kappa, double s) {
  return 2.0 * lqg_V(kappa, lqg_U_inv(kappa, s) + 2.0 / kappa);
}

double lqg_k_of_s(double kappa, double s) {
  // U_inv(x1_tilde) = 2/kappa
  return 1.0 + lqg_U_inv(kappa, s) * kappa / 2.0;
}

double lqg_x1hat(double kappa, double s, double t_tilde) {
  const double x1s = lqg_x1_of_s(kappa, s);
  const double b = (4.0 - kappa) * (4.0 - kappa) / (8.0 * kappa);
  return x1s - 0.25 * t_tilde * t_tilde / (x1s + b);
}

double lqg_tau(double kappa, double t, double t_tilde) {
  const double c = 1.0 / (2.0 * kappa);
  return 0.5 * (t - c + std::sqrt((t + c) * (t + c) + t_tilde * t_tilde));
}

double lqg_tau_drifted(double kappa, double a, double t, double t_tilde) {
  const double c = 1.0 / (2.0 * kappa);
  const double shift = a * a / (2.0 * kappa);
  const double dt = t_tilde + a / kappa;  // t_tilde - t_tilde0
  return 0.5 * (t - c - shift + std::sqrt((t + c - shift) * (t + c - shift) + dt * dt));
}

// ---- phase diagram ----

double drift_threshold_a0(double kappa) {
  if (!(kappa > 0 && kappa < 4)) throw DomainError("drift_threshold_a0: need 0 < kappa < 4");
  return 0.25 * (2.0 + kappa) / (4.0 - kappa);
}

double drift_threshold_a0_tilde(double kappa) {
  if (!(kappa > 4)) throw DomainError("drift_threshold_a0_tilde: need kappa > 4");
  return 0.125 * (8.0 + kappa) / (kappa - 4.0);
}

double translated_q0(SleParams params) {
  const double k = params.kappa;
  const double p0 = driftless_P0(k)[0];
  return p0 + (16.0 - k * k) / (32.0 * k) * (1.0 + 16.0 * params.a * params.a / (k * k));
}

namespace {

// Bisection for g(q) = 0 on a bracket found by outward scanning from q0;
// scanning clips itself back to the last finite point when it runs off the
// domain of g. Returns NaN when no sign change is found.
double solve_in_q(const std::function<double(double)>& g, double q0, double scan) {
  double g0 = g(q0);
  if (!std::isfinite(g0)) return std::nan("");
  double lo = q0, hi = q0, glo = g0, ghi = g0;
  double step = scan;
  for (int it = 0; it < 120 && glo * ghi > 0; ++it) {
    double cand_lo = lo - step;
    double cand_hi = hi + step;
    double gcl = g(cand_lo);
    double gch = g(cand_hi);
    if (std::isfinite(gcl)) {
      lo = cand_lo;
      glo = gcl;
    }
    if (std::isfinite(gch)) {
      hi = cand_hi;
      ghi = gch;
    }
    if (!std::isfinite(gcl) && !std::isfinite(gch)) step *= 0.5;
    else step *= 1.4;
  }
  if (!(glo * ghi <= 0)) return std::nan("");
  for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + std::fabs(lo)); ++it) {
    double mid = 0.5 * (lo + hi);
    double gm = g(mid);
    if (gm == 0) return mid;
    if (glo * gm <= 0) {
      hi = mid;
    } else {
      lo = mid;
      glo = gm;
    }
  }
  return 0.5 * (lo + hi);
}

// Equality point of a tangency-type locus (the difference is a perfect
// square, so it touches zero without changing sign): locate the minimizer by
// bisection on a central-difference derivative.
double solve_tangency(const std::function<double(double)>& g, double x0, double scan) {
  const double h = 1e-6;
  auto dg = [&](double x) { return (g(x + h) - g(x - h)) / (2.0 * h); };
  return solve_in_q(dg, x0, scan);
}

double beta1_driftless(double p, double q, double kappa) {
  const double u = 1.0 + 2.0 * kappa * (p - q);
  if (u < 0) return std::nan("");
  return p + 2.0 * (p - q) - 0.5 - 0.5 * std::sqrt(u);
}

}  // namespace

double driftless_green_locus_q(double p, double kappa) {
  DriftlessPhases ph = beta_driftless_phases(p, p, kappa);
  if (!ph.tip_bulk_defined) return std::nan("");
  auto g = [&](double q) { return beta1_driftless(p, q, kappa) - ph.beta0; };
  return solve_in_q(g, p, 0.5);
}

double drifted_green_locus_q(double p, SleParams params) {
  DriftlessPhases ph = beta_driftless_phases(p, p, params.kappa);
  if (!ph.tip_bulk_defined) return std::nan("");
  auto g = [&](double q) { return beta1_real_drift(p, q, params).beta - ph.beta0; };
  return solve_in_q(g, p, 0.5);
}

PhaseDiagram phase_diagram(SleParams params, double p_min, double p_max, int resolution) {
  require_positive_kappa(params.kappa, "phase_diagram");
  if (resolution < 16) throw DomainError("phase_diagram: resolution must be >= 16");
  const double k = params.kappa;
  PhaseDiagram pd;
  pd.params = params;
  pd.Q0 = driftless_Q0(k);
  pd.P0 = driftless_P0(k);
  pd.P0_translated = {pd.P0[0], translated_q0(params)};
  pd.P3 = {1.0 + 2.0 / k, (4.0 - k * k) / (2.0 * k)};

  const double ratio = params.a * params.a / (k * k);
  if (k < 4) {
    pd.a0 = drift_threshold_a0(k);
    pd.bisector1_enters_IV = ratio >= pd.a0;
  }
  if (k > 4) {
    pd.a0_tilde = drift_threshold_a0_tilde(k);
    pd.bisector2_enters_III = ratio >= pd.a0_tilde;
  }
  pd.sign_check1 = pd.P0_translated[1] - 2.0 * pd.P0[0] >= 0.0;
  pd.sign_check2 = pd.P0_translated[1] <= 0.0;

  auto transform_q = [&](double p, double q0) {
    if (params.a == 0) return q0;
    return p - pq_from_tau(p - q0, params);
  };

  auto add_locus = [&](const std::string& id, const std::string& left,
                       const std::string& right, double pa, double pb,
                       const std::function<double(double)>& locus_q, bool drifted_image) {
    PhaseCurve curve;
    curve.id = drifted_image ? id + "-drift" : id;
    curve.branch_left = left;
    curve.branch_right = right;
    for (int i = 0; i <= resolution; ++i) {
      double p = pa + (pb - pa) * double(i) / double(resolution);
      double q = locus_q(p);
      if (!std::isfinite(q)) {
        curve.issues.push_back("no bracket at p=" + std::to_string(p));
        continue;
      }
      if (drifted_image) q = transform_q(p, q);
      curve.points.push_back({p, q});
    }
    pd.curves.push_back(std::move(curve));
  };

  // driftless equality loci (and, for a != 0, their nonlinear-transform images)
  const double p_tip_hi = pd.Q0[0];
  const double p_par_lo = pd.Q0[0], p_par_hi = pd.P0[0];
  for (int pass = 0; pass < (params.a == 0 ? 1 : 2); ++pass) {
    bool drifted = pass == 1;
    if (p_min < p_tip_hi) {
      add_locus("tip-beta1-quartic", "tip", "beta1", p_min, p_tip_hi,
                [&](double p) {
                  DriftlessPhases ph = beta_driftless_phases(p, p, k);
                  if (!ph.tip_bulk_defined) return std::nan("");
                  return solve_in_q(
                      [&](double q) { return beta1_driftless(p, q, k) - ph.beta_tip; }, p, 0.5);
                },
                drifted);
    }
    add_locus("beta0-beta1-parabola", "beta0", "beta1", std::max(p_min, p_par_lo),
              std::min(p_max, p_par_hi),
              [&](double p) { return driftless_green_locus_q(p, k); }, drifted);
    if (p_max > pd.P0[0]) {
      // beta_lin = beta1 is a tangency: beta1 - beta_lin = (4s-kappa)^2/16kappa
      add_locus("lin-beta1-line", "lin", "beta1", pd.P0[0], p_max,
                [&](double p) {
                  return solve_tangency(
                      [&](double q) {
                        DriftlessPhases ph = beta_driftless_phases(p, q, k);
                        double b1 = beta1_driftless(p, q, k);
                        return std::isfinite(b1) ? b1 - ph.beta_lin : std::nan("");
                      },
                      p, 0.25);
                },
                drifted);
    }
    // beta0 = beta_lin is also a tangency; its locus is the vertical ray
    // above the triple point at p* minimizing beta0 - beta_lin.
    {
      double p_star = solve_tangency(
          [&](double p) {
            DriftlessPhases ph = beta_driftless_phases(p, p, k);
            return ph.tip_bulk_defined ? ph.beta0 - ph.beta_lin : std::nan("");
          },
          pd.P0[0], 0.25);
      if (!std::isfinite(p_star)) p_star = pd.P0[0];
      PhaseCurve curve;
      curve.id = drifted ? "beta0-lin-ray-drift" : "beta0-lin-ray";
      curve.branch_left = "beta0";
      curve.branch_right = "lin";
      double q_lo = pd.P0[1];
      double q_hi = pd.P0[1] + std::max(1.0, p_max - p_min);
      for (int i = 0; i <= resolution; ++i) {
        double q = q_lo + (q_hi - q_lo) * double(i) / double(resolution);
        double qq = drifted ? transform_q(p_star, q) : q;
        curve.points.push_back({p_star, qq});
      }
      pd.curves.push_back(std::move(curve));
    }
  }

  // static proof-domain reference lines (no validity claim)
  {
    PhaseCurve d2;
    d2.id = "ref-D2";
    d2.branch_left = d2.branch_right = "reference";
    PhaseCurve d1;
    d1.id = "ref-D1";
    d1.branch_left = d1.branch_right = "reference";
    for (int i = 0; i <= resolution; ++i) {
      double p = p_min + (p_max - p_min) * double(i) / double(resolution);
      d2.points.push_back({p, p - (1.0 + k / 2.0)});
      d1.points.push_back({p, p + (16.0 - k * k) / (32.0 * k)});
    }
    pd.curves.push_back(std::move(d2));
    pd.curves.push_back(std::move(d1));
  }
  return pd;
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_phase_csv(const PhaseDiagram& pd, std::ostream& os) {
  os << "# kappa: " << fmt17(pd.params.kappa) << " a: " << fmt17(pd.params.a) << "\n";
  os << "# P0: " << fmt17(pd.P0[0]) << ',' << fmt17(pd.P0[1])
     << " P0~: " << fmt17(pd.P0_translated[0]) << ',' << fmt17(pd.P0_translated[1])
     << " Q0: " << fmt17(pd.Q0[0]) << ',' << fmt17(pd.Q0[1]) << " P3: " << fmt17(pd.P3[0])
     << ',' << fmt17(pd.P3[1]) << "\n";
  os << "# bisector1_enters_IV: " << (pd.bisector1_enters_IV ? 1 : 0)
     << " bisector2_enters_III: " << (pd.bisector2_enters_III ? 1 : 0) << "\n";
  os << "p,q,curve_id,branch_left,branch_right\n";
  for (const PhaseCurve& c : pd.curves) {
    for (const auto& pt : c.points) {
      os << fmt17(pt[0]) << ',' << fmt17(pt[1]) << ',' << c.id << ',' << c.branch_left << ','
         << c.branch_right << "\n";
    }
  }
}

void write_phase_svg(const PhaseDiagram& pd, std::ostream& os) {
  double x_lo = 1e300, x_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
  for (const PhaseCurve& c : pd.curves) {
    for (const auto& pt : c.points) {
      x_lo = std::min(x_lo, pt[0]);
      x_hi = std::max(x_hi, pt[0]);
      y_lo = std::min(y_lo, pt[1]);
      y_hi = std::max(y_hi, pt[1]);
    }
  }
  if (x_lo > x_hi) {
    x_lo = y_lo = 0;
    x_hi = y_hi = 1;
  }
  const double W = 640, H = 480, m = 40;
  auto X = [&](double p) { return m + (p - x_lo) / (x_hi - x_lo) * (W - 2 * m); };
  auto Y = [&](double q) { return H - m - (q - y_lo) / (y_hi - y_lo) * (H - 2 * m); };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << W << ' ' << H
     << "\">\n";
  os << "<rect x=\"" << m << "\" y=\"" << m << "\" width=\"" << W - 2 * m << "\" height=\""
     << H - 2 * m << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (const PhaseCurve& c : pd.curves) {
    if (c.points.empty()) continue;
    os << "<path id=\"" << c.id << "\" fill=\"none\" stroke=\"black\" d=\"";
    for (size_t i = 0; i < c.points.size(); ++i) {
      os << (i == 0 ? 'M' : 'L') << X(c.points[i][0]) << ' ' << Y(c.points[i][1]);
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace loewner
