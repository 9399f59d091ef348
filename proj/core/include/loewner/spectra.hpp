#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "loewner/types.hpp"

namespace loewner {

// ---- driftless SLE generalized spectrum: the four closed forms ----

struct DriftlessPhases {
  double beta_tip = 0.0;
  double beta0 = 0.0;
  double beta_lin = 0.0;
  double beta1 = 0.0;
  bool tip_bulk_defined = false;  // (4+kappa)^2 - 8 kappa p >= 0
  bool beta1_defined = false;     // 1 + 2 kappa (p-q) >= 0
};

DriftlessPhases beta_driftless_phases(double p, double q, double kappa);

// Separatrix endpoints Q0 and P0 of the driftless phase diagram.
std::array<double, 2> driftless_Q0(double kappa);
std::array<double, 2> driftless_P0(double kappa);

// ---- beta_1 for complex exponents and drift ----

struct BranchPair {
  SpectrumResult plus;
  SpectrumResult minus;
};

// 1+2kappa tau = (Re sqrt((1-ia)^2 + 2kappa(p-q)))^2 via the identity
// (Re z)^2 = (Re(z^2)+|z^2|)/2; beta1^+- = 2tau + 1/2 -+ sqrt(1+2kappa tau)/2
// + Re p - 1. The physical spectrum is the (+) branch.
BranchPair beta1_complex_branches(MomentExponents pq, SleParams params);
SpectrumResult beta1_complex(MomentExponents pq, SleParams params);

// Real-moment drifted form: 1+2kappa tau =
// (1-a^2+2kappa(p-q) + sqrt([1-a^2+2kappa(p-q)]^2+4a^2))/2.
SpectrumResult beta1_real_drift(double p, double q, SleParams params);

// Inversion p-q = tau (1 + a^2/(1+2 kappa tau)).
double pq_from_tau(double tau, SleParams params);
double tau_from_pq(double p_minus_q, SleParams params);

// ---- complex bulk spectrum beta_0 and its branches ----

BranchPair beta0_complex_branches(Complex p, double kappa);
SpectrumResult beta0_complex(Complex p, double kappa);  // physical (-) branch

// ---- the integrable complex red parabola ----

struct RedParabolaPoint {
  Complex alpha;
  MomentExponents pq;
  SleParams params;
  double beta_bulk = 0.0;     // kappa |alpha|^2 / 2
  bool tip_applies = false;   // 2 Re alpha <= -1
  double beta_tip = 0.0;      // kappa |alpha|^2/2 - 2 Re alpha - 1 when it applies
};

RedParabolaPoint red_parabola(Complex alpha, SleParams params);

// Real red-parabola point of the corollary: spectrum beta(p,q) = p.
RedParabolaPoint red_parabola_real_point(SleParams params);

// ---- Liouville-quantum-gravity helper suite ----

struct LqgQuantities {
  double kappa = 0.0, a = 0.0;
  double b = 0.0;        // (4-kappa)^2 / 8 kappa
  double b_prime = 0.0;  // (4+kappa)^2 / 8 kappa
  double c = 0.0;        // 1 / 2 kappa
  double x1 = 0.0;       // (6-kappa)(2-kappa) / 8 kappa
  double x1_tilde = 0.0; // (6-kappa) / 2 kappa
  double t_tilde0 = 0.0; // -a / kappa
};

LqgQuantities lqg_suite(double kappa, double a);

double lqg_U(double kappa, double x);
double lqg_U_inv(double kappa, double x);
double lqg_V(double kappa, double x);
double lqg_x1_of_s(double kappa, double s);
double lqg_k_of_s(double kappa, double s);
double lqg_x1hat(double kappa, double s, double t_tilde);
// tau(t, t~), (+) branch; driftless and drift-recentered versions.
double lqg_tau(double kappa, double t, double t_tilde);
double lqg_tau_drifted(double kappa, double a, double t, double t_tilde);

// ---- phase diagram machinery ----

// Drift thresholds: first bisector (q=2p) enters phase IV iff
// a^2/kappa^2 >= a0(kappa) (kappa < 4); second bisector (q=0) enters III iff
// a^2/kappa^2 >= a0_tilde(kappa) (kappa > 4).
double drift_threshold_a0(double kappa);        // (2+kappa)/(4(4-kappa)), kappa < 4
double drift_threshold_a0_tilde(double kappa);  // (8+kappa)/(8(kappa-4)), kappa > 4
double translated_q0(SleParams params);         // q~0 of the shifted P0

struct PhaseCurve {
  std::string id;
  std::string branch_left;
  std::string branch_right;
  std::vector<std::array<double, 2>> points;  // (p, q)
  std::vector<std::string> issues;            // root-finding failures per segment
};

struct PhaseDiagram {
  SleParams params;
  std::vector<PhaseCurve> curves;
  std::array<double, 2> Q0{}, P0{}, P0_translated{}, P3{};
  double a0 = 0.0, a0_tilde = 0.0;
  bool bisector1_enters_IV = false;   // condition (a/kappa)^2 >= a0, kappa < 4
  bool bisector2_enters_III = false;  // condition (a/kappa)^2 >= a0_tilde, kappa > 4
  bool sign_check1 = false;           // q~0 - 2 p0 >= 0 (geometric version)
  bool sign_check2 = false;           // q~0 <= 0
};

// Equality loci of the driftless forms, their images under the drift
// transform, and the static proof-domain reference lines.
PhaseDiagram phase_diagram(SleParams params, double p_min, double p_max, int resolution);

// Direct drifted equality locus beta0(p) = beta1(p, q; kappa, a), solved in q.
double drifted_green_locus_q(double p, SleParams params);
// Driftless locus beta0(p) = beta1(p, q; kappa, 0), solved in q.
double driftless_green_locus_q(double p, double kappa);

void write_phase_csv(const PhaseDiagram& pd, std::ostream& os);
void write_phase_svg(const PhaseDiagram& pd, std::ostream& os);

}  // namespace loewner
