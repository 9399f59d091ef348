#pragma once

#include <string>

#include "loewner/numeric.hpp"

namespace loewner {

// Complex pair (p,q) indexing the mixed moments E[|f'(z)^p (z/f(z))^q|].
struct MomentExponents {
  Complex p;
  Complex q;
};

// kappa >= 0 and drift a of the driving function exp(i(sqrt(kappa) B_t + a t)).
struct SleParams {
  double kappa = 0.0;
  double a = 0.0;
};

enum class Branch {
  Tip,        // -Re p - 1 type singularity at the trace tip
  Bulk,       // rectifiable-bulk / zero candidate
  Linear,     // beta_lin
  BetaOne,    // beta_1 (physical + branch)
  BetaTwo,    // spiral dual exponent (singularity at infinity <-> origin swap)
  BetaZeroPlus,
  BetaZeroMinus,
  BetaOnePlus,
  BetaOneMinus,
};

inline const char* branch_name(Branch b) {
  switch (b) {
    case Branch::Tip: return "tip";
    case Branch::Bulk: return "bulk";
    case Branch::Linear: return "lin";
    case Branch::BetaOne: return "beta1";
    case Branch::BetaTwo: return "beta2";
    case Branch::BetaZeroPlus: return "beta0+";
    case Branch::BetaZeroMinus: return "beta0-";
    case Branch::BetaOnePlus: return "beta1+";
    case Branch::BetaOneMinus: return "beta1-";
  }
  return "?";
}

// A spectrum value together with the analytic form that attains it and, where
// meaningful, the reduced variable tau it was computed from.
struct SpectrumResult {
  double beta = 0.0;
  Branch branch = Branch::Bulk;
  double tau = 0.0;
};

}  // namespace loewner
