#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "loewner/errors.hpp"
#include "loewner/numeric.hpp"

namespace loewner {

// Symmetric / drifted Levy symbols eta(xi) with E[exp(i xi L_t)] = exp(-t eta(xi)).
struct LevySymbol {
  enum class Kind { DriftedBrownian, SymmetricStable, BrownianPlusOddPiJumps };

  Kind kind = Kind::DriftedBrownian;
  double kappa = 0.0;      // Brownian variance coefficient (variants 1 and 3)
  double drift = 0.0;      // drift a (DriftedBrownian only)
  double alpha = 2.0;      // stability index (SymmetricStable only)
  double jump_rate = 0.0;  // symbol coefficient of (1 - cos(pi xi)) (variant 3)

  static LevySymbol drifted_brownian(double kappa, double a);
  static LevySymbol symmetric_stable(double alpha);
  static LevySymbol brownian_plus_pi_jumps(double kappa, double rate);

  Complex eta(double xi) const;
  double eta1() const { return eta(1.0).real(); }
  double eta2() const { return eta(2.0).real(); }

  std::string describe() const;
};

// Realizes a prescribed (eta1, eta2) with eta1 >= eta2/4 >= 0 as Brownian
// motion of variance eta2/2 plus +-pi jumps: kappa = eta2/2,
// rate = (eta1 - eta2/4)/2. eta1 = eta2/4 is pure SLE, eta2 = 0 pure jump.
LevySymbol symbol_for_pair(double eta1, double eta2);

// Driving process sampled on the uniform grid t = k*dt, k = 0..K, L_0 = 0.
struct DriverPath {
  double dt = 0.0;
  std::vector<double> values;
  uint64_t seed = 0;

  double horizon() const { return dt * double(values.size() - 1); }
  size_t steps() const { return values.size() - 1; }
  Complex lambda(size_t k) const {
    return Complex(std::cos(values[k]), std::sin(values[k]));
  }
  void write_csv(std::ostream& os) const;  // columns: t, L_t
};

// Independent stationary increments per step, distributed as L_dt for the
// given symbol. Bit-identical for identical (symbol, T, dt, seed).
DriverPath sample_path(const LevySymbol& symbol, double T, double dt, uint64_t seed);

}  // namespace loewner
