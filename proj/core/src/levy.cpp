#include "loewner/levy.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "loewner/rng.hpp"

namespace loewner {

LevySymbol LevySymbol::drifted_brownian(double kappa, double a) {
  if (kappa < 0) throw DomainError("LevySymbol: kappa must be >= 0");
  LevySymbol s;
  s.kind = Kind::DriftedBrownian;
  s.kappa = kappa;
  s.drift = a;
  return s;
}

LevySymbol LevySymbol::symmetric_stable(double alpha) {
  if (!(alpha > 0 && alpha <= 2)) throw DomainError("LevySymbol: alpha must be in (0,2]");
  LevySymbol s;
  s.kind = Kind::SymmetricStable;
  s.alpha = alpha;
  return s;
}

LevySymbol LevySymbol::brownian_plus_pi_jumps(double kappa, double rate) {
  if (kappa < 0 || rate < 0) throw DomainError("LevySymbol: kappa and rate must be >= 0");
  LevySymbol s;
  s.kind = Kind::BrownianPlusOddPiJumps;
  s.kappa = kappa;
  s.jump_rate = rate;
  return s;
}

Complex LevySymbol::eta(double xi) const {
  switch (kind) {
    case Kind::DriftedBrownian:
      return Complex(0.5 * kappa * xi * xi, -drift * xi);
    case Kind::SymmetricStable:
      return Complex(0.5 * std::pow(std::fabs(xi), alpha), 0.0);
    case Kind::BrownianPlusOddPiJumps:
      return Complex(0.5 * kappa * xi * xi + jump_rate * (1.0 - std::cos(M_PI * xi)), 0.0);
  }
  return {};
}

std::string LevySymbol::describe() const {
  char buf[128];
  switch (kind) {
    case Kind::DriftedBrownian:
      std::snprintf(buf, sizeof buf, "drifted-brownian kappa=%.17g a=%.17g", kappa, drift);
      break;
    case Kind::SymmetricStable:
      std::snprintf(buf, sizeof buf, "symmetric-stable alpha=%.17g", alpha);
      break;
    case Kind::BrownianPlusOddPiJumps:
      std::snprintf(buf, sizeof buf, "brownian-plus-pi-jumps kappa=%.17g rate=%.17g", kappa,
                    jump_rate);
      break;
  }
  return buf;
}

LevySymbol symbol_for_pair(double eta1, double eta2) {
  if (!(eta2 >= 0.0) || !(eta1 >= eta2 / 4.0)) {
    throw DomainError("symbol_for_pair: need eta1 >= eta2/4 >= 0");
  }
  return LevySymbol::brownian_plus_pi_jumps(eta2 / 2.0, (eta1 - eta2 / 4.0) / 2.0);
}

void DriverPath::write_csv(std::ostream& os) const {
  char buf[64];
  os << "t,L_t\n";
  for (size_t k = 0; k < values.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", dt * double(k), values[k]);
    os << buf;
  }
}

DriverPath sample_path(const LevySymbol& symbol, double T, double dt, uint64_t seed) {
  if (!(dt > 0) || !(T > 0) || dt > T * (1 + 1e-12)) {
    throw DomainError("sample_path: need 0 < dt <= T");
  }
  size_t steps = size_t(std::llround(T / dt));
  if (steps == 0) steps = 1;

  DriverPath path;
  path.dt = dt;
  path.seed = seed;
  path.values.resize(steps + 1);
  path.values[0] = 0.0;

  RandomStream rng(seed);
  double level = 0.0;
  switch (symbol.kind) {
    case LevySymbol::Kind::DriftedBrownian: {
      const double sigma = std::sqrt(symbol.kappa * dt);
      const double mu = symbol.drift * dt;
      for (size_t k = 1; k <= steps; ++k) {
        level += mu + (sigma > 0 ? sigma * rng.normal() : 0.0);
        path.values[k] = level;
      }
      break;
    }
    case LevySymbol::Kind::SymmetricStable: {
      // scale so that E[exp(i xi L_dt)] = exp(-dt |xi|^alpha / 2)
      const double scale = std::pow(0.5 * dt, 1.0 / symbol.alpha);
      for (size_t k = 1; k <= steps; ++k) {
        level += scale * rng.stable_symmetric(symbol.alpha);
        path.values[k] = level;
      }
      break;
    }
    case LevySymbol::Kind::BrownianPlusOddPiJumps: {
      // Compound Poisson of +-pi jumps, total intensity = rate, fair signs:
      // symbol contribution rate*(1 - cos(pi xi)).
      const double sigma = std::sqrt(symbol.kappa * dt);
      const double lambda = symbol.jump_rate * dt;
      for (size_t k = 1; k <= steps; ++k) {
        if (sigma > 0) level += sigma * rng.normal();
        int jumps = rng.poisson(lambda);
        for (int j = 0; j < jumps; ++j) {
          level += (rng.uniform() < 0.5) ? M_PI : -M_PI;
        }
        path.values[k] = level;
      }
      break;
    }
  }
  return path;
}

}  // namespace loewner
