#include "loewner/moments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "json.hpp"
#include "loewner/parallel.hpp"
#include "loewner/rng.hpp"
#include "loewner/version.hpp"

namespace loewner {

double default_horizon(double r_max) { return 10.0 + 5.0 * std::log(1.0 / (1.0 - r_max)); }

namespace {

// |f'(z)^p (z/f(z))^q| from the tracked logs; log f' = T + log f~',
// log(f/z) = T + log(f~/z).
inline double integrand(const FlowState& s, double T, MomentExponents pq) {
  Complex log_fprime = Complex(T, 0) + s.log_deriv;
  Complex log_f_over_z = Complex(T, 0) + s.log_ratio;
  return std::exp((pq.p * log_fprime - pq.q * log_f_over_z).real());
}

}  // namespace

PointMomentResult estimate_moment_pointwise(const LevySymbol& symbol, MomentExponents pq,
                                            Complex z, int64_t n, const MomentOptions& opts,
                                            uint64_t seed) {
  if (std::abs(z) >= 1.0) throw DomainError("estimate_moment_pointwise: |z| must be < 1");
  const double T = opts.T > 0 ? opts.T : default_horizon(std::abs(z));

  struct Chunk {
    DoubleDouble sum, sum_sq;
    int64_t kept = 0, discarded = 0;
  };
  std::vector<Chunk> chunks(chunk_count(n, opts.chunk));

  parallel_chunks(n, opts.chunk, opts.threads, [&](int64_t c, int64_t b, int64_t e) {
    Chunk& acc = chunks[c];
    for (int64_t i = b; i < e; ++i) {
      DriverPath path = sample_path(symbol, T, opts.dt, mix64(seed, uint64_t(i)));
      EvolveOutcome out = integrate_reversed_flow(path, z, T, opts.evolve);
      if (out.blown_up) {
        ++acc.discarded;
        continue;
      }
      double x = integrand(out.state, T, pq);
      acc.sum.add(x);
      acc.sum_sq.add(x * x);
      ++acc.kept;
    }
  });

  DoubleDouble sum, sum_sq;
  int64_t kept = 0, discarded = 0;
  for (const Chunk& c : chunks) {
    sum.add(c.sum);
    sum_sq.add(c.sum_sq);
    kept += c.kept;
    discarded += c.discarded;
  }
  if (kept == 0) throw QualityError("estimate_moment_pointwise: all samples discarded");
  if (double(discarded) > opts.max_discard_frac * double(n)) {
    throw QualityError("estimate_moment_pointwise: discard rate above " +
                       std::to_string(opts.max_discard_frac));
  }

  PointMomentResult res;
  res.n = kept;
  res.discarded = discarded;
  res.T = T;
  res.mean = sum.value() / double(kept);
  double var = 0.0;
  if (kept > 1) {
    var = std::max(0.0, (sum_sq.value() - sum.value() * sum.value() / double(kept)) /
                            double(kept - 1));
  }
  res.stderr_ = std::sqrt(var / double(kept));
  return res;
}

BetaFit estimate_beta(const LevySymbol& symbol, MomentExponents pq,
                      const std::vector<double>& r_grid, int64_t n, const MomentOptions& opts,
                      uint64_t seed) {
  if (r_grid.size() < 4) throw DomainError("estimate_beta: need at least 4 radii");
  for (size_t i = 0; i < r_grid.size(); ++i) {
    if (!(r_grid[i] > 0 && r_grid[i] < 1)) throw DomainError("estimate_beta: radii in (0,1)");
    if (i > 0 && r_grid[i] <= r_grid[i - 1]) {
      throw DomainError("estimate_beta: radii must be strictly increasing");
    }
  }
  const size_t n_r = r_grid.size();
  const int n_theta = opts.n_theta;
  const double r_max = r_grid.back();
  const double T_max = opts.T > 0 ? opts.T : default_horizon(r_max);
  // shorter horizon suffices for inner radii
  std::vector<double> T_r(n_r);
  for (size_t j = 0; j < n_r; ++j) {
    T_r[j] = opts.T > 0 ? opts.T : std::min(T_max, default_horizon(r_grid[j]));
  }

  // Per path i, the circle integral I_i(r) = (2pi/n_theta) sum_theta X_i;
  // mean and variance over paths give M_hat and its stderr.
  struct Chunk {
    std::vector<DoubleDouble> sum_I, sum_I2;
    int64_t kept = 0, discarded = 0;
  };
  std::vector<Chunk> chunks(chunk_count(n, opts.chunk));

  parallel_chunks(n, opts.chunk, opts.threads, [&](int64_t c, int64_t b, int64_t e) {
    Chunk& acc = chunks[c];
    acc.sum_I.resize(n_r);
    acc.sum_I2.resize(n_r);
    std::vector<double> I(n_r);
    for (int64_t i = b; i < e; ++i) {
      DriverPath path = sample_path(symbol, T_max, opts.dt, mix64(seed, uint64_t(i)));
      bool ok = true;
      for (size_t j = 0; j < n_r && ok; ++j) {
        DoubleDouble circ;
        for (int t = 0; t < n_theta; ++t) {
          double theta = 2.0 * M_PI * double(t) / double(n_theta);
          Complex z = r_grid[j] * Complex(std::cos(theta), std::sin(theta));
          EvolveOutcome out = integrate_reversed_flow(path, z, T_r[j], opts.evolve);
          if (out.blown_up) {
            ok = false;
            break;
          }
          circ.add(integrand(out.state, T_r[j], pq));
        }
        I[j] = circ.value() * 2.0 * M_PI / double(n_theta);
      }
      if (!ok) {
        ++acc.discarded;
        continue;
      }
      for (size_t j = 0; j < n_r; ++j) {
        acc.sum_I[j].add(I[j]);
        acc.sum_I2[j].add(I[j] * I[j]);
      }
      ++acc.kept;
    }
  });

  int64_t kept = 0, discarded = 0;
  std::vector<DoubleDouble> sum_I(n_r), sum_I2(n_r);
  for (const Chunk& c : chunks) {
    if (c.sum_I.empty()) continue;
    kept += c.kept;
    discarded += c.discarded;
    for (size_t j = 0; j < n_r; ++j) {
      sum_I[j].add(c.sum_I[j]);
      sum_I2[j].add(c.sum_I2[j]);
    }
  }
  if (kept == 0) throw QualityError("estimate_beta: all samples discarded");
  if (double(discarded) > opts.max_discard_frac * double(n)) {
    throw QualityError("estimate_beta: discard rate above quality cap");
  }

  BetaFit fit;
  MomentEstimate& est = fit.estimate;
  est.pq = pq;
  est.symbol = symbol;
  est.r_grid = r_grid;
  est.n_samples = kept;
  est.discarded = discarded;
  est.seed = seed;
  est.dt = opts.dt;
  est.T = T_max;
  est.n_theta = n_theta;
  est.M_hat.resize(n_r);
  est.stderr_.resize(n_r);
  for (size_t j = 0; j < n_r; ++j) {
    est.M_hat[j] = sum_I[j].value() / double(kept);
    double var = 0.0;
    if (kept > 1) {
      var = std::max(0.0, (sum_I2[j].value() - sum_I[j].value() * sum_I[j].value() /
                                                   double(kept)) /
                              double(kept - 1));
    }
    est.stderr_[j] = std::sqrt(var / double(kept));
    if (!(est.M_hat[j] > 0)) throw QualityError("estimate_beta: non-positive M_hat");
    if (kept > 1 && est.stderr_[j] > opts.max_rel_stderr * est.M_hat[j]) {
      throw QualityError("estimate_beta: relative stderr above cap at r=" +
                         std::to_string(r_grid[j]));
    }
  }

  // regression over the asymptotic window
  std::vector<double> xs, ys;
  for (size_t j = 0; j < n_r; ++j) {
    if (1.0 - r_grid[j] <= opts.fit_window) {
      xs.push_back(std::log(1.0 / (1.0 - r_grid[j])));
      ys.push_back(std::log(est.M_hat[j]));
    }
  }
  if (xs.size() < 2) {
    // window too tight for this grid: fall back to all radii
    xs.clear();
    ys.clear();
    for (size_t j = 0; j < n_r; ++j) {
      xs.push_back(std::log(1.0 / (1.0 - r_grid[j])));
      ys.push_back(std::log(est.M_hat[j]));
    }
  }
  LinearFit lf = linear_fit(xs, ys);
  fit.beta_hat = lf.slope;
  fit.slope_stderr = lf.slope_stderr;
  fit.ci_low = lf.slope - 1.96 * lf.slope_stderr;
  fit.ci_high = lf.slope + 1.96 * lf.slope_stderr;
  return fit;
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_csv(const MomentEstimate& est, std::ostream& os) {
  os << "# loewner-lab " << kVersion << "\n";
  os << "# symbol: " << est.symbol.describe() << "\n";
  os << "# p: " << fmt17(est.pq.p.real()) << (est.pq.p.imag() < 0 ? "" : "+")
     << fmt17(est.pq.p.imag()) << "i q: " << fmt17(est.pq.q.real())
     << (est.pq.q.imag() < 0 ? "" : "+") << fmt17(est.pq.q.imag()) << "i\n";
  os << "# seed: " << est.seed << " dt: " << fmt17(est.dt) << " T: " << fmt17(est.T)
     << " n: " << est.n_samples << " n_theta: " << est.n_theta
     << " discarded: " << est.discarded << "\n";
  os << "r,M_hat,stderr\n";
  for (size_t j = 0; j < est.r_grid.size(); ++j) {
    os << fmt17(est.r_grid[j]) << ',' << fmt17(est.M_hat[j]) << ',' << fmt17(est.stderr_[j])
       << "\n";
  }
}

void write_json(const MomentEstimate& est, const BetaFit* fit, std::ostream& os) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["symbol"] = est.symbol.describe();
  j["p"] = {est.pq.p.real(), est.pq.p.imag()};
  j["q"] = {est.pq.q.real(), est.pq.q.imag()};
  j["seed"] = est.seed;
  j["dt"] = est.dt;
  j["T"] = est.T;
  j["n"] = est.n_samples;
  j["n_theta"] = est.n_theta;
  j["discarded"] = est.discarded;
  j["r"] = est.r_grid;
  j["M_hat"] = est.M_hat;
  j["stderr"] = est.stderr_;
  if (fit) {
    j["beta_hat"] = fit->beta_hat;
    j["ci"] = {fit->ci_low, fit->ci_high};
    j["slope_stderr"] = fit->slope_stderr;
  }
  os << j.dump(2) << "\n";
}

}  // namespace loewner
