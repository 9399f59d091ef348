#include <array>
#include <cmath>
#include <utility>

#include "loewner/fuchsian.hpp"

namespace loewner {

// ---- Rational helpers ----

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw DomainError("parse_rational: zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError("parse_rational: malformed rational '" + text + "'");
  }
}

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  BigInt num = numerator(r), den = denominator(r);
  BigInt sn = sqrt(num), sd = sqrt(den);
  if (sn * sn == num && sd * sd == den) return Rational(sn, sd);
  return std::nullopt;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

// ---- QuadExt ----

QuadExt::QuadExt(Rational a, Rational b, Rational d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ < 0) throw DomainError("QuadExt: negative radicand");
  if (b_ == 0) d_ = 0;
  fold_square_radicand();
}

void QuadExt::fold_square_radicand() {
  if (b_ == 0 || d_ == 0) {
    if (d_ == 0) a_ += b_ * 0;  // b*sqrt(0) = 0
    b_ = 0;
    d_ = 0;
    return;
  }
  if (auto root = exact_sqrt(d_)) {
    a_ += b_ * *root;
    b_ = 0;
    d_ = 0;
  }
}

void QuadExt::check_compatible(const QuadExt& o) const {
  if (b_ != 0 && o.b_ != 0 && d_ != o.d_) {
    throw DomainError("QuadExt: mixed radicands " + d_.str() + " and " + o.d_.str());
  }
}

Rational QuadExt::as_rational() const {
  if (b_ != 0) throw DomainError("QuadExt::as_rational: value has a radical part");
  return a_;
}

double QuadExt::to_double() const {
  double v = loewner::to_double(a_);
  if (b_ != 0) v += loewner::to_double(b_) * std::sqrt(loewner::to_double(d_));
  return v;
}

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  check_compatible(o);
  a_ += o.a_;
  b_ += o.b_;
  if (d_ == 0) d_ = o.d_;
  if (b_ == 0) d_ = 0;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  check_compatible(o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (d_ == 0) d_ = o.d_;
  if (b_ == 0) d_ = 0;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  check_compatible(o);
  Rational d = d_ != 0 ? d_ : o.d_;
  Rational na = a_ * o.a_ + b_ * o.b_ * d;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  d_ = nb == 0 ? Rational(0) : d;
  if (b_ == 0) d_ = 0;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  check_compatible(o);
  if (o.is_zero()) throw DomainError("QuadExt: division by zero");
  Rational d = d_ != 0 ? d_ : o.d_;
  // multiply by the conjugate of o
  Rational denom = o.a_ * o.a_ - o.b_ * o.b_ * d;
  if (denom == 0) throw DomainError("QuadExt: division by zero norm");
  Rational na = (a_ * o.a_ - b_ * o.b_ * d) / denom;
  Rational nb = (b_ * o.a_ - a_ * o.b_) / denom;
  a_ = std::move(na);
  b_ = std::move(nb);
  d_ = b_ == 0 ? Rational(0) : d;
  return *this;
}

std::string QuadExt::to_string() const {
  if (b_ == 0) return rational_to_string(a_);
  return rational_to_string(a_) + " + (" + rational_to_string(b_) + ")*sqrt(" +
         rational_to_string(d_) + ")";
}

// ---- exact recursion machinery ----

namespace {

using Vec3 = std::array<QuadExt, 3>;
using Mat3 = std::array<std::array<QuadExt, 3>, 3>;

// D_0(alpha); D_k(alpha) = D_0(alpha - k).
Mat3 matrix_D0(const QuadExt& alpha, const Rational& q, const Rational& eta1) {
  QuadExt z = Rational(0);
  Mat3 m;
  m[0] = {-(alpha + QuadExt(q - 3)), QuadExt(q - 2), z};
  m[1] = {QuadExt(eta1 + q - 3), QuadExt(Rational(-2)) * (QuadExt(eta1 + q - 3) + alpha),
          QuadExt(eta1 + q - 1)};
  m[2] = {z, QuadExt(Rational(-4)), QuadExt(Rational(-2)) * (alpha - QuadExt(Rational(3)))};
  return m;
}

// C_0(alpha); C_k(alpha) = C_0(alpha - k).
Mat3 matrix_C0(const QuadExt& alpha, const Rational& q, const Rational& eta1) {
  QuadExt z = Rational(0);
  Mat3 m;
  m[0] = {z, z, z};
  m[1] = {z, -(QuadExt(eta1 + 2 * q - 7) + QuadExt(Rational(2)) * alpha),
          QuadExt(eta1 + q - 1)};
  m[2] = {z, z, -(QuadExt(q - 8) + QuadExt(Rational(2)) * alpha)};
  return m;
}

Vec3 mat_vec(const Mat3& m, const Vec3& v) {
  Vec3 r;
  for (int i = 0; i < 3; ++i) {
    r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  }
  return r;
}

QuadExt det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Exact Gaussian elimination of [M | b]. Returns pivot column list and the
// reduced augmented matrix; used for both unique and rank-deficient solves.
struct Eliminated {
  std::array<std::array<QuadExt, 4>, 3> rows;
  std::vector<int> pivot_cols;
  bool consistent = true;
};

Eliminated eliminate(const Mat3& m, const Vec3& b) {
  Eliminated e;
  for (int i = 0; i < 3; ++i) {
    e.rows[i] = {m[i][0], m[i][1], m[i][2], b[i]};
  }
  int r = 0;
  for (int c = 0; c < 3 && r < 3; ++c) {
    int pr = -1;
    for (int i = r; i < 3; ++i) {
      if (!e.rows[i][c].is_zero()) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(e.rows[r], e.rows[pr]);
    for (int i = 0; i < 3; ++i) {
      if (i == r || e.rows[i][c].is_zero()) continue;
      QuadExt f = e.rows[i][c] / e.rows[r][c];
      for (int j = c; j < 4; ++j) e.rows[i][j] -= f * e.rows[r][j];
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  for (int i = r; i < 3; ++i) {
    if (!e.rows[i][3].is_zero()) e.consistent = false;
  }
  return e;
}

// Solve M x = b; free variables (notably x[2] at the handled degeneracy) are
// set to zero, which is exactly the closure-compatible particular solution.
struct SolveResult {
  Vec3 x;
  bool unique = false;
  bool consistent = true;
};

SolveResult solve3(const Mat3& m, const Vec3& b) {
  Eliminated e = eliminate(m, b);
  SolveResult res;
  res.consistent = e.consistent;
  if (!e.consistent) return res;
  res.unique = e.pivot_cols.size() == 3;
  for (auto& x : res.x) x = Rational(0);
  for (int i = int(e.pivot_cols.size()) - 1; i >= 0; --i) {
    int c = e.pivot_cols[i];
    QuadExt s = e.rows[i][3];
    for (int j = c + 1; j < 3; ++j) s -= e.rows[i][j] * res.x[j];
    res.x[c] = s / e.rows[i][c];
  }
  return res;
}

// Nonzero kernel vector of a singular matrix.
Vec3 kernel_vector(const Mat3& m) {
  Vec3 zero{Rational(0), Rational(0), Rational(0)};
  Eliminated e = eliminate(m, zero);
  if (e.pivot_cols.size() == 3) {
    throw SingularityError("kernel_vector: matrix is invertible");
  }
  int free_col = 0;
  for (int c = 0; c < 3; ++c) {
    bool pivot = false;
    for (int pc : e.pivot_cols) pivot |= (pc == c);
    if (!pivot) {
      free_col = c;
      break;
    }
  }
  Vec3 x{Rational(0), Rational(0), Rational(0)};
  x[free_col] = Rational(1);
  for (int i = int(e.pivot_cols.size()) - 1; i >= 0; --i) {
    int c = e.pivot_cols[i];
    QuadExt s = Rational(0);
    for (int j = c + 1; j < 3; ++j) s -= e.rows[i][j] * x[j];
    x[c] = s / e.rows[i][c];
  }
  return x;
}

}  // namespace

Rational Z_exact(const Rational& eta1, const Rational& q) {
  return eta1 * eta1 - 2 * (2 - q) * (eta1 + q - 3);
}

Rational Zhat_exact(const Rational& eta1, const Rational& q) {
  return (eta1 - 2) * (eta1 - 2) + 2 * q * (eta1 + q - 3);
}

RecursionState build_recursion_mq(const Rational& q, const Rational& eta1, int n) {
  if (n < 0) throw DomainError("build_recursion_mq: n >= 0");
  if (!(q <= 0) || !(eta1 >= -q / 4)) {
    throw DomainError("build_recursion_mq: (q, eta1) outside D_{-q}");
  }
  RecursionState st;
  st.n = n;
  st.q = q;
  st.eta1 = eta1;
  st.Zhat = Zhat_exact(eta1, q);
  if (st.Zhat < 0) throw DomainError("build_recursion_mq: Zhat < 0");
  QuadExt root = QuadExt::sqrt_of(st.Zhat);
  QuadExt half(Rational(1, 2));
  st.alpha_plus = QuadExt(3 - q) + half * (QuadExt(Rational(2) - eta1) + root);
  st.alpha_minus = QuadExt(3 - q) + half * (QuadExt(Rational(2) - eta1) - root);

  const QuadExt& alpha = st.alpha_plus;
  st.coeff.resize(n + 1);
  st.coeff[0] = kernel_vector(matrix_D0(alpha, q, eta1));

  for (int k = 1; k <= n; ++k) {
    QuadExt shifted = alpha - QuadExt(Rational(k));
    Mat3 Dk = matrix_D0(shifted, q, eta1);
    Vec3 rhs = mat_vec(matrix_C0(alpha - QuadExt(Rational(k - 1)), q, eta1), st.coeff[k - 1]);
    SolveResult sol = solve3(Dk, rhs);
    if (sol.unique) {
      st.coeff[k] = sol.x;
      continue;
    }
    // eigenvalue collision: det D_k = 0 means alpha+ - k is alpha- or 1
    bool pm_collision = shifted == st.alpha_minus;
    bool unit_collision = shifted == QuadExt(Rational(1));
    if (pm_collision && !unit_collision && k == 1 && n == 1) {
      // the explicit particular solution on the first ellipse: solve the
      // rank-deficient system with the closure-compatible choice A_2^1 = 0
      if (!sol.consistent) {
        throw SingularityError("build_recursion_mq: inconsistent degenerate level k=1");
      }
      st.coeff[1] = sol.x;
      st.used_particular_k1 = true;
      st.notes.push_back("singular D_1 (alpha+-1 = alpha-); particular solution with A_2^1 = 0");
      continue;
    }
    std::string which = pm_collision ? "alpha+ - k = alpha-" : "alpha+ - k = 1";
    throw SingularityError("build_recursion_mq: unhandled eigenvalue collision at k=" +
                           std::to_string(k) + " (" + which + ")");
  }

  // normalize theta_0(0) = sum_k A_0^k = 1
  QuadExt total = Rational(0);
  for (auto& v : st.coeff) total += v[0];
  if (total.is_zero()) {
    throw SingularityError("build_recursion_mq: normalization sum is zero");
  }
  for (auto& v : st.coeff) {
    for (auto& x : v) x /= total;
  }
  return st;
}

ClosureVerdict verify_closure_on_ellipse(int n, const Rational& q, const Rational& eta1) {
  if (n < 1) throw DomainError("verify_closure_on_ellipse: n >= 1");
  Rational lhs = (q - 1) * (q - 1) + (eta1 + q - 2) * (eta1 + q - 2);
  Rational rhs = Rational((2 * n - 1) * (2 * n - 1) + 1);
  if (lhs != rhs) {
    throw DomainError("verify_closure_on_ellipse: point not exactly on the ellipse");
  }
  ClosureVerdict v;
  v.state = build_recursion_mq(q, eta1, n);
  // on the ellipse sqrt(Zhat) = 2n-1, so alpha+ is rational
  v.beta = v.state.alpha_plus.as_rational();
  QuadExt bracket = QuadExt(Rational(2 * n)) -
                    (QuadExt(eta1 + 2 * q - 7) + QuadExt(Rational(2)) * v.state.alpha_plus);
  v.bracket_vanishes = bracket.is_zero();
  v.a2n_zero = v.state.coeff[n][2].is_zero();
  v.closed = v.bracket_vanishes && v.a2n_zero;
  return v;
}

FalsifyResult falsify_alternative_condition(int n, const Rational& q) {
  if (n < 1) throw DomainError("falsify_alternative_condition: n >= 1");
  FalsifyResult out;
  out.q = q;
  out.eta1 = 1 - q + q * (q - 2) / (4 * (n + 1)) - n;
  if (!(q <= 0) || !(out.eta1 >= -q / 4)) {
    throw DomainError("falsify_alternative_condition: point outside D_{-q}");
  }
  // on this curve Zhat = (2n + q + eta1)^2 exactly, (+)-branch
  Rational s = 2 * n + q + out.eta1;
  if (Zhat_exact(out.eta1, q) != s * s) {
    throw DomainError("falsify_alternative_condition: branch selection failed");
  }
  out.state = build_recursion_mq(q, out.eta1, n);
  QuadExt w = QuadExt(out.eta1 + q + 1) * out.state.coeff[n][1] -
              QuadExt(out.eta1 + q - 1) * out.state.coeff[n][2];
  out.witness = w.as_rational();
  out.no_further_solution = out.witness != 0;
  return out;
}

std::vector<std::pair<Rational, Rational>> rational_ellipse_points(int n, int count,
                                                                   bool skip_exceptional) {
  std::vector<std::pair<Rational, Rational>> pts;
  const Rational w(2 * n - 1);
  for (int num = 1; num <= 400 && int(pts.size()) < count; ++num) {
    for (int den = 1; den <= 40 && int(pts.size()) < count; ++den) {
      for (int sign = 1; sign >= -1 && int(pts.size()) < count; sign -= 2) {
        Rational t(sign * num, den);
        Rational s = -2 * (w + t) / (1 + t * t);
        if (s == 0) continue;
        Rational X = w + s;
        Rational Y = 1 + t * s;
        Rational q = X + 1;
        Rational eta1 = Y - q + 2;
        if (!(q <= 0) || !(eta1 >= -q / 4)) continue;
        bool dup = false;
        for (auto& p : pts) dup |= (p.first == q && p.second == eta1);
        if (dup) continue;
        if (skip_exceptional) {
          // alpha+ = 3 - q + (2 - eta1 + (2n-1))/2 rational here; drop points
          // where alpha+ - k = 1 for some k in 1..n (unhandled collision)
          Rational alpha = 3 - q + (2 - eta1 + w) / 2;
          bool bad = false;
          for (int k = 1; k <= n; ++k) bad |= (alpha - k == 1);
          // also avoid eta1+q-1 = 0 (the A_2^n coefficient in eq7 degenerates)
          bad |= (eta1 + q - 1 == 0);
          if (bad) continue;
        }
        pts.emplace_back(q, eta1);
      }
    }
  }
  return pts;
}

// ---- exact determinants ----

Rational det_D0_exact(const Rational& alpha, const Rational& q, const Rational& eta1) {
  Mat3 m = matrix_D0(QuadExt(alpha), q, eta1);
  return det3(m).as_rational();
}

Rational det_D0_factored(const Rational& alpha, const Rational& q, const Rational& eta1) {
  Rational E0 = 2 * (alpha + q - 3) * (eta1 + alpha + q - 5) - q * (eta1 + q - 3);
  return 2 * (1 - alpha) * E0;
}

Rational det_B_minus_alpha_exact(const Rational& alpha, const Rational& q,
                                 const Rational& eta1) {
  // B = (1/2) [[2(3-q), 2(q-2), 0],
  //            [eta1+q-3, -2(eta1+q-3), eta1+q-1],
  //            [0, -4, 6]]
  std::array<std::array<Rational, 3>, 3> b{{{Rational(3 - q), Rational(q - 2), Rational(0)},
                                            {(eta1 + q - 3) / 2, -(eta1 + q - 3), (eta1 + q - 1) / 2},
                                            {Rational(0), Rational(-2), Rational(3)}}};
  for (int i = 0; i < 3; ++i) b[i][i] -= alpha;
  return b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
         b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
         b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
}

}  // namespace loewner
