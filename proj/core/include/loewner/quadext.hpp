#pragma once

#include <string>

#include "loewner/rational.hpp"

namespace loewner {

// Exact element a + b*sqrt(d) of the quadratic extension Q(sqrt(d)), d a
// fixed non-negative rational radicand shared within a computation. When d
// is a perfect square the value is folded into the rational part, so the
// common case d = (2n-1)^2 runs in plain Q.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational rational) : a_(std::move(rational)) {}  // NOLINT: implicit by design
  QuadExt(Rational a, Rational b, Rational d);

  static QuadExt sqrt_of(const Rational& d) { return QuadExt(0, 1, d); }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coeff() const { return b_; }
  const Rational& radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  // Exact conversion; throws if a radical part remains.
  Rational as_rational() const;
  double to_double() const;

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt l, const QuadExt& r) { return l += r; }
  friend QuadExt operator-(QuadExt l, const QuadExt& r) { return l -= r; }
  friend QuadExt operator*(QuadExt l, const QuadExt& r) { return l *= r; }
  friend QuadExt operator/(QuadExt l, const QuadExt& r) { return l /= r; }
  friend bool operator==(const QuadExt& l, const QuadExt& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }
  friend bool operator!=(const QuadExt& l, const QuadExt& r) { return !(l == r); }

  std::string to_string() const;

 private:
  void fold_square_radicand();
  void check_compatible(const QuadExt& o) const;

  Rational a_ = 0;
  Rational b_ = 0;
  Rational d_ = 0;  // 0 marks a plain rational
};

}  // namespace loewner
