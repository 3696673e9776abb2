#pragma once

#include "cayley/rational.hpp"

namespace cayley {

/// Element a + b*sqrt(2) of the quadratic field Q(sqrt2). Equality is
/// componentwise; the value is zero iff both components are zero, so every
/// nonzero element is invertible (a^2 - 2 b^2 = 0 has no rational solution
/// besides (0,0)).
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
  QuadExt(int a) : a_(a) {}  // NOLINT: implicit for scalar literals

  static QuadExt sqrt2() { return QuadExt(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadExt operator-() const { return QuadExt(-a_, -b_); }
  QuadExt& operator+=(const QuadExt& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QuadExt& operator-=(const QuadExt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt l, const QuadExt& r) { return l += r; }
  friend QuadExt operator-(QuadExt l, const QuadExt& r) { return l -= r; }
  friend QuadExt operator*(QuadExt l, const QuadExt& r) { return l *= r; }
  friend QuadExt operator/(QuadExt l, const QuadExt& r) { return l /= r; }
  friend bool operator==(const QuadExt&, const QuadExt&) = default;

  /// Galois conjugate a - b*sqrt2.
  QuadExt conjugate() const { return QuadExt(a_, -b_); }

  /// Field norm a^2 - 2 b^2; zero iff the element is zero.
  Rational field_norm() const { return a_ * a_ - 2 * b_ * b_; }

  QuadExt inverse() const;

  /// Serializes as "p/q+r/s*sqrt2" (sign of the sqrt2 part folded into the
  /// separator).
  std::string str() const;

 private:
  Rational a_;
  Rational b_;
};

inline QuadExt quad_mul(const QuadExt& u, const QuadExt& v) { return u * v; }

} // namespace cayley
