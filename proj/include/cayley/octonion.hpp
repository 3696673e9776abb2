#pragma once

#include "cayley/rational.hpp"
#include "cayley/rng.hpp"

#include <array>
#include <string>

namespace cayley {

namespace detail {
// Basis products e_i * e_j = sign * e_k for i,j in 1..7, with k = 0 meaning
// the real unit. Row = first factor, column = second factor.
struct BasisProduct {
  int sign;
  int index;
};
extern const BasisProduct kBasisTable[7][7];
} // namespace detail

/// Split octonion over the basis 1, e1, ..., e7 with exact rational
/// coefficients. e_i^2 = -1 for i = 1..3 and e_j^2 = +1 for j = 4..7; the
/// norm form x conj(x) has signature (4,4).
class SplitOctonion {
 public:
  SplitOctonion() : c_{} {}
  explicit SplitOctonion(std::array<Rational, 8> c) : c_(std::move(c)) {}

  static SplitOctonion one() { return basis(0); }
  /// Basis unit: index 0 is the real unit, 1..7 are the imaginary units.
  static SplitOctonion basis(int index);
  static SplitOctonion scalar(Rational r);

  const Rational& coeff(int index) const { return c_.at(index); }
  Rational& coeff(int index) { return c_.at(index); }
  const std::array<Rational, 8>& coeffs() const { return c_; }

  Rational real_part() const { return c_[0]; }
  SplitOctonion imaginary_part() const;
  bool is_zero() const;

  SplitOctonion operator-() const;
  SplitOctonion& operator+=(const SplitOctonion& o);
  SplitOctonion& operator-=(const SplitOctonion& o);
  SplitOctonion& operator*=(const Rational& c);

  friend SplitOctonion operator+(SplitOctonion l, const SplitOctonion& r) { return l += r; }
  friend SplitOctonion operator-(SplitOctonion l, const SplitOctonion& r) { return l -= r; }
  friend SplitOctonion operator*(SplitOctonion l, const Rational& c) { return l *= c; }
  friend SplitOctonion operator*(const Rational& c, SplitOctonion r) { return r *= c; }
  friend bool operator==(const SplitOctonion&, const SplitOctonion&) = default;

  std::string str() const;

 private:
  std::array<Rational, 8> c_;
};

/// Bilinear extension of the basis multiplication table.
SplitOctonion mul(const SplitOctonion& x, const SplitOctonion& y);

inline SplitOctonion operator*(const SplitOctonion& x, const SplitOctonion& y) {
  return mul(x, y);
}

/// Same product through the Cayley-Dickson doubling of the quaternions with
/// e^2 = +1: (a + be)(c + de) = (ac + conj(d) b) + (da + b conj(c)) e.
/// Kept as an independent route and cross-checked against the table.
SplitOctonion mul_cayley_dickson(const SplitOctonion& x, const SplitOctonion& y);

SplitOctonion conj(const SplitOctonion& x);

/// N(x) = x conj(x): x0^2 + x1^2 + x2^2 + x3^2 - x4^2 - x5^2 - x6^2 - x7^2.
Rational norm(const SplitOctonion& x);

/// Polarization of the norm form, signature (4,4).
Rational inner(const SplitOctonion& x, const SplitOctonion& y);

/// [x, y, z] = (xy)z - x(yz).
SplitOctonion associator(const SplitOctonion& x, const SplitOctonion& y,
                         const SplitOctonion& z);

SplitOctonion commutator(const SplitOctonion& x, const SplitOctonion& y);

/// Random octonion with small rational coefficients.
SplitOctonion random_octonion(SubstreamRng& rng);

/// Random octonion with N(x) = 0, from a rational secant of the null cone.
SplitOctonion random_null_octonion(SubstreamRng& rng);

} // namespace cayley
