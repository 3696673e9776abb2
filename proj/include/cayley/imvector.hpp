#pragma once

#include "cayley/octonion.hpp"
#include "cayley/rational.hpp"
#include "cayley/rng.hpp"

#include <array>
#include <string>

namespace cayley {

/// Purely imaginary split octonion, i.e. a vector of the pseudo-Euclidean
/// space R^{3,4} = Im(Ca'). Doubles as point, tangent vector and normal.
class ImVector {
 public:
  ImVector() : v_{} {}
  explicit ImVector(Rational7 v) : v_(std::move(v)) {}

  /// e_axis for axis in 1..7.
  static ImVector basis(int axis);
  static ImVector from_octonion(const SplitOctonion& x);  // drops the real part

  const Rational& coeff(int axis) const { return v_.at(axis - 1); }
  Rational& coeff(int axis) { return v_.at(axis - 1); }
  const Rational7& coeffs() const { return v_; }

  SplitOctonion to_octonion() const;
  bool is_zero() const;

  ImVector operator-() const;
  ImVector& operator+=(const ImVector& o);
  ImVector& operator-=(const ImVector& o);
  ImVector& operator*=(const Rational& c);

  friend ImVector operator+(ImVector l, const ImVector& r) { return l += r; }
  friend ImVector operator-(ImVector l, const ImVector& r) { return l -= r; }
  friend ImVector operator*(ImVector l, const Rational& c) { return l *= c; }
  friend ImVector operator*(const Rational& c, ImVector r) { return r *= c; }
  friend bool operator==(const ImVector&, const ImVector&) = default;

  std::string str() const;

 private:
  Rational7 v_;
};

/// g(X,Y) of signature (3,4): restriction of the octonion scalar product.
Rational metric(const ImVector& x, const ImVector& y);

/// X x Y = Im(XY).
ImVector cross(const ImVector& x, const ImVector& y);

/// Scalar triple product Omega(X,Y,Z) = g(X x Y, Z).
Rational triple(const ImVector& x, const ImVector& y, const ImVector& z);

/// The 4-form Psi = *Omega: the alternating form whose value on
/// pairwise-orthogonal arguments is g(X, (Y x Z) x W); in general it is
/// <X, [Y,Z,W]>/2.
Rational four_form(const ImVector& x, const ImVector& y, const ImVector& z,
                   const ImVector& w);

/// Right-hand side of the associator identity on Im(Ca'):
/// 2 (X x Y) x Z + 2 g(Y,Z) X - 2 g(Z,X) Y.
SplitOctonion assoc_via_cross(const ImVector& x, const ImVector& y, const ImVector& z);

/// Three-fold vector cross product P(x,y,z) = -(x conj(y)) z + <x,y> z
/// + <y,z> x - <z,x> y on the full algebra.
SplitOctonion triple_cross(const SplitOctonion& x, const SplitOctonion& y,
                           const SplitOctonion& z);

/// Sign relating <P,P> to the Gram determinant in split signature,
/// determined once over randomized triples and pinned by tests.
inline constexpr int kTripleCrossNormSign = +1;

ImVector random_imvector(SubstreamRng& rng);

} // namespace cayley
