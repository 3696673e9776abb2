#pragma once

#include "cayley/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace cayley {

/// Sparse multivariate polynomial in x1..x7 over the rationals. Terms are
/// keyed by exponent tuples; zero coefficients are never stored.
class Poly7 {
 public:
  using Exponents = std::array<std::uint8_t, 7>;
  using TermMap = std::map<Exponents, Rational>;

  Poly7() = default;

  static Poly7 constant(Rational c);
  /// x_axis for axis in 1..7.
  static Poly7 variable(int axis);
  static Poly7 monomial(const Exponents& e, Rational c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant term (0 when absent).
  Rational constant_value() const;
  int total_degree() const;

  Poly7 operator-() const;
  Poly7& operator+=(const Poly7& o);
  Poly7& operator-=(const Poly7& o);
  Poly7& operator*=(const Poly7& o);
  Poly7& operator*=(const Rational& c);

  friend Poly7 operator+(Poly7 l, const Poly7& r) { return l += r; }
  friend Poly7 operator-(Poly7 l, const Poly7& r) { return l -= r; }
  friend Poly7 operator*(Poly7 l, const Poly7& r) { return l *= r; }
  friend Poly7 operator*(Poly7 l, const Rational& c) { return l *= c; }
  friend Poly7 operator*(const Rational& c, Poly7 r) { return r *= c; }
  friend bool operator==(const Poly7&, const Poly7&) = default;

  /// Exact substitution of the seven coordinates.
  Rational eval(const Rational7& x) const;

  /// Formal partial derivative with respect to x_axis.
  Poly7 partial(int axis) const;

  const TermMap& terms() const { return terms_; }

  /// Deterministic human-readable form, e.g. "3*x1^2*x4-1/2*x2".
  std::string str() const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  TermMap terms_;
};

} // namespace cayley
