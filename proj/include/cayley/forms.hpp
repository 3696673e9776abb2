#pragma once

#include "cayley/imvector.hpp"
#include "cayley/linalg.hpp"
#include "cayley/poly7.hpp"
#include "cayley/rng.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace cayley {

/// Strictly increasing multi-index over axes 1..w (w <= 7) encoded as a bit
/// mask, bit i-1 standing for axis i.
using Mask = std::uint8_t;

int mask_degree(Mask m);
std::vector<int> mask_axes(Mask m);
Mask mask_of(std::initializer_list<int> axes);

/// Sign of merging the ascending tuples of a and b into one ascending
/// tuple; 0 when the masks overlap.
int wedge_sign(Mask a, Mask b);

/// Lexicographic order on ascending axis tuples, the canonical term order.
struct MaskLexLess {
  bool operator()(Mask a, Mask b) const;
};

/// Metric sign of an ambient axis: +1 for x1..x3, -1 for x4..x7.
int axis_sign(int axis);

/// Exterior k-form on R^7 whose coefficients are polynomials in x1..x7.
/// Degree-homogeneous; no zero coefficients are stored.
class PolyForm {
 public:
  using TermMap = std::map<Mask, Poly7, MaskLexLess>;

  explicit PolyForm(int degree);

  static PolyForm scalar(Poly7 p);
  /// coeff * dx^{axes}; unsorted axis lists are sorted with the sign applied.
  static PolyForm monomial(std::initializer_list<int> axes, Poly7 coeff);
  static PolyForm monomial(std::initializer_list<int> axes, Rational coeff);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Poly7 coefficient(Mask m) const;

  void add_term(Mask m, Poly7 coeff);

  PolyForm operator-() const;
  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  PolyForm& operator*=(const Rational& c);
  PolyForm& operator*=(const Poly7& p);

  friend PolyForm operator+(PolyForm l, const PolyForm& r) { return l += r; }
  friend PolyForm operator-(PolyForm l, const PolyForm& r) { return l -= r; }
  friend PolyForm operator*(PolyForm l, const Rational& c) { return l *= c; }
  friend PolyForm operator*(const Rational& c, PolyForm r) { return r *= c; }
  friend bool operator==(const PolyForm&, const PolyForm&) = default;

  /// Substitutes the point into every coefficient.
  PolyForm at_point(const Rational7& x) const;

  std::string str() const;

 private:
  int degree_;
  TermMap terms_;
};

/// Vector field on R^7 with polynomial components.
struct PolyVectorField {
  std::array<Poly7, 7> components;

  static PolyVectorField constant(const ImVector& v);
  /// n(x) = x.
  static PolyVectorField radial();
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);
PolyForm exterior_d(const PolyForm& a);
PolyForm interior(const PolyVectorField& v, const PolyForm& a);
PolyForm lie_derivative(const PolyVectorField& v, const PolyForm& a);

/// Hodge star for the ambient signature (3,4) metric with volume
/// mu = dx^1 ^ ... ^ dx^7, defined by beta ^ *alpha = g(beta, alpha) mu.
PolyForm hodge_ambient(const PolyForm& a);

/// Metric pairing of two same-degree forms, extended to forms by Gram
/// determinants (no 1/k! factor).
Poly7 form_metric(const PolyForm& a, const PolyForm& b);

/// Evaluates a k-form at a point on k vectors.
Rational form_value(const PolyForm& a, const Rational7& point,
                    std::span<const ImVector> args);

/// The constant 3-form Omega of the scalar triple product, with the
/// coefficient table w123 - w145 + w167 - w246 - w257 - w347 + w356.
PolyForm cayley_three_form();

/// The constant 4-form Psi = *Omega, with the coefficient table
/// w4567 - w2367 + w2345 - w1357 - w1346 - w1256 + w1247.
PolyForm cayley_four_form();

/// mu = dx^{1..7}.
PolyForm volume_form();

/// Rational tangent frame of a hyperplane base^perp, carried with its exact
/// Gram matrix in place of orthonormality.
struct TangentFrame {
  ImVector base;                    // the point; doubles as the normal n
  std::array<ImVector, 6> basis;    // spans base^perp
  Mat<Rational> gram;               // g(b_i, b_j)
  Mat<Rational> gram_inverse;
  Rational normal_square;           // g(base, base), +1 or -1
  Rational volume;                  // mu_S(b_1..b_6), see below

  /// Validates tangency, g(base,base) = +-1, frame nondegeneracy and the
  /// det-sign expected for the signature. The induced volume is oriented as
  /// mu_S = g(n,n) iota_n mu, which reproduces the basepoint volume forms
  /// used for the Hitchin operator on both pseudospheres.
  static TangentFrame make(ImVector base, std::array<ImVector, 6> basis);
};

/// Pointwise k-form on the tangent space of a frame: values on ascending
/// frame-index tuples (slots 1..6).
class TangentForm {
 public:
  using ValueMap = std::map<Mask, Rational, MaskLexLess>;

  explicit TangentForm(int degree);

  int degree() const { return degree_; }
  bool is_zero() const { return values_.empty(); }
  const ValueMap& values() const { return values_; }
  Rational value(Mask m) const;

  void add_value(Mask m, Rational v);

  TangentForm operator-() const;
  TangentForm& operator+=(const TangentForm& o);
  TangentForm& operator-=(const TangentForm& o);
  TangentForm& operator*=(const Rational& c);

  friend TangentForm operator+(TangentForm l, const TangentForm& r) { return l += r; }
  friend TangentForm operator-(TangentForm l, const TangentForm& r) { return l -= r; }
  friend TangentForm operator*(TangentForm l, const Rational& c) { return l *= c; }
  friend TangentForm operator*(const Rational& c, TangentForm r) { return r *= c; }
  friend bool operator==(const TangentForm&, const TangentForm&) = default;

  std::string str() const;

 private:
  int degree_;
  ValueMap values_;
};

/// Coordinates of a tangent vector in the frame basis (exact Gram solve).
std::array<Rational, 6> frame_coords(const TangentFrame& frame, const ImVector& y);

/// Evaluates a pointwise k-form on k coordinate vectors.
Rational tangent_form_value(const TangentForm& a,
                            std::span<const std::array<Rational, 6>> coords);

/// Wedge of two pointwise forms on the same frame.
TangentForm tangent_wedge(const TangentForm& a, const TangentForm& b);

/// Interior product with a tangent vector given in frame coordinates.
TangentForm tangent_interior(const std::array<Rational, 6>& coords, const TangentForm& a);

/// Pointwise decomposition theta = theta|_S + n* ^ ~theta at frame.base.
struct FrameRestriction {
  TangentForm tangential;  // values of theta on frame tuples
  TangentForm normal;      // values of iota_n theta on frame tuples
};
FrameRestriction restrict_form(const PolyForm& a, const TangentFrame& frame);

/// Constant-coefficient ambient form built from the dual coframe whose
/// restriction reproduces the given pointwise form (zero normal part).
PolyForm ambient_extension(const TangentForm& a, const TangentFrame& frame);

/// The 1-form n* with n*(n) = 1 and n*(b_i) = 0.
PolyForm normal_covector(const TangentFrame& frame);

/// Restricted Hodge star on the tangent hyperplane, defined by
/// beta ^ *_S alpha = g_S(beta, alpha) mu_S with the frame Gram metric and
/// the induced volume described at TangentFrame::make.
TangentForm hodge_sphere(const TangentForm& a, const TangentFrame& frame);

/// Independent route via the ambient star: *_S(theta|_S) =
/// g(n,n) (-1)^k iota_n(*_R theta). Must agree with hodge_sphere exactly.
TangentForm hodge_sphere_via_ambient(const TangentForm& a, const TangentFrame& frame);

/// Random form with small polynomial coefficients, for property tests.
PolyForm random_polyform(int degree, int coeff_degree, SubstreamRng& rng);

} // namespace cayley
