#pragma once

#include "cayley/imvector.hpp"
#include "cayley/octonion.hpp"
#include "cayley/rational.hpp"

#include <array>

namespace cayley {

/// The cone N0(X) = 0 splits Im(Ca') into R^{7+} and R^{7-}; crossed with
/// the real line they give the open sets R^{8+} and R^{8-} carrying the
/// almost complex structure J(y) = n2 y and the almost para-complex
/// structure P(y) = n2 y, with n2(u) = U/||U||.
enum class R8Region { plus, minus };

struct R8Point {
  Rational u0;
  ImVector U;
  R8Region region;

  /// Rejects points on the cone and region/sign mismatches.
  static R8Point make(Rational u0, ImVector U, R8Region region);

  /// N0(U) = g(U,U).
  Rational n0() const { return metric(U, U); }
};

/// ||U|| = sqrt(|N0(U)|). Exact path: requires |N0| to be a rational
/// square, throws std::domain_error otherwise.
Rational u_length(const R8Point& u);

/// n2(u) = U/||U||; <n2,n2> = +1 and n2 n2 = -1 on the plus region,
/// <n2,n2> = -1 and n2 n2 = +1 on the minus region.
SplitOctonion n2_field(const R8Point& u);

/// J(y) = n2 . y (plus) resp. P(y) = n2 . y (minus).
SplitOctonion structure8_apply(const R8Point& u, const SplitOctonion& y);

/// Fundamental form: omega(y,z) = <J y, z> = n1* ^ n2* (y,z) + <n2 x Y, Z>.
/// Computed from the closed formula; equals the inner-product route exactly.
Rational omega8(const R8Point& u, const SplitOctonion& y, const SplitOctonion& z);

/// D_x(J)(y): derivative of the structure in direction x = x0 + X. The
/// derivative vanishes along e0 and along n2; the projection term carries
/// the sign of <n2,n2> (orthogonal projection onto n2^perp).
SplitOctonion dstructure8(const R8Point& u, const SplitOctonion& x, const SplitOctonion& y);

/// d omega(x,y,z) via the closed formula
/// (3 Omega(X,Y,Z) - (n2* ^ omega)(X,Y,Z)) / ||U||.
Rational domega8(const R8Point& u, const SplitOctonion& x, const SplitOctonion& y,
                 const SplitOctonion& z);

/// Independent route: <D_x(J)y,z> + <D_y(J)z,x> + <D_z(J)x,y>.
Rational domega8_expansion(const R8Point& u, const SplitOctonion& x, const SplitOctonion& y,
                           const SplitOctonion& z);

/// Nijenhuis tensor through the flat-space derivative expansion:
/// N(x,y)/2 = D_{Jx}(J)y - D_{Jy}(J)x + J D_y(J)x - J D_x(J)y.
SplitOctonion nijenhuis8(const R8Point& u, const SplitOctonion& x, const SplitOctonion& y);

/// Float path mirrors, used by the finite-difference oracles.
namespace r8d {

using Oct = std::array<double, 8>;
using Im7 = std::array<double, 7>;

Oct mul(const Oct& x, const Oct& y);
double inner(const Oct& x, const Oct& y);
double n0(const Im7& u);
Oct n2(const Im7& u, R8Region region);
Oct structure_apply(const Im7& u, R8Region region, const Oct& y);
double omega(const Im7& u, R8Region region, const Oct& y, const Oct& z);
Oct dstructure_analytic(const Im7& u, R8Region region, const Oct& x, const Oct& y);
double domega_analytic(const Im7& u, R8Region region, const Oct& x, const Oct& y,
                       const Oct& z);

} // namespace r8d

} // namespace cayley
