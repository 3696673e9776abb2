#include "cayley/r8.hpp"

#include <cmath>
#include <stdexcept>

namespace cayley {

R8Point R8Point::make(Rational u0, ImVector U, R8Region region) {
  const Rational n0 = metric(U, U);
  if (n0 == 0) throw std::invalid_argument("point on the null cone rejected");
  if ((region == R8Region::plus && n0 < 0) || (region == R8Region::minus && n0 > 0)) {
    throw std::invalid_argument("sign of N0(U) inconsistent with the declared region");
  }
  return R8Point{std::move(u0), std::move(U), region};
}

Rational u_length(const R8Point& u) {
  const Rational n0 = u.n0();
  const auto len = exact_sqrt(n0 > 0 ? n0 : Rational(-n0));
  if (!len) throw std::domain_error("|N0(U)| is not a rational square; use the float path");
  return *len;
}

SplitOctonion n2_field(const R8Point& u) {
  const Rational len = u_length(u);
  return (u.U * (1 / len)).to_octonion();
}

SplitOctonion structure8_apply(const R8Point& u, const SplitOctonion& y) {
  return mul(n2_field(u), y);
}

Rational omega8(const R8Point& u, const SplitOctonion& y, const SplitOctonion& z) {
  const ImVector n2 = ImVector::from_octonion(n2_field(u));
  const ImVector yim = ImVector::from_octonion(y);
  const ImVector zim = ImVector::from_octonion(z);
  return y.real_part() * metric(n2, zim) - z.real_part() * metric(n2, yim) +
         metric(cross(n2, yim), zim);
}

SplitOctonion dstructure8(const R8Point& u, const SplitOctonion& x, const SplitOctonion& y) {
  const Rational len = u_length(u);
  const ImVector n2 = ImVector::from_octonion(n2_field(u));
  const Rational eps = metric(n2, n2);  // +1 on plus, -1 on minus
  const ImVector xim = ImVector::from_octonion(x);
  // Orthogonal projection of X onto n2^perp; the derivative of the unit
  // field along e0 and along n2 vanishes.
  const ImVector proj = xim - (eps * metric(xim, n2)) * n2;
  return mul(proj.to_octonion(), y) * (1 / len);
}

Rational domega8(const R8Point& u, const SplitOctonion& x, const SplitOctonion& y,
                 const SplitOctonion& z) {
  const Rational len = u_length(u);
  const ImVector n2 = ImVector::from_octonion(n2_field(u));
  const Rational eps = metric(n2, n2);
  const ImVector X = ImVector::from_octonion(x);
  const ImVector Y = ImVector::from_octonion(y);
  const ImVector Z = ImVector::from_octonion(z);
  const auto w = [&](const ImVector& a, const ImVector& b) {
    return metric(cross(n2, a), b);
  };
  // n2* is the dual covector with n2*(n2) = 1, i.e. eps <n2, .>.
  const Rational normal_wedge = eps * (metric(X, n2) * w(Y, Z) + metric(Y, n2) * w(Z, X) +
                                       metric(Z, n2) * w(X, Y));
  return (Rational(3) * triple(X, Y, Z) - normal_wedge) / len;
}

Rational domega8_expansion(const R8Point& u, const SplitOctonion& x, const SplitOctonion& y,
                           const SplitOctonion& z) {
  return inner(dstructure8(u, x, y), z) + inner(dstructure8(u, y, z), x) +
         inner(dstructure8(u, z, x), y);
}

SplitOctonion nijenhuis8(const R8Point& u, const SplitOctonion& x, const SplitOctonion& y) {
  const SplitOctonion jx = structure8_apply(u, x);
  const SplitOctonion jy = structure8_apply(u, y);
  SplitOctonion out = dstructure8(u, jx, y) - dstructure8(u, jy, x);
  out += mul(n2_field(u), dstructure8(u, y, x) - dstructure8(u, x, y));
  out *= Rational(2);
  return out;
}

namespace r8d {

Oct mul(const Oct& x, const Oct& y) {
  Oct c{};
  c[0] = x[0] * y[0];
  for (int i = 1; i < 8; ++i) {
    c[i] += x[0] * y[i];
    c[i] += x[i] * y[0];
  }
  for (int i = 1; i < 8; ++i) {
    if (x[i] == 0) continue;
    for (int j = 1; j < 8; ++j) {
      if (y[j] == 0) continue;
      const auto& [sign, index] = detail::kBasisTable[i - 1][j - 1];
      c[index] += sign * x[i] * y[j];
    }
  }
  return c;
}

double inner(const Oct& x, const Oct& y) {
  double out = 0;
  for (int i = 0; i < 4; ++i) out += x[i] * y[i];
  for (int i = 4; i < 8; ++i) out -= x[i] * y[i];
  return out;
}

double n0(const Im7& u) {
  double out = 0;
  for (int i = 0; i < 3; ++i) out += u[i] * u[i];
  for (int i = 3; i < 7; ++i) out -= u[i] * u[i];
  return out;
}

Oct n2(const Im7& u, R8Region region) {
  const double q = n0(u);
  const double len = std::sqrt(region == R8Region::plus ? q : -q);
  Oct out{};
  for (int i = 0; i < 7; ++i) out[i + 1] = u[i] / len;
  return out;
}

Oct structure_apply(const Im7& u, R8Region region, const Oct& y) {
  return mul(n2(u, region), y);
}

double omega(const Im7& u, R8Region region, const Oct& y, const Oct& z) {
  return inner(structure_apply(u, region, y), z);
}

Oct dstructure_analytic(const Im7& u, R8Region region, const Oct& x, const Oct& y) {
  const double q = n0(u);
  const double len = std::sqrt(region == R8Region::plus ? q : -q);
  const Oct nn = n2(u, region);
  const double eps = region == R8Region::plus ? 1.0 : -1.0;
  Oct ximag = x;
  ximag[0] = 0;
  const double xn = inner(ximag, nn);
  Oct proj{};
  for (int i = 1; i < 8; ++i) proj[i] = ximag[i] - eps * xn * nn[i];
  Oct out = mul(proj, y);
  for (auto& v : out) v /= len;
  return out;
}

double domega_analytic(const Im7& u, R8Region region, const Oct& x, const Oct& y,
                       const Oct& z) {
  Oct dx = dstructure_analytic(u, region, x, y);
  double out = inner(dx, z);
  out += inner(dstructure_analytic(u, region, y, z), x);
  out += inner(dstructure_analytic(u, region, z, x), y);
  return out;
}

} // namespace r8d

} // namespace cayley
