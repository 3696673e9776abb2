#include "cayley/imvector.hpp"

#include <stdexcept>

namespace cayley {

ImVector ImVector::basis(int axis) {
  if (axis < 1 || axis > 7) throw std::invalid_argument("axis must be in 1..7");
  ImVector v;
  v.v_[axis - 1] = 1;
  return v;
}

ImVector ImVector::from_octonion(const SplitOctonion& x) {
  ImVector v;
  for (int i = 1; i <= 7; ++i) v.v_[i - 1] = x.coeff(i);
  return v;
}

SplitOctonion ImVector::to_octonion() const {
  std::array<Rational, 8> c{};
  for (int i = 1; i <= 7; ++i) c[i] = v_[i - 1];
  return SplitOctonion(std::move(c));
}

bool ImVector::is_zero() const {
  for (const auto& v : v_) {
    if (v != 0) return false;
  }
  return true;
}

ImVector ImVector::operator-() const {
  ImVector out;
  for (int i = 0; i < 7; ++i) out.v_[i] = -v_[i];
  return out;
}

ImVector& ImVector::operator+=(const ImVector& o) {
  for (int i = 0; i < 7; ++i) v_[i] += o.v_[i];
  return *this;
}

ImVector& ImVector::operator-=(const ImVector& o) {
  for (int i = 0; i < 7; ++i) v_[i] -= o.v_[i];
  return *this;
}

ImVector& ImVector::operator*=(const Rational& c) {
  for (int i = 0; i < 7; ++i) v_[i] *= c;
  return *this;
}

std::string ImVector::str() const { return to_octonion().str(); }

Rational metric(const ImVector& x, const ImVector& y) {
  const auto& a = x.coeffs();
  const auto& b = y.coeffs();
  Rational out(0);
  for (int i = 0; i < 3; ++i) out += a[i] * b[i];
  for (int i = 3; i < 7; ++i) out -= a[i] * b[i];
  return out;
}

ImVector cross(const ImVector& x, const ImVector& y) {
  return ImVector::from_octonion(mul(x.to_octonion(), y.to_octonion()));
}

Rational triple(const ImVector& x, const ImVector& y, const ImVector& z) {
  return metric(cross(x, y), z);
}

Rational four_form(const ImVector& x, const ImVector& y, const ImVector& z,
                   const ImVector& w) {
  // Alternating extension of g(X,(YxZ)xW): by the associator identity it
  // equals <X,[Y,Z,W]>/2, and the metric correction terms vanish on
  // pairwise-orthogonal arguments, where the plain display is exact.
  return metric(x, cross(cross(y, z), w)) + metric(z, w) * metric(x, y) -
         metric(w, y) * metric(x, z);
}

SplitOctonion assoc_via_cross(const ImVector& x, const ImVector& y, const ImVector& z) {
  ImVector out = cross(cross(x, y), z) * Rational(2);
  out += Rational(2) * metric(y, z) * x;
  out -= Rational(2) * metric(z, x) * y;
  return out.to_octonion();
}

SplitOctonion triple_cross(const SplitOctonion& x, const SplitOctonion& y,
                           const SplitOctonion& z) {
  SplitOctonion out = -mul(mul(x, conj(y)), z);
  out += inner(x, y) * z;
  out += inner(y, z) * x;
  out -= inner(z, x) * y;
  return out;
}

ImVector random_imvector(SubstreamRng& rng) {
  Rational7 v;
  for (auto& c : v) c = rng.rational();
  return ImVector(std::move(v));
}

} // namespace cayley
