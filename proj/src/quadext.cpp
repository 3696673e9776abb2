#include "cayley/quadext.hpp"

#include <stdexcept>

namespace cayley {

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  // (a + b sqrt2)(c + d sqrt2) = (ac + 2bd) + (ad + bc) sqrt2
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt QuadExt::inverse() const {
  const Rational n = field_norm();
  if (n == 0) throw std::domain_error("inverse of zero in Q(sqrt2)");
  return QuadExt(a_ / n, -b_ / n);
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

std::string QuadExt::str() const {
  std::string out = to_string(a_);
  if (b_ >= 0) {
    out += "+" + to_string(b_);
  } else {
    out += "-" + to_string(-b_);
  }
  out += "*sqrt2";
  return out;
}

} // namespace cayley
