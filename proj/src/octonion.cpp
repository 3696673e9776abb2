#include "cayley/octonion.hpp"

#include <stdexcept>

namespace cayley {

namespace detail {

// The 7x7 basis table: row e_i (first factor), column e_j (second).
const BasisProduct kBasisTable[7][7] = {
    // e1 row
    {{-1, 0}, {+1, 3}, {-1, 2}, {+1, 5}, {-1, 4}, {-1, 7}, {+1, 6}},
    // e2 row
    {{-1, 3}, {-1, 0}, {+1, 1}, {+1, 6}, {+1, 7}, {-1, 4}, {-1, 5}},
    // e3 row
    {{+1, 2}, {-1, 1}, {-1, 0}, {+1, 7}, {-1, 6}, {+1, 5}, {-1, 4}},
    // e4 row
    {{-1, 5}, {-1, 6}, {-1, 7}, {+1, 0}, {-1, 1}, {-1, 2}, {-1, 3}},
    // e5 row
    {{+1, 4}, {-1, 7}, {+1, 6}, {+1, 1}, {+1, 0}, {+1, 3}, {-1, 2}},
    // e6 row
    {{+1, 7}, {+1, 4}, {-1, 5}, {+1, 2}, {-1, 3}, {+1, 0}, {+1, 1}},
    // e7 row
    {{-1, 6}, {+1, 5}, {+1, 4}, {+1, 3}, {+1, 2}, {-1, 1}, {+1, 0}},
};

} // namespace detail

SplitOctonion SplitOctonion::basis(int index) {
  if (index < 0 || index > 7) throw std::invalid_argument("basis index must be in 0..7");
  SplitOctonion x;
  x.c_[index] = 1;
  return x;
}

SplitOctonion SplitOctonion::scalar(Rational r) {
  SplitOctonion x;
  x.c_[0] = std::move(r);
  return x;
}

SplitOctonion SplitOctonion::imaginary_part() const {
  SplitOctonion x = *this;
  x.c_[0] = 0;
  return x;
}

bool SplitOctonion::is_zero() const {
  for (const auto& v : c_) {
    if (v != 0) return false;
  }
  return true;
}

SplitOctonion SplitOctonion::operator-() const {
  SplitOctonion x;
  for (int i = 0; i < 8; ++i) x.c_[i] = -c_[i];
  return x;
}

SplitOctonion& SplitOctonion::operator+=(const SplitOctonion& o) {
  for (int i = 0; i < 8; ++i) c_[i] += o.c_[i];
  return *this;
}

SplitOctonion& SplitOctonion::operator-=(const SplitOctonion& o) {
  for (int i = 0; i < 8; ++i) c_[i] -= o.c_[i];
  return *this;
}

SplitOctonion& SplitOctonion::operator*=(const Rational& c) {
  for (int i = 0; i < 8; ++i) c_[i] *= c;
  return *this;
}

std::string SplitOctonion::str() const {
  std::string out;
  for (int i = 0; i < 8; ++i) {
    const Rational& v = c_[i];
    if (v == 0) continue;
    const bool neg = v < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    const Rational mag = neg ? Rational(-v) : v;
    if (i == 0) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += "e" + std::to_string(i);
    } else {
      out += to_string(mag) + "*e" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

SplitOctonion mul(const SplitOctonion& x, const SplitOctonion& y) {
  std::array<Rational, 8> c{};
  const auto& a = x.coeffs();
  const auto& b = y.coeffs();
  c[0] = a[0] * b[0];
  for (int i = 1; i < 8; ++i) {
    c[i] += a[0] * b[i];
    c[i] += a[i] * b[0];
  }
  for (int i = 1; i < 8; ++i) {
    if (a[i] == 0) continue;
    for (int j = 1; j < 8; ++j) {
      if (b[j] == 0) continue;
      const auto& [sign, index] = detail::kBasisTable[i - 1][j - 1];
      if (sign > 0) {
        c[index] += a[i] * b[j];
      } else {
        c[index] -= a[i] * b[j];
      }
    }
  }
  return SplitOctonion(std::move(c));
}

namespace {

// Quaternion scaffolding for the Cayley-Dickson route only.
using Quat = std::array<Rational, 4>;

Quat quat_conj(const Quat& q) { return {q[0], -q[1], -q[2], -q[3]}; }

Quat quat_mul(const Quat& a, const Quat& b) {
  return {
      a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
      a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
      a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
      a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
  };
}

Quat quat_add(const Quat& a, const Quat& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

} // namespace

SplitOctonion mul_cayley_dickson(const SplitOctonion& x, const SplitOctonion& y) {
  // x = a + b e, y = c + d e with e = e4, e1 e = e5, e2 e = e6, e3 e = e7.
  const auto& xc = x.coeffs();
  const auto& yc = y.coeffs();
  const Quat a{xc[0], xc[1], xc[2], xc[3]};
  const Quat b{xc[4], xc[5], xc[6], xc[7]};
  const Quat c{yc[0], yc[1], yc[2], yc[3]};
  const Quat d{yc[4], yc[5], yc[6], yc[7]};
  const Quat first = quat_add(quat_mul(a, c), quat_mul(quat_conj(d), b));
  const Quat second = quat_add(quat_mul(d, a), quat_mul(b, quat_conj(c)));
  return SplitOctonion({first[0], first[1], first[2], first[3], second[0], second[1],
                        second[2], second[3]});
}

SplitOctonion conj(const SplitOctonion& x) {
  SplitOctonion out = -x;
  out.coeff(0) = x.coeff(0);
  return out;
}

Rational norm(const SplitOctonion& x) {
  const auto& c = x.coeffs();
  Rational out(0);
  for (int i = 0; i < 4; ++i) out += c[i] * c[i];
  for (int i = 4; i < 8; ++i) out -= c[i] * c[i];
  return out;
}

Rational inner(const SplitOctonion& x, const SplitOctonion& y) {
  const auto& a = x.coeffs();
  const auto& b = y.coeffs();
  Rational out(0);
  for (int i = 0; i < 4; ++i) out += a[i] * b[i];
  for (int i = 4; i < 8; ++i) out -= a[i] * b[i];
  return out;
}

SplitOctonion associator(const SplitOctonion& x, const SplitOctonion& y,
                         const SplitOctonion& z) {
  return mul(mul(x, y), z) - mul(x, mul(y, z));
}

SplitOctonion commutator(const SplitOctonion& x, const SplitOctonion& y) {
  return mul(x, y) - mul(y, x);
}

SplitOctonion random_octonion(SubstreamRng& rng) {
  std::array<Rational, 8> c;
  for (auto& v : c) v = rng.rational();
  return SplitOctonion(std::move(c));
}

SplitOctonion random_null_octonion(SubstreamRng& rng) {
  // Second intersection of a rational secant through the null point 1 + e4.
  const SplitOctonion seed = SplitOctonion::basis(0) + SplitOctonion::basis(4);
  for (;;) {
    const SplitOctonion d = random_octonion(rng);
    const Rational qd = norm(d);
    const Rational bd = inner(seed, d);
    if (qd == 0 || bd == 0) continue;
    const Rational s = Rational(-2) * bd / qd;
    return seed + s * d;
  }
}

} // namespace cayley
