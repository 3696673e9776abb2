#include "cayley/poly7.hpp"

#include <stdexcept>

namespace cayley {

namespace {
void check_axis(int axis) {
  if (axis < 1 || axis > 7) throw std::invalid_argument("axis must be in 1..7");
}
} // namespace

Poly7 Poly7::constant(Rational c) {
  Poly7 p;
  p.add_term(Exponents{}, c);
  return p;
}

Poly7 Poly7::variable(int axis) {
  check_axis(axis);
  Exponents e{};
  e[axis - 1] = 1;
  return monomial(e, Rational(1));
}

Poly7 Poly7::monomial(const Exponents& e, Rational c) {
  Poly7 p;
  p.add_term(e, c);
  return p;
}

bool Poly7::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational Poly7::constant_value() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly7::total_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto k : e) d += k;
    deg = std::max(deg, d);
  }
  return deg;
}

void Poly7::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly7 Poly7::operator-() const {
  Poly7 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Poly7& Poly7::operator+=(const Poly7& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly7& Poly7::operator-=(const Poly7& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly7& Poly7::operator*=(const Poly7& o) {
  Poly7 out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e;
      for (int i = 0; i < 7; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Poly7& Poly7::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Rational Poly7::eval(const Rational7& x) const {
  Rational out(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < 7; ++i) {
      for (int k = 0; k < e[i]; ++k) term *= x[i];
    }
    out += term;
  }
  return out;
}

Poly7 Poly7::partial(int axis) const {
  check_axis(axis);
  const int i = axis - 1;
  Poly7 out;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents d = e;
    d[i] -= 1;
    out.add_term(d, c * Rational(e[i]));
  }
  return out;
}

std::string Poly7::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    const Rational mag = neg ? Rational(-c) : c;
    std::string factors;
    for (int i = 0; i < 7; ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "x" + std::to_string(i + 1);
      if (e[i] > 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += to_string(mag) + "*" + factors;
    }
  }
  return out;
}

} // namespace cayley
