#include "cayley/rational.hpp"

#include <stdexcept>

namespace cayley {

std::string to_string(const Rational& r) { return r.str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt p(text.substr(0, slash));
    BigInt q(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  }
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const BigInt p = numerator(r), q = denominator(r);
  const BigInt sp = isqrt(p), sq = isqrt(q);
  if (sp * sp != p || sq * sq != q) return std::nullopt;
  return Rational(sp, sq);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace cayley
