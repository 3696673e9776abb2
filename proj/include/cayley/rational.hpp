#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <optional>
#include <string>

namespace cayley {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Stored in lowest terms with positive denominator;
/// the canonical zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Serializes as "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& r);

/// Inverse of to_string; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Floor square root of a nonnegative integer.
BigInt isqrt(const BigInt& n);

/// Exact square root, or nullopt when r is not the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

double to_double(const Rational& r);

using Rational7 = std::array<Rational, 7>;

} // namespace cayley
