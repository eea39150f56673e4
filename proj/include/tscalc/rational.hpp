#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tscalc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A point of a time scale. Points are held exactly as rationals on every
/// scale variant; conversion to double happens only at evaluation time on
/// the real line.
using Point = Rational;

bool is_integer(const Rational& q);

/// Integral rationals only; throws Error when q has a denominator or does
/// not fit into long.
long to_long(const Rational& q);

double to_double(const Rational& q);

/// base^exp with signed integer exponent; exp < 0 inverts (base must be
/// nonzero then).
Rational rat_ipow(const Rational& base, long exp);

Rational rat_abs(const Rational& q);

Integer rat_floor(const Rational& q);
Integer rat_ceil(const Rational& q);

/// Parses "p/q", integer, or decimal strings ("-1.25", "3e-2").
Rational parse_rational(const std::string& text);

/// Canonical rendering: "p/q", or a plain integer when the denominator is 1.
/// Round-trips through parse_rational without loss.
std::string format_rational(const Rational& q);

}  // namespace tscalc
