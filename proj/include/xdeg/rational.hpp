#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace xdeg {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational; reduced form with positive denominator is maintained by the backend.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Renders "num/den", always with the slash ("1/1" for integers) so report fields have a
// uniform shape.
std::string rat_str(const Rational& q);

// Decimal approximation with the given number of significant digits (default 12),
// round-half-up on the last digit. Used only for display next to the exact value.
std::string rat_decimal(const Rational& q, int sig_digits = 12);

// Parses "a/b" or a bare integer "a". Throws errc::bad_input on malformed text or b == 0.
Rational rat_parse(const std::string& text);

}  // namespace xdeg
