#include "xdeg/rational.hpp"

#include "xdeg/error.hpp"

#include <cctype>
#include <sstream>

namespace xdeg {

std::string rat_str(const Rational& q) {
  std::ostringstream os;
  os << rat_num(q) << "/" << rat_den(q);
  return os.str();
}

std::string rat_decimal(const Rational& q, int sig_digits) {
  if (sig_digits < 1) sig_digits = 1;
  BigInt num = rat_num(q);
  BigInt den = rat_den(q);
  bool neg = num < 0;
  if (neg) num = -num;
  if (num == 0) return "0";

  // Scale so that the integer division yields sig_digits+1 digits, then round the tail.
  int exp10 = 0;  // position of the leading digit relative to the decimal point
  BigInt hi = num / den;
  if (hi > 0) {
    for (BigInt t = hi; t > 0; t /= 10) ++exp10;
  } else {
    BigInt t = num * 10;
    exp10 = 0;
    while (t / den == 0) {
      t *= 10;
      --exp10;
    }
  }
  // digits = round(num/den * 10^(sig_digits - exp10))
  BigInt scaled_num = num;
  BigInt scaled_den = den;
  int shift = sig_digits - exp10;
  if (shift >= 0)
    scaled_num *= boost::multiprecision::pow(BigInt(10), shift);
  else
    scaled_den *= boost::multiprecision::pow(BigInt(10), -shift);
  BigInt digits = (2 * scaled_num + scaled_den) / (2 * scaled_den);  // half-up

  std::string ds = digits.str();
  // Rounding may carry into one extra digit ("999..9" -> "100..0"); absorb it in exp10.
  if ((int)ds.size() > sig_digits) {
    ds.pop_back();
    ++exp10;
  }
  while (ds.size() > 1 && ds.back() == '0') ds.pop_back();

  std::string out;
  if (exp10 <= 0) {
    out = "0.";
    out.append(-exp10, '0');
    out += ds;
  } else if ((int)ds.size() <= exp10) {
    out = ds;
    out.append(exp10 - ds.size(), '0');
  } else {
    out = ds.substr(0, exp10) + "." + ds.substr(exp10);
  }
  return neg ? "-" + out : out;
}

Rational rat_parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace((unsigned char)c)) s += c;
  if (s.empty()) fail(errc::bad_input, "empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) fail(errc::bad_input, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const error&) {
    throw;
  } catch (const std::exception&) {
    fail(errc::bad_input, "malformed rational '" + text + "'");
  }
}

}  // namespace xdeg
