#include "fourprod/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace fourprod {

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double m = std::frexp(x, &exp); // x = m * 2^exp, |m| in [0.5, 1)
  // 53 bits of mantissa make m * 2^53 integral.
  BigInt num = static_cast<long long>(std::ldexp(m, 53));
  exp -= 53;
  Rational r(num);
  if (exp >= 0) {
    r *= Rational(BigInt(1) << exp);
  } else {
    r /= Rational(BigInt(1) << -exp);
  }
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::optional<BigInt> parse_int(std::string s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  if (!all_digits(s)) return std::nullopt;
  BigInt v(s);
  return neg ? -v : v;
}

} // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) return std::nullopt;

  if (auto slash = s.find('/'); slash != std::string::npos) {
    auto num = parse_int(s.substr(0, slash));
    auto den = parse_int(s.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
  }

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s.erase(0, 1);
  }

  long long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    auto expint = parse_int(s.substr(e + 1));
    if (!expint) return std::nullopt;
    exp10 = expint->convert_to<long long>();
    s.erase(e);
  }

  std::string digits = s;
  if (auto dot = s.find('.'); dot != std::string::npos) {
    digits = s.substr(0, dot) + s.substr(dot + 1);
    exp10 -= static_cast<long long>(s.size() - dot - 1);
  }
  if (!all_digits(digits)) return std::nullopt;

  Rational r{BigInt(digits)};
  BigInt pow10 = 1;
  for (long long i = 0; i < std::llabs(exp10); ++i) pow10 *= 10;
  if (exp10 >= 0)
    r *= Rational(pow10);
  else
    r /= Rational(pow10);
  return neg ? -r : r;
}

std::string to_string(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

} // namespace fourprod
