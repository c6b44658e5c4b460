#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace fourprod {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

double to_double(const Rational& r);

/// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double x);

/// Accepts "p/q", integers, and decimal literals like "-1.25" or "3e-2".
std::optional<Rational> parse_rational(const std::string& text);

std::string to_string(const Rational& r);

} // namespace fourprod
