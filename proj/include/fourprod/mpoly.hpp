#pragma once

#include "fourprod/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fourprod {

/// Exact-rational multivariate polynomial over a fixed ordered symbol set.
/// Dense exponent vectors keyed in a map; zero coefficients are never stored.
class MPoly {
public:
  using Exponents = std::vector<int>;

  MPoly() = default;
  explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MPoly constant(std::vector<std::string> vars, Rational c);
  static MPoly var(std::vector<std::string> vars, const std::string& name, int power = 1,
                   Rational coeff = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree(const std::string& name) const;
  Rational coeff(const Exponents& e) const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rational& c) const;
  bool operator==(const MPoly& o) const;

  MPoly pow(int n) const;

  /// Replaces every occurrence of `name` by `value` and re-normalizes.
  MPoly substitute(const std::string& name, const MPoly& value) const;

  /// Coefficient polynomials by power of `name` (that variable zeroed out,
  /// registry unchanged).
  std::map<int, MPoly> collect(const std::string& name) const;

  /// Re-expresses the polynomial over a different registry. Variables that are
  /// dropped must not appear with nonzero exponent.
  MPoly with_vars(std::vector<std::string> newvars) const;

  Rational eval(const std::map<std::string, Rational>& point) const;

  /// If *this == r * other for a single nonzero rational r, returns r.
  /// Zero == r * zero reports r = 1.
  std::optional<Rational> ratio_to(const MPoly& other) const;

  std::string str() const;
  static std::string monomial_str(const std::vector<std::string>& vars, const Exponents& e);

private:
  int var_index(const std::string& name) const;
  void add_term(const Exponents& e, const Rational& c);
  void check_same_registry(const MPoly& o) const;

  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

} // namespace fourprod
