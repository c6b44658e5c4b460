#pragma once

#include "fourprod/mpoly.hpp"

namespace fourprod {

/// base + coeff * sqrt(radicand), all parts exact polynomials.
struct SurdExpr {
  MPoly base;
  MPoly coeff;
  MPoly radicand;

  /// (base^2 + coeff^2*radicand) + (2*base*coeff)*sqrt(radicand).
  SurdExpr squared() const {
    return {base * base + coeff * coeff * radicand, base * coeff * Rational(2), radicand};
  }

  /// For an expression asserted equal to zero: base^2 - coeff^2*radicand.
  /// Vanishes on both surd branches; spurious opposite-branch roots are
  /// filtered downstream by residual.
  MPoly rationalized() const { return base * base - coeff * coeff * radicand; }
};

} // namespace fourprod
