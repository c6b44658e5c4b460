#pragma once

#include "fourprod/core.hpp"

#include <array>
#include <vector>

namespace fourprod {

/// c8*w^4 + c6*w^3 + c4*w^2 + c2*w + c0 in w = u^2.
struct EvenQuartic {
  double c8 = 0, c6 = 0, c4 = 0, c2 = 0, c0 = 0;
  std::array<double, 5> coeffs() const { return {c8, c6, c4, c2, c0}; }
};

enum class QuarticStatus { ok, identically_zero };

struct QuarticRoots {
  QuarticStatus status = QuarticStatus::ok;
  std::vector<Complex> roots; // with multiplicity
};

/// All complex roots of c[0]*x^4 + ... + c[4], leading zeros degree-reduced.
/// Closed-form resolvent-cubic route followed by Newton polish.
QuarticRoots solve_quartic(const std::array<double, 5>& c);

/// {+sqrt(w), -sqrt(w)} for each root w of the even quartic; principal branch.
QuarticRoots roots_of_even_octic(const EvenQuartic& q);

/// Roots within 1e-7*scale of each other collapsed to (value, multiplicity).
std::vector<std::pair<Complex, int>> cluster_roots(const std::vector<Complex>& roots,
                                                   double scale);

} // namespace fourprod
