#pragma once

#include "fourprod/core.hpp"
#include "fourprod/mpoly.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace fourprod::diffs {

/// Assigns instance entries to the roles (a,b,c,d) of the reduction; roles c,d
/// are the pair whose unknowns form tau = y*z.
struct Pairing {
  std::array<int, 4> entry_of_role = {0, 1, 2, 3};
  std::string str() const;
};

/// 4*tau*(h+tau)*(c+d-2tau)^2 - (m-2tau)*(n-2tau)*(c-tau)*(d-tau), expanded
/// exactly; leading coefficient is 12 for generic data.
struct TauQuartic {
  std::array<Rational, 5> exact{}; // tau^4 .. tau^0
  std::array<double, 5> coeffs{};
  Pairing pairing;
};

/// Symbolic expansion of the quartic over {tau,h,m,n,c,d}; cached.
const MPoly& tau_quartic_template();

TauQuartic tau_quartic(const RatInstance& inst, const Pairing& pairing);

struct DegenerateDenominator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BackSubstitution {
  Complex tau;
  int branch = +1;    // sign of sqrt(tau)
  Complex u2{};       // d*y - c*z, filled by back_substitute
};

/// Formulas I-IV on the chosen sqrt(tau) branch, in role order (v,x,y,z).
/// Throws DegenerateDenominator when tau = 0, cd-(c+d)tau+tau^2 = 0, or
/// c+d-2tau = 0.
Quadruple back_substitute(const Instance& role_inst, BackSubstitution& bs);

std::vector<Solution> method2_candidates(const Instance& inst, double tol);
std::vector<Solution> method2_candidates(const RatInstance& inst, double tol);

} // namespace fourprod::diffs
