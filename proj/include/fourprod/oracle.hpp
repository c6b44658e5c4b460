#pragma once

#include "fourprod/core.hpp"

#include <optional>

namespace fourprod::oracle {

struct PolishResult {
  Quadruple quadruple;
  double residual = 0;
  bool singular_jacobian = false;
  int iterations = 0;
};

/// Damped Newton on F(v,x,y,z) = (v(x+y+z)-a, ...) with the explicit 4x4
/// Jacobian. Returns the best iterate seen; never worse than the input.
PolishResult newton_polish(const Quadruple& q, const Instance& inst, int max_iter = 30,
                           double tol = 1e-14);

/// Root of g(t) = sqrt(t^2-a)+sqrt(t^2-b)+sqrt(t^2-c)+sqrt(t^2-d) - 2t on
/// t >= sqrt(max entry); g' >= 2 there, so the root is unique when it exists.
/// Returns the all-minus quadruple v_i = t - sqrt(t^2 - inst_i), or nullopt
/// when g is already positive at the left endpoint.
std::optional<Solution> direct_real_solve(const Instance& inst, double tol);

/// g evaluated at t (left endpoint clamped to the real domain).
double half_sum_defect(const Instance& inst, double t);
double half_sum_defect_slope(const Instance& inst, double t);

/// Bracket [t0, hi] used by direct_real_solve.
std::pair<double, double> solve_bracket(const Instance& inst);

} // namespace fourprod::oracle
