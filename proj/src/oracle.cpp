#include "fourprod/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace fourprod::oracle {

namespace {

// Gaussian elimination with partial pivoting on a 4x4 complex system.
// Returns false when a pivot vanishes.
bool solve4(std::array<std::array<Complex, 4>, 4> a, std::array<Complex, 4> b,
            std::array<Complex, 4>& out) {
  double scale = 0;
  for (auto& row : a)
    for (auto& e : row) scale = std::max(scale, std::abs(e));
  if (scale == 0) return false;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) <= 1e-14 * scale) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = col + 1; r < 4; ++r) {
      Complex f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int r = 3; r >= 0; --r) {
    Complex s = b[r];
    for (int c = r + 1; c < 4; ++c) s -= a[r][c] * out[c];
    out[r] = s / a[r][r];
  }
  return true;
}

} // namespace

PolishResult newton_polish(const Quadruple& q, const Instance& inst, int max_iter, double tol) {
  PolishResult res{q, residual(q, inst), false, 0};
  Quadruple cur = q;
  double curres = res.residual;
  for (int it = 0; it < max_iter && curres > tol; ++it) {
    auto [v, x, y, z] = cur;
    auto lhs = forward_products(v, x, y, z);
    std::array<Complex, 4> F = {lhs[0] - inst.a, lhs[1] - inst.b, lhs[2] - inst.c,
                                lhs[3] - inst.d};
    std::array<std::array<Complex, 4>, 4> J = {{{x + y + z, v, v, v},
                                                {x, v + y + z, x, x},
                                                {y, y, v + x + z, y},
                                                {z, z, z, v + x + y}}};
    std::array<Complex, 4> step{};
    if (!solve4(J, F, step)) {
      if (it == 0) res.singular_jacobian = true;
      break;
    }
    double lambda = 1.0;
    Quadruple next = cur;
    double nextres = curres;
    bool improved = false;
    for (int halving = 0; halving < 25; ++halving) {
      Quadruple trial{cur.v - lambda * step[0], cur.x - lambda * step[1],
                      cur.y - lambda * step[2], cur.z - lambda * step[3]};
      double tr = residual(trial, inst);
      if (tr < curres) {
        next = trial;
        nextres = tr;
        improved = true;
        break;
      }
      lambda /= 2;
    }
    if (!improved) break;
    cur = next;
    curres = nextres;
    res.iterations = it + 1;
    if (curres < res.residual) {
      res.quadruple = cur;
      res.residual = curres;
    }
  }
  return res;
}

double half_sum_defect(const Instance& inst, double t) {
  double g = -2 * t;
  for (double k : inst.entries()) g += std::sqrt(std::max(0.0, t * t - k));
  return g;
}

double half_sum_defect_slope(const Instance& inst, double t) {
  double s = -2;
  for (double k : inst.entries()) {
    double root = std::sqrt(std::max(0.0, t * t - k));
    s += root > 0 ? t / root : std::numeric_limits<double>::infinity();
  }
  return s;
}

std::pair<double, double> solve_bracket(const Instance& inst) {
  auto e = inst.entries();
  double mx = *std::max_element(e.begin(), e.end());
  double t0 = std::sqrt(std::max(0.0, mx));
  // g(t) ~ 2t - A/(2t) for large t, so t0 + A is past the sign change.
  double A = std::abs(inst.a) + std::abs(inst.b) + std::abs(inst.c) + std::abs(inst.d);
  double hi = t0 + std::max(A, 1.0);
  while (half_sum_defect(inst, hi) < 0) hi = t0 + 2 * (hi - t0);
  return {t0, hi};
}

std::optional<Solution> direct_real_solve(const Instance& inst, double tol) {
  auto [t0, hi] = solve_bracket(inst);
  if (half_sum_defect(inst, t0) > 0) return std::nullopt;

  double lo = t0;
  for (int it = 0; it < 80 && hi - lo > 1e-14 * (1 + hi); ++it) {
    double mid = (lo + hi) / 2;
    double g = half_sum_defect(inst, mid);
    // Newton acceleration once the bracket is reasonably tight
    if (it > 20) {
      double slope = half_sum_defect_slope(inst, mid);
      if (std::isfinite(slope) && slope > 0) {
        double nt = mid - g / slope;
        if (nt > lo && nt < hi) {
          double ng = half_sum_defect(inst, nt);
          if (ng <= 0)
            lo = nt;
          else
            hi = nt;
          continue;
        }
      }
    }
    if (g <= 0)
      lo = mid;
    else
      hi = mid;
  }
  double t = (lo + hi) / 2;
  Quadruple q;
  auto e = inst.entries();
  std::array<Complex, 4> vals;
  for (int i = 0; i < 4; ++i) vals[i] = t - std::sqrt(std::max(0.0, t * t - e[i]));
  q = {vals[0], vals[1], vals[2], vals[3]};
  auto polished = newton_polish(q, inst);
  (void)tol;
  return Solution{polished.quadruple, polished.residual, Method::direct, "all-minus"};
}

} // namespace fourprod::oracle
