#include "fourprod/core.hpp"

#include <algorithm>
#include <cmath>

namespace fourprod {

std::string method_name(Method m) {
  switch (m) {
    case Method::elimination: return "elimination";
    case Method::differences: return "differences";
    case Method::direct: return "direct";
  }
  return "?";
}

Instance forward_map(double v, double x, double y, double z) {
  auto p = forward_products(v, x, y, z);
  return {p[0], p[1], p[2], p[3]};
}

RatInstance forward_map(const RatQuadruple& q) {
  auto p = forward_products(q.v, q.x, q.y, q.z);
  return {p[0], p[1], p[2], p[3]};
}

namespace {

template <class T, class Inv>
Inv invariants_impl(const T& a, const T& b, const T& c, const T& d) {
  Inv s;
  s.A = a + b + c + d;
  s.B = a * b + a * c + a * d + b * c + b * d + c * d;
  s.C = a * b * c + a * b * d + a * c * d + b * c * d;
  s.D = a * b * c * d;
  s.E = s.A * s.A / 4 - s.B;
  s.h = (a + b - c - d) / 2;
  s.k = (a + b + c + d) / 2;
  s.m = b + c + d - a;
  s.n = a + c + d - b;
  return s;
}

} // namespace

InvariantSet invariants(const Instance& inst) {
  return invariants_impl<double, InvariantSet>(inst.a, inst.b, inst.c, inst.d);
}

RatInvariantSet invariants(const RatInstance& inst) {
  return invariants_impl<Rational, RatInvariantSet>(inst.a, inst.b, inst.c, inst.d);
}

double residual(const Quadruple& q, const Instance& inst) {
  auto lhs = forward_products(q.v, q.x, q.y, q.z);
  auto rhs = inst.entries();
  double worst = 0;
  for (int i = 0; i < 4; ++i)
    worst = std::max(worst, std::abs(lhs[i] - rhs[i]) / (1.0 + std::abs(rhs[i])));
  return worst;
}

Rational residual(const RatQuadruple& q, const RatInstance& inst) {
  auto lhs = forward_products(q.v, q.x, q.y, q.z);
  auto rhs = inst.entries();
  auto mag = [](const Rational& r) { return r < 0 ? Rational(-r) : r; };
  Rational worst = 0;
  for (int i = 0; i < 4; ++i)
    worst = std::max(worst, Rational(mag(lhs[i] - rhs[i]) / (1 + mag(rhs[i]))));
  return worst;
}

double quad_distance(const Quadruple& p, const Quadruple& q) {
  double mag = 0, diff = 0;
  auto pe = p.entries(), qe = q.entries();
  for (int i = 0; i < 4; ++i) {
    mag = std::max({mag, std::abs(pe[i]), std::abs(qe[i])});
    diff = std::max(diff, std::abs(pe[i] - qe[i]));
  }
  return diff / (1.0 + mag);
}

std::vector<Solution> dedup_solutions(std::vector<Solution> sols, double threshold) {
  std::stable_sort(sols.begin(), sols.end(),
                   [](const Solution& a, const Solution& b) { return a.residual < b.residual; });
  std::vector<Solution> kept;
  for (auto& s : sols) {
    bool dup = false;
    for (const auto& k : kept)
      if (quad_distance(s.quadruple, k.quadruple) <= threshold) {
        dup = true;
        break;
      }
    if (!dup) kept.push_back(std::move(s));
  }
  auto key = [](const Quadruple& q) {
    return std::array<double, 8>{q.v.real(), q.v.imag(), q.x.real(), q.x.imag(),
                                 q.y.real(), q.y.imag(), q.z.real(), q.z.imag()};
  };
  std::sort(kept.begin(), kept.end(), [&](const Solution& a, const Solution& b) {
    return key(a.quadruple) < key(b.quadruple);
  });
  return kept;
}

} // namespace fourprod
