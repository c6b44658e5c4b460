#pragma once

#include "fourprod/rational.hpp"

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace fourprod {

using Complex = std::complex<double>;

/// The given right-hand sides: entry i pairs with unknown i.
struct Instance {
  double a = 0, b = 0, c = 0, d = 0;
  std::array<double, 4> entries() const { return {a, b, c, d}; }
};

struct RatInstance {
  Rational a, b, c, d;
  std::array<Rational, 4> entries() const { return {a, b, c, d}; }
  Instance to_double() const {
    return {fourprod::to_double(a), fourprod::to_double(b), fourprod::to_double(c),
            fourprod::to_double(d)};
  }
};

struct Quadruple {
  Complex v, x, y, z;
  std::array<Complex, 4> entries() const { return {v, x, y, z}; }
};

struct RatQuadruple {
  Rational v, x, y, z;
  std::array<Rational, 4> entries() const { return {v, x, y, z}; }
  Quadruple to_complex() const {
    return {fourprod::to_double(v), fourprod::to_double(x), fourprod::to_double(y),
            fourprod::to_double(z)};
  }
};

enum class Method { elimination, differences, direct };
std::string method_name(Method m);

struct Solution {
  Quadruple quadruple;
  double residual = 0;
  Method method = Method::direct;
  std::string branch;
};

/// Elementary symmetric functions of (a,b,c,d) plus the derived half-sum and
/// half-difference scalars.
struct InvariantSet {
  double A = 0, B = 0, C = 0, D = 0, E = 0, h = 0, k = 0, m = 0, n = 0;
};

struct RatInvariantSet {
  Rational A, B, C, D, E, h, k, m, n;
};

/// (v(x+y+z), x(v+y+z), y(v+x+z), z(v+x+y)) for any scalar type.
template <class T>
std::array<T, 4> forward_products(const T& v, const T& x, const T& y, const T& z) {
  return {v * (x + y + z), x * (v + y + z), y * (v + x + z), z * (v + x + y)};
}

Instance forward_map(double v, double x, double y, double z);
RatInstance forward_map(const RatQuadruple& q);

InvariantSet invariants(const Instance& inst);
RatInvariantSet invariants(const RatInstance& inst);

/// max_i |lhs_i - rhs_i| / (1 + |rhs_i|).
double residual(const Quadruple& q, const Instance& inst);
Rational residual(const RatQuadruple& q, const RatInstance& inst);

/// max coordinate distance relative to (1 + max coordinate magnitude).
double quad_distance(const Quadruple& p, const Quadruple& q);

constexpr double kDedupThreshold = 1e-7;

/// Keeps the lowest-residual representative of each cluster; output is
/// canonically ordered.
std::vector<Solution> dedup_solutions(std::vector<Solution> sols,
                                      double threshold = kDedupThreshold);

} // namespace fourprod
