#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fourprod/quartic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace fourprod;

namespace {

bool has_root(const std::vector<Complex>& roots, Complex want, double tol = 1e-8) {
  return std::any_of(roots.begin(), roots.end(),
                     [&](Complex r) { return std::abs(r - want) <= tol * (1 + std::abs(want)); });
}

} // namespace

TEST_CASE("quartic with roots 1,2,3,4") {
  auto res = solve_quartic({1, -10, 35, -50, 24});
  REQUIRE(res.status == QuarticStatus::ok);
  REQUIRE(res.roots.size() == 4);
  for (double want : {1.0, 2.0, 3.0, 4.0}) CHECK(has_root(res.roots, want));
}

TEST_CASE("quartic (w-1)^2 (w^2+1)") {
  auto res = solve_quartic({1, -2, 2, -2, 1});
  REQUIRE(res.roots.size() == 4);
  CHECK(has_root(res.roots, Complex(1, 0), 1e-6)); // double root: reduced accuracy is expected
  CHECK(has_root(res.roots, Complex(0, 1)));
  CHECK(has_root(res.roots, Complex(0, -1)));
}

TEST_CASE("golden-instance Method-I quartic has root w=100") {
  auto res = solve_quartic({-912912, 84182720, 699099456, 1170854400, 400000000});
  CHECK(has_root(res.roots, Complex(100, 0), 1e-6));
}

TEST_CASE("degree reduction and degenerate statuses") {
  auto zero = solve_quartic({0, 0, 0, 0, 0});
  CHECK(zero.status == QuarticStatus::identically_zero);

  auto constant = solve_quartic({0, 0, 0, 0, 7});
  CHECK(constant.status == QuarticStatus::ok);
  CHECK(constant.roots.empty());

  auto linear = solve_quartic({0, 0, 0, 2, -6});
  REQUIRE(linear.roots.size() == 1);
  CHECK(has_root(linear.roots, 3.0));

  auto cubic = solve_quartic({0, 1, -6, 11, -6});
  REQUIRE(cubic.roots.size() == 3);
  for (double want : {1.0, 2.0, 3.0}) CHECK(has_root(cubic.roots, want));
}

TEST_CASE("random quartics: roots reconstruct the monic coefficients") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> dist(-10, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    std::array<double, 5> c;
    for (auto& k : c) k = dist(rng);
    if (std::abs(c[0]) < 1e-3) c[0] = std::copysign(1.0, c[0] == 0 ? 1.0 : c[0]);
    auto res = solve_quartic(c);
    REQUIRE(res.roots.size() == 4);

    // rebuild monic coefficients as elementary symmetric functions
    std::array<Complex, 5> rec{1, 0, 0, 0, 0};
    for (Complex r : res.roots)
      for (int i = 4; i >= 1; --i) rec[i] = rec[i] - r * rec[i - 1];
    double scale = 0;
    for (int i = 0; i < 5; ++i) scale = std::max(scale, std::abs(c[i] / c[0]));
    for (int i = 0; i < 5; ++i) {
      CHECK(std::abs(rec[i] - c[i] / c[0]) <= 1e-8 * scale);
    }
  }
}

TEST_CASE("even octic roots come in +/- pairs") {
  auto res = roots_of_even_octic({1, -30, 273, -820, 576}); // w-roots {1,4,9,16}
  REQUIRE(res.roots.size() == 8);
  for (double want : {1.0, 2.0, 3.0, 4.0}) {
    CHECK(has_root(res.roots, want));
    CHECK(has_root(res.roots, -want));
  }
}

TEST_CASE("golden-instance octic contains u = +/-10") {
  auto res = roots_of_even_octic({-912912, 84182720, 699099456, 1170854400, 400000000});
  CHECK(has_root(res.roots, 10.0, 1e-6));
  CHECK(has_root(res.roots, -10.0, 1e-6));
}

TEST_CASE("octic root set is closed under negation") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    EvenQuartic q{dist(rng), dist(rng), dist(rng), dist(rng), dist(rng)};
    if (std::abs(q.c8) < 0.1) q.c8 = 1;
    auto res = roots_of_even_octic(q);
    for (Complex u : res.roots) CHECK(has_root(res.roots, -u, 1e-7));
  }
}

TEST_CASE("w = 0 double root yields u = 0 with multiplicity") {
  auto res = roots_of_even_octic({1, -2, 1, 0, 0}); // w^2(w-1)^2
  int zeros = 0;
  for (Complex u : res.roots)
    if (std::abs(u) <= 1e-9) ++zeros;
  CHECK(zeros == 4);
  auto clusters = cluster_roots(res.roots, 1.0);
  bool found = false;
  for (auto& [rep, mult] : clusters)
    if (std::abs(rep) <= 1e-9 && mult == 4) found = true;
  CHECK(found);
}

TEST_CASE("identically zero propagates through the octic path") {
  auto res = roots_of_even_octic({0, 0, 0, 0, 0});
  CHECK(res.status == QuarticStatus::identically_zero);
}
