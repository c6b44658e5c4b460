#include "fourprod/quartic.hpp"

#include <algorithm>
#include <cmath>

namespace fourprod {

namespace {

Complex horner(const std::vector<double>& c, Complex x) {
  Complex v = c[0];
  for (size_t i = 1; i < c.size(); ++i) v = v * x + c[i];
  return v;
}

Complex horner_deriv(const std::vector<double>& c, Complex x) {
  Complex v = c[0] * static_cast<double>(c.size() - 1);
  for (size_t i = 1; i + 1 < c.size(); ++i)
    v = v * x + c[i] * static_cast<double>(c.size() - 1 - i);
  return v;
}

// One or two damped Newton steps tighten closed-form roots; the elimination
// quartics have coefficients spanning ten orders of magnitude and raw closed
// forms lose digits.
Complex polish_root(const std::vector<double>& c, Complex x) {
  double maxc = 0;
  for (double k : c) maxc = std::max(maxc, std::abs(k));
  Complex best = x;
  double bestp = std::abs(horner(c, x));
  for (int it = 0; it < 8; ++it) {
    Complex p = horner(c, x);
    Complex dp = horner_deriv(c, x);
    if (std::abs(dp) == 0) break;
    Complex step = p / dp;
    x -= step;
    double px = std::abs(horner(c, x));
    if (px < bestp) {
      bestp = px;
      best = x;
    }
    double scale = maxc * std::pow(1.0 + std::abs(x), c.size() - 1);
    if (px <= 1e-14 * scale || std::abs(step) <= 1e-15 * (1.0 + std::abs(x))) break;
  }
  return best;
}

// Stable quadratic x^2 + b x + c with real coefficients.
std::array<Complex, 2> quadratic(double b, double c) {
  double disc = b * b - 4 * c;
  if (disc >= 0) {
    double s = std::sqrt(disc);
    double q = b >= 0 ? -(b + s) / 2 : -(b - s) / 2;
    if (q == 0) return {Complex(0), Complex(-b)};
    return {Complex(q), Complex(c / q)};
  }
  double re = -b / 2, im = std::sqrt(-disc) / 2;
  return {Complex(re, im), Complex(re, -im)};
}

std::array<Complex, 2> quadratic_c(Complex b, Complex c) {
  Complex s = std::sqrt(b * b - 4.0 * c);
  if (std::real(std::conj(b) * s) > 0) s = -s; // avoid cancellation in -b - s
  Complex q = (-b + s) / 2.0;
  if (std::abs(q) == 0) return {Complex(0), -b};
  return {q, c / q};
}

// Real roots of monic x^3 + a x^2 + b x + c, plus the complex pair when any.
std::vector<Complex> cubic(double a, double b, double c) {
  double p = b - a * a / 3;
  double q = 2 * a * a * a / 27 - a * b / 3 + c;
  double shift = -a / 3;
  double disc = q * q / 4 + p * p * p / 27;
  std::vector<Complex> roots;
  if (disc > 0) {
    double s = std::sqrt(disc);
    // pick the branch where -q/2 and the surd do not cancel
    double u = std::cbrt(q <= 0 ? -q / 2 + s : -q / 2 - s);
    double t0 = (u == 0) ? 0.0 : u - p / (3 * u);
    double r = t0 + shift;
    roots.push_back(r);
    // deflate: x^3+ax^2+bx+c = (x-r)(x^2 + (a+r)x + ?); use Vieta for the rest
    auto pair = quadratic(a + r, r == 0 ? b : -c / r);
    roots.push_back(pair[0]);
    roots.push_back(pair[1]);
  } else {
    double mp = std::sqrt(std::max(0.0, -p / 3));
    double theta;
    if (mp == 0)
      theta = 0;
    else
      theta = std::acos(std::clamp(3 * q / (2 * p * mp), -1.0, 1.0));
    for (int k = 0; k < 3; ++k)
      roots.push_back(2 * mp * std::cos((theta - 2 * M_PI * k) / 3) + shift);
  }
  return roots;
}

std::vector<Complex> solve_monic_quartic(double a, double b, double c, double d) {
  // depressed: x = s - a/4  ->  s^4 + p s^2 + q s + r
  double p = b - 3 * a * a / 8;
  double q = c - a * b / 2 + a * a * a / 8;
  double r = d - a * c / 4 + a * a * b / 16 - 3 * a * a * a * a / 256;
  double shift = -a / 4;
  double scaleq = std::max({1.0, std::abs(p), std::abs(r)});
  std::vector<Complex> roots;
  if (std::abs(q) <= 1e-14 * scaleq) {
    // biquadratic in s^2
    auto ys = quadratic_c(Complex(p), Complex(r));
    for (Complex y : ys) {
      Complex s = std::sqrt(y);
      roots.push_back(s);
      roots.push_back(-s);
    }
  } else {
    // resolvent: m^3 + p m^2 + (p^2/4 - r) m - q^2/8 = 0 has a root m > 0
    auto ms = cubic(p, p * p / 4 - r, -q * q / 8);
    double m = 0;
    for (Complex mc : ms)
      if (std::abs(mc.imag()) <= 1e-9 * (1 + std::abs(mc.real())))
        m = std::max(m, mc.real());
    m = std::max(m, 1e-300);
    double g = std::sqrt(2 * m);
    double off = q / (2 * g);
    auto pair1 = quadratic(g, p / 2 + m - off);
    auto pair2 = quadratic(-g, p / 2 + m + off);
    roots = {pair1[0], pair1[1], pair2[0], pair2[1]};
  }
  for (auto& s : roots) s += shift;
  return roots;
}

} // namespace

QuarticRoots solve_quartic(const std::array<double, 5>& c) {
  double maxc = 0;
  for (double k : c) maxc = std::max(maxc, std::abs(k));
  if (maxc == 0) return {QuarticStatus::identically_zero, {}};

  int lead = 0;
  while (lead < 4 && std::abs(c[lead]) <= 1e-14 * maxc) ++lead;
  std::vector<double> p(c.begin() + lead, c.end());
  double leadc = c[lead];
  for (auto& k : p) k /= leadc;
  p[0] = 1.0;

  QuarticRoots out;
  switch (p.size()) {
    case 1: break; // nonzero constant: no roots
    case 2: out.roots = {Complex(-p[1])}; break;
    case 3: {
      auto pair = quadratic(p[1], p[2]);
      out.roots = {pair[0], pair[1]};
      break;
    }
    case 4: out.roots = cubic(p[1], p[2], p[3]); break;
    case 5: out.roots = solve_monic_quartic(p[1], p[2], p[3], p[4]); break;
  }
  for (auto& r : out.roots) r = polish_root(p, r);
  return out;
}

QuarticRoots roots_of_even_octic(const EvenQuartic& q) {
  QuarticRoots ws = solve_quartic(q.coeffs());
  QuarticRoots out;
  out.status = ws.status;
  for (Complex w : ws.roots) {
    Complex u = std::sqrt(w);
    out.roots.push_back(u);
    out.roots.push_back(-u);
  }
  return out;
}

std::vector<std::pair<Complex, int>> cluster_roots(const std::vector<Complex>& roots,
                                                   double scale) {
  std::vector<std::pair<Complex, int>> clusters;
  for (Complex r : roots) {
    bool merged = false;
    for (auto& [rep, count] : clusters)
      if (std::abs(r - rep) <= 1e-7 * scale) {
        rep = (rep * static_cast<double>(count) + r) / static_cast<double>(count + 1);
        ++count;
        merged = true;
        break;
      }
    if (!merged) clusters.emplace_back(r, 1);
  }
  return clusters;
}

} // namespace fourprod
