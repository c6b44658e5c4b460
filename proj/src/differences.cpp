#include "fourprod/differences.hpp"

#include "fourprod/oracle.hpp"
#include "fourprod/quartic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fourprod::diffs {

std::string Pairing::str() const {
  std::string s;
  for (int i : entry_of_role) s += static_cast<char>('0' + i);
  return s;
}

const MPoly& tau_quartic_template() {
  static const MPoly tmpl = [] {
    std::vector<std::string> reg{"tau", "h", "m", "n", "c", "d"};
    auto v = [&](const std::string& n) { return MPoly::var(reg, n); };
    MPoly two_tau = v("tau") * Rational(2);
    MPoly lhs = v("tau") * Rational(4) * (v("h") + v("tau")) *
                (v("c") + v("d") - two_tau).pow(2);
    MPoly rhs = (v("m") - two_tau) * (v("n") - two_tau) * (v("c") - v("tau")) *
                (v("d") - v("tau"));
    return lhs - rhs;
  }();
  return tmpl;
}

TauQuartic tau_quartic(const RatInstance& inst, const Pairing& pairing) {
  auto entries = inst.entries();
  Rational a = entries[pairing.entry_of_role[0]];
  Rational b = entries[pairing.entry_of_role[1]];
  Rational c = entries[pairing.entry_of_role[2]];
  Rational d = entries[pairing.entry_of_role[3]];
  std::map<std::string, Rational> point{{"h", (a + b - c - d) / 2},
                                        {"m", b + c + d - a},
                                        {"n", a + c + d - b},
                                        {"c", c},
                                        {"d", d}};
  auto by_tau = tau_quartic_template().collect("tau");
  TauQuartic out;
  out.pairing = pairing;
  for (int p = 0; p <= 4; ++p) {
    auto it = by_tau.find(p);
    out.exact[4 - p] = it == by_tau.end() ? Rational(0) : it->second.eval(point);
    out.coeffs[4 - p] = to_double(out.exact[4 - p]);
  }
  return out;
}

Quadruple back_substitute(const Instance& role_inst, BackSubstitution& bs) {
  double c = role_inst.c, d = role_inst.d;
  Complex tau = bs.tau;
  double scale = 1 + std::abs(c) + std::abs(d) + std::abs(tau);
  if (std::abs(tau) <= 1e-12 * scale) throw DegenerateDenominator("tau = 0");
  Complex w = c * d - (c + d) * tau + tau * tau;
  if (std::abs(w) <= 1e-12 * scale * scale)
    throw DegenerateDenominator("cd - (c+d)tau + tau^2 = 0");
  Complex cd2t = c + d - 2.0 * tau;
  if (std::abs(cd2t) <= 1e-12 * scale) throw DegenerateDenominator("c + d - 2tau = 0");

  Complex st = static_cast<double>(bs.branch) * std::sqrt(tau);
  Complex sw = std::sqrt(w);
  double m = role_inst.b + c + d - role_inst.a;
  double n = role_inst.a + c + d - role_inst.b;
  Complex y = (c - tau) * st / sw;
  Complex z = (d - tau) * st / sw;
  Complex v = (n - 2.0 * tau) * sw / (2.0 * cd2t * st);
  Complex x = (m - 2.0 * tau) * sw / (2.0 * cd2t * st);
  bs.u2 = d * y - c * z;
  return {v, x, y, z};
}

namespace {

// Reduced three-unknown solve used when tau = 0 forces one of y,z to vanish:
// p(q+r) = A, q(p+r) = B, r(p+q) = C via the half-sum trick.
std::optional<std::array<Complex, 3>> solve_three(double A, double B, double C) {
  std::array<double, 3> rhs{A, B, C};
  double mx = *std::max_element(rhs.begin(), rhs.end());
  double T0 = std::sqrt(std::max(0.0, mx));
  auto g = [&](double T) {
    double s = -T;
    for (double k : rhs) s += std::sqrt(std::max(0.0, T * T - k));
    return s;
  };
  if (g(T0) > 0) return std::nullopt;
  double hi = T0 + std::max(1.0, std::abs(A) + std::abs(B) + std::abs(C));
  while (g(hi) < 0) hi = T0 + 2 * (hi - T0);
  double lo = T0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * (1 + hi); ++it) {
    double mid = (lo + hi) / 2;
    (g(mid) <= 0 ? lo : hi) = mid;
  }
  double T = (lo + hi) / 2;
  std::array<Complex, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = T - std::sqrt(std::max(0.0, T * T - rhs[i]));
  return out;
}

struct RoleView {
  Instance role_inst;
  Pairing pairing;
};

Quadruple unpermute(const Pairing& p, const Quadruple& role_quad) {
  std::array<Complex, 4> out{};
  auto rq = role_quad.entries();
  for (int k = 0; k < 4; ++k) out[p.entry_of_role[k]] = rq[k];
  return {out[0], out[1], out[2], out[3]};
}

void try_candidate(const Instance& inst, const Pairing& pairing, const Quadruple& role_quad,
                   const std::string& branch, double tol, std::vector<Solution>& found) {
  Quadruple q = unpermute(pairing, role_quad);
  auto polished = oracle::newton_polish(q, inst);
  if (polished.residual <= tol)
    found.push_back({polished.quadruple, polished.residual, Method::differences, branch});
}

void run_pairing(const Instance& inst, const RatInstance& rinst, const Pairing& pairing,
                 double tol, std::vector<Solution>& found) {
  auto quartic = tau_quartic(rinst, pairing);
  auto roots = solve_quartic(quartic.coeffs);
  if (roots.status == QuarticStatus::identically_zero) return;

  auto entries = inst.entries();
  Instance role_inst{entries[pairing.entry_of_role[0]], entries[pairing.entry_of_role[1]],
                     entries[pairing.entry_of_role[2]], entries[pairing.entry_of_role[3]]};
  double rh = (role_inst.a + role_inst.b - role_inst.c - role_inst.d) / 2;

  double scale = 0;
  for (Complex r : roots.roots) scale = std::max(scale, std::abs(r));
  auto clusters = cluster_roots(roots.roots, std::max(scale, 1.0));

  for (auto& [tau, mult] : clusters) {
    for (int branch : {+1, -1}) {
      std::ostringstream tag;
      tag << "pairing=" << pairing.str() << ";tau=" << tau.real();
      if (std::abs(tau.imag()) > 1e-12 * (1 + std::abs(tau.real())))
        tag << (tau.imag() >= 0 ? "+" : "") << tau.imag() << "i";
      tag << ";branch=" << (branch > 0 ? "+" : "-");
      try {
        BackSubstitution bs{tau, branch};
        Quadruple role_quad = back_substitute(role_inst, bs);
        try_candidate(inst, pairing, role_quad, tag.str(), tol, found);
      } catch (const DegenerateDenominator&) {
        double c = role_inst.c, d = role_inst.d;
        double sc = 1 + std::abs(c) + std::abs(d) + std::abs(tau);
        if (std::abs(tau) <= 1e-12 * sc) {
          // tau = 0: one of y,z vanishes; requires the matching entry to be 0
          if (branch < 0) continue;
          if (std::abs(c) <= 1e-12 * sc) {
            if (auto three = solve_three(role_inst.a, role_inst.b, role_inst.d))
              try_candidate(inst, pairing, {(*three)[0], (*three)[1], 0.0, (*three)[2]},
                            tag.str() + ";y=0", tol, found);
          } else if (std::abs(d) <= 1e-12 * sc) {
            if (auto three = solve_three(role_inst.a, role_inst.b, role_inst.c))
              try_candidate(inst, pairing, {(*three)[0], (*three)[1], (*three)[2], 0.0},
                            tag.str() + ";z=0", tol, found);
          }
          continue;
        }
        Complex w = c * d - (c + d) * tau + tau * tau;
        if (std::abs(w) <= 1e-12 * sc * sc) continue;
        // c + d - 2tau = 0: removable singularity in formulas III-IV;
        // recover v,x from v+x = sqrt(w)/sqrt(tau) and v*x = h + tau.
        Complex st = static_cast<double>(branch) * std::sqrt(tau);
        Complex sw = std::sqrt(w);
        Complex y = (c - tau) * st / sw;
        Complex z = (d - tau) * st / sw;
        Complex sum = sw / st;
        Complex prod = rh + tau;
        Complex disc = std::sqrt(sum * sum - 4.0 * prod);
        for (int order : {+1, -1}) {
          Complex v = (sum + static_cast<double>(order) * disc) / 2.0;
          Complex x = sum - v;
          try_candidate(inst, pairing, {v, x, y, z}, tag.str() + ";vx-quadratic", tol, found);
        }
      }
    }
  }
}

std::vector<Solution> candidates_impl(const Instance& inst, const RatInstance& rinst,
                                      double tol) {
  std::vector<Solution> found;
  std::vector<Pairing> pairings{Pairing{{0, 1, 2, 3}}};
  double sc = 1;
  for (double e : inst.entries()) sc = std::max(sc, std::abs(e));
  bool degenerate = std::abs(inst.c - inst.d) <= 1e-9 * sc ||
                    std::abs(inst.c * inst.d) <= 1e-12 * sc * sc;
  if (degenerate) {
    pairings.push_back(Pairing{{0, 2, 1, 3}});
    pairings.push_back(Pairing{{0, 3, 1, 2}});
  }
  for (const auto& p : pairings) run_pairing(inst, rinst, p, tol, found);
  return dedup_solutions(std::move(found));
}

} // namespace

std::vector<Solution> method2_candidates(const Instance& inst, double tol) {
  RatInstance r{rational_from_double(inst.a), rational_from_double(inst.b),
                rational_from_double(inst.c), rational_from_double(inst.d)};
  return candidates_impl(inst, r, tol);
}

std::vector<Solution> method2_candidates(const RatInstance& inst, double tol) {
  return candidates_impl(inst.to_double(), inst, tol);
}

} // namespace fourprod::diffs
