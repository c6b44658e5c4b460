#include "fourprod/elimination.hpp"

#include "fourprod/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fourprod::elim {

namespace {

const Rational kHalf{1, 2};

MPoly tvar(const std::string& n, int p = 1, Rational c = 1) {
  return MPoly::var(t_registry(), n, p, std::move(c));
}

MPoly tconst(Rational c) { return MPoly::constant(t_registry(), std::move(c)); }

} // namespace

const std::vector<std::string>& t_registry() {
  static const std::vector<std::string> v{"t", "A", "B", "C", "D"};
  return v;
}

const std::vector<std::string>& u_registry() {
  static const std::vector<std::string> v{"u", "A", "C", "D", "E"};
  return v;
}

Quantities quantities_at(const Instance& inst, double t) {
  Quantities q;
  q.t = t;
  q.u = 2 * t;
  auto root = [&](double k) { return std::sqrt(t * t - k); };
  q.p = root(inst.a);
  q.q = root(inst.b);
  q.r = root(inst.c);
  q.s = root(inst.d);
  q.alpha = q.p + q.q + q.r + q.s;
  q.beta = q.p * q.q + q.p * q.r + q.p * q.s + q.q * q.r + q.q * q.s + q.r * q.s;
  auto inv = invariants(inst);
  double A = inv.A, B = inv.B, C = inv.C, D = inv.D;
  double t2 = t * t;
  q.radicand = 4 * std::pow(t, 6) + (2 * B - A * A / 2) * t2 - A * A * A / 8 + A * B / 2 - C;
  double sq = std::sqrt(q.radicand);
  q.gamma_minus = A * t - sq;
  q.gamma_plus = A * t + sq;
  double dbase = 3 * t2 * t2 + A * t2 / 2 - A * A / 8 + B / 2;
  q.delta_minus = dbase - 2 * t * sq;
  q.delta_plus = dbase + 2 * t * sq;
  q.P = 4 * t2 - A;
  q.Q = 6 * t2 * t2 - 3 * A * t2 + B;
  q.R = 4 * std::pow(t, 6) - 3 * A * t2 * t2 + 2 * B * t2 - C;
  q.S = std::pow(t, 8) - A * std::pow(t, 6) + B * t2 * t2 - C * t2 + D;
  return q;
}

std::array<MPoly, 4> build_pqrs() {
  // X^4 - A X^3 + B X^2 - C X + D with X := t^2 - Y, matched against
  // Y^4 - P Y^3 + Q Y^2 - R Y + S.
  std::vector<std::string> reg{"t", "A", "B", "C", "D", "Y"};
  auto v = [&](const std::string& n, int p = 1, Rational c = 1) {
    return MPoly::var(reg, n, p, std::move(c));
  };
  MPoly X = v("t", 2) - v("Y");
  MPoly quartic = X.pow(4) - v("A") * X.pow(3) + v("B") * X.pow(2) - v("C") * X +
                  MPoly::var(reg, "D");
  auto by_y = quartic.collect("Y");
  std::array<MPoly, 4> out = {
      (-by_y[3]).with_vars(t_registry()),  // P
      by_y[2].with_vars(t_registry()),     // Q
      (-by_y[1]).with_vars(t_registry()),  // R
      by_y[0].with_vars(t_registry()),     // S
  };
  if (!(by_y[4] == MPoly::constant(reg, 1))) throw std::logic_error("Y^4 not monic");
  return out;
}

bool verify_factorization_relations() {
  std::vector<std::string> reg{"Z", "alpha", "beta", "gamma", "delta"};
  auto v = [&](const std::string& n, int p = 1, Rational c = 1) {
    return MPoly::var(reg, n, p, std::move(c));
  };
  MPoly minus = v("Z", 4) - v("alpha") * v("Z", 3) + v("beta") * v("Z", 2) - v("gamma") * v("Z") +
                v("delta");
  MPoly plus = v("Z", 4) + v("alpha") * v("Z", 3) + v("beta") * v("Z", 2) + v("gamma") * v("Z") +
               v("delta");
  MPoly product = minus * plus;

  MPoly P = v("alpha", 2) - v("beta") * Rational(2);
  MPoly Q = v("beta", 2) - v("alpha") * v("gamma") * Rational(2) + v("delta") * Rational(2);
  MPoly R = v("gamma", 2) - v("beta") * v("delta") * Rational(2);
  MPoly S = v("delta", 2);
  MPoly octic = v("Z", 8) - P * v("Z", 6) + Q * v("Z", 4) - R * v("Z", 2) + S;
  return product == octic;
}

std::pair<SurdExpr, SurdExpr> derive_gamma_delta(int sign) {
  auto [P, Q, R, S] = build_pqrs();
  (void)P;
  (void)S;
  // alpha = 2t and P = alpha^2 - 2beta give beta = A/2.
  // Q = beta^2 - 2*alpha*gamma + 2*delta  =>  delta = (Q - A^2/4 + 4t*gamma)/2.
  // R = gamma^2 - 2*beta*delta = gamma^2 - A*delta. Substituting delta:
  //   gamma^2 - 2At*gamma = R + A*Q/2 - A^3/8.
  // Completing the square: (gamma - At)^2 = radicand.
  MPoly At = tvar("t") * tvar("A");
  MPoly radicand = R + tvar("A") * Q * kHalf - tvar("A", 3, Rational(1, 8)) + At * At;
  // delta with gamma = At + sign*sqrt(radicand):
  //   delta = (Q - A^2/4)/2 + 2t*gamma = (Q - A^2/4)/2 + 2At^2 + sign*2t*sqrt(.)
  MPoly delta_base = (Q - tvar("A", 2, Rational(1, 4))) * kHalf + tvar("t", 2) * tvar("A") * Rational(2);
  SurdExpr gamma{At, tconst(sign), radicand};
  SurdExpr delta{delta_base, tvar("t", 1, Rational(2 * sign)), radicand};
  return {gamma, delta};
}

namespace {

struct Cell {
  int power; // of t or u
  Rational coeff;
  std::vector<std::pair<std::string, int>> syms;
};

MPoly from_cells(const std::vector<std::string>& reg, const std::string& main,
                 const std::vector<Cell>& cells) {
  MPoly out(reg);
  for (const auto& cell : cells) {
    MPoly term = MPoly::var(reg, main, cell.power, cell.coeff);
    for (auto& [name, pow] : cell.syms) term = term * MPoly::var(reg, name, pow);
    out = out + term;
  }
  return out;
}

TableComparison compare_tables(const MPoly& derived, const MPoly& printed) {
  TableComparison cmp;
  auto ratio = derived.ratio_to(printed);
  if (ratio && *ratio == 1)
    cmp.verdict = Verdict::equal;
  else if (ratio)
    cmp.verdict = Verdict::proportional;
  else
    cmp.verdict = Verdict::mismatch;
  cmp.ratio = ratio.value_or(Rational(0));
  Rational scale = ratio.value_or(Rational(1));

  // one verdict per cell, over the union of printed and derived monomials
  std::map<MPoly::Exponents, std::pair<Rational, Rational>> cells;
  for (const auto& [e, c] : printed.terms()) cells[e].first = c;
  for (const auto& [e, c] : derived.terms()) cells[e].second = c;
  for (const auto& [e, pd] : cells) {
    CellCheck cc;
    cc.monomial = MPoly::monomial_str(printed.vars(), e);
    cc.printed = pd.first;
    cc.derived = pd.second;
    cc.ok = pd.second == scale * pd.first;
    if (!cc.ok) cmp.mismatched_cells.push_back(cc.monomial);
    cmp.cells.push_back(std::move(cc));
  }
  return cmp;
}

DerivationReport build_report() {
  DerivationReport rep;
  auto [gamma, delta] = derive_gamma_delta(-1);
  (void)gamma;
  auto pqrs = build_pqrs();
  const MPoly& S = pqrs[3];

  SurdExpr delta_sq = delta.squared();
  rep.pre_rationalized = SurdExpr{delta_sq.base - S, delta_sq.coeff, delta_sq.radicand};
  rep.master_t = rep.pre_rationalized.rationalized();

  rep.odd_powers_vanish = true;
  for (const auto& [e, c] : rep.master_t.terms())
    if (e[0] % 2 != 0) rep.odd_powers_vanish = false;

  // to the {u, E} basis: t = u/2, B = A^2/4 - E, scaled by 64
  std::vector<std::string> wide{"t", "u", "A", "B", "C", "D", "E"};
  MPoly m = rep.master_t.with_vars(wide);
  m = m.substitute("t", MPoly::var(wide, "u", 1, kHalf));
  m = m.substitute("B", MPoly::var(wide, "A", 2, Rational(1, 4)) - MPoly::var(wide, "E"));
  rep.master_u = (m * Rational(64)).with_vars(u_registry());

  rep.vs_printed_t = compare_tables(rep.master_t, printed_octic_t());
  rep.vs_printed_u = compare_tables(rep.master_u, printed_octic_u());
  return rep;
}

} // namespace

const DerivationReport& derive_master_octic() {
  static const DerivationReport rep = build_report();
  return rep;
}

MPoly printed_octic_t() {
  static const MPoly table = from_cells(
      t_registry(), "t",
      {
          {8, 3, {{"A", 4}}},
          {8, -12, {{"A", 2}, {"B", 1}}},
          {8, 24, {{"A", 1}, {"C", 1}}},
          {8, -48, {{"D", 1}}},
          {6, {5, 4}, {{"A", 5}}},
          {6, -8, {{"A", 3}, {"B", 1}}},
          {6, 7, {{"A", 2}, {"C", 1}}},
          {6, 12, {{"A", 1}, {"B", 2}}},
          {6, -8, {{"A", 1}, {"D", 1}}},
          {6, -12, {{"B", 1}, {"C", 1}}},
          {4, {3, 16}, {{"A", 6}}},
          {4, {-27, 16}, {{"A", 4}, {"B", 1}}},
          {4, {7, 4}, {{"A", 3}, {"C", 1}}},
          {4, {9, 2}, {{"A", 2}, {"B", 2}}},
          {4, 5, {{"A", 2}, {"D", 1}}},
          {4, -7, {{"A", 1}, {"B", 1}, {"C", 1}}},
          {4, -3, {{"B", 3}}},
          {4, -20, {{"B", 1}, {"D", 1}}},
          {4, 9, {{"C", 2}}},
          {2, {3, 256}, {{"A", 7}}},
          {2, {-9, 64}, {{"A", 5}, {"B", 1}}},
          {2, {5, 32}, {{"A", 4}, {"C", 1}}},
          {2, {9, 16}, {{"A", 3}, {"B", 2}}},
          {2, {5, 4}, {{"A", 3}, {"D", 1}}},
          {2, {-5, 4}, {{"A", 2}, {"B", 1}, {"C", 1}}},
          {2, {-3, 4}, {{"A", 1}, {"B", 3}}},
          {2, -5, {{"A", 1}, {"B", 1}, {"D", 1}}},
          {2, {5, 2}, {{"B", 2}, {"C", 1}}},
          {2, 6, {{"C", 1}, {"D", 1}}},
          {0, {1, 4096}, {{"A", 8}}},
          {0, {-1, 256}, {{"A", 6}, {"B", 1}}},
          {0, {3, 128}, {{"A", 4}, {"B", 2}}},
          {0, {-1, 32}, {{"A", 4}, {"D", 1}}},
          {0, {-1, 16}, {{"A", 2}, {"B", 3}}},
          {0, {1, 4}, {{"A", 2}, {"B", 1}, {"D", 1}}},
          {0, {1, 16}, {{"B", 4}}},
          {0, {-1, 2}, {{"B", 2}, {"D", 1}}},
          {0, 1, {{"D", 2}}},
      });
  return table;
}

MPoly printed_octic_u() {
  static const MPoly table = from_cells(
      u_registry(), "u",
      {
          {8, 3, {{"A", 2}, {"E", 1}}},
          {8, 6, {{"A", 1}, {"C", 1}}},
          {8, -12, {{"D", 1}}},
          {6, 2, {{"A", 3}, {"E", 1}}},
          {6, 4, {{"A", 2}, {"C", 1}}},
          {6, 12, {{"A", 1}, {"E", 2}}},
          {6, -8, {{"A", 1}, {"D", 1}}},
          {6, 12, {{"C", 1}, {"E", 1}}},
          {4, 9, {{"A", 2}, {"E", 2}}},
          {4, 28, {{"A", 1}, {"C", 1}, {"E", 1}}},
          {4, 80, {{"D", 1}, {"E", 1}}},
          {4, 36, {{"C", 2}}},
          {4, 12, {{"E", 3}}},
          {2, 12, {{"A", 1}, {"E", 3}}},
          {2, 80, {{"A", 1}, {"D", 1}, {"E", 1}}},
          {2, 96, {{"C", 1}, {"D", 1}}},
          {2, 40, {{"C", 1}, {"E", 2}}},
          {0, 4, {{"E", 4}}},
          {0, -32, {{"D", 1}, {"E", 2}}},
          {0, 64, {{"D", 2}}},
      });
  return table;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::equal: return "equal";
    case Verdict::proportional: return "proportional";
    case Verdict::mismatch: return "mismatch";
  }
  return "?";
}

namespace {

// Coefficient polynomials of the derived u-form octic, by power of u.
const std::map<int, MPoly>& u_coefficients() {
  static const std::map<int, MPoly> coeffs = derive_master_octic().master_u.collect("u");
  return coeffs;
}

} // namespace

std::array<Rational, 5> method1_quartic_exact(const RatInvariantSet& inv) {
  std::map<std::string, Rational> point{
      {"A", inv.A}, {"C", inv.C}, {"D", inv.D}, {"E", inv.E}};
  const auto& coeffs = u_coefficients();
  std::array<Rational, 5> out{};
  for (int i = 0; i < 5; ++i) {
    auto it = coeffs.find(8 - 2 * i);
    out[i] = it == coeffs.end() ? Rational(0) : it->second.eval(point);
  }
  return out;
}

EvenQuartic method1_quartic(const InvariantSet& inv) {
  RatInvariantSet r;
  r.A = rational_from_double(inv.A);
  r.C = rational_from_double(inv.C);
  r.D = rational_from_double(inv.D);
  r.E = rational_from_double(inv.E);
  auto c = method1_quartic_exact(r);
  return {to_double(c[0]), to_double(c[1]), to_double(c[2]), to_double(c[3]), to_double(c[4])};
}

namespace {

std::string format_u(Complex u) {
  std::ostringstream os;
  if (std::abs(u.imag()) <= 1e-12 * (1 + std::abs(u.real())))
    os << u.real();
  else
    os << "(" << u.real() << "," << u.imag() << ")";
  return os.str();
}

std::vector<Solution> candidates_from_quartic(const Instance& inst, const EvenQuartic& quartic,
                                              double tol) {
  std::vector<Solution> found;
  auto octic = roots_of_even_octic(quartic);
  if (octic.status == QuarticStatus::identically_zero) return found; // caller falls back

  double scale = 0;
  for (Complex u : octic.roots) scale = std::max(scale, std::abs(u));
  auto clusters = cluster_roots(octic.roots, std::max(scale, 1.0));

  auto entries = inst.entries();
  for (auto& [u, mult] : clusters) {
    // -u yields exactly the negated candidates; skip it and mirror instead
    if (u.real() < 0 || (u.real() == 0 && u.imag() < 0)) continue;
    for (int mask = 0; mask < 16; ++mask) {
      std::array<Complex, 4> vals;
      std::string signs;
      for (int i = 0; i < 4; ++i) {
        double sgn = (mask >> i) & 1 ? 1.0 : -1.0;
        vals[i] = (u + sgn * std::sqrt(u * u - 4.0 * entries[i])) / 2.0;
        signs += sgn > 0 ? '+' : '-';
      }
      Quadruple q{vals[0], vals[1], vals[2], vals[3]};
      auto polished = oracle::newton_polish(q, inst);
      if (polished.residual <= tol) {
        std::ostringstream branch;
        branch << "u=" << format_u(u) << ";signs=" << signs;
        found.push_back(
            {polished.quadruple, polished.residual, Method::elimination, branch.str()});
        Quadruple neg{-polished.quadruple.v, -polished.quadruple.x, -polished.quadruple.y,
                      -polished.quadruple.z};
        found.push_back({neg, residual(neg, inst), Method::elimination,
                         "u=-" + format_u(u) + ";signs=" + signs + ";negated"});
      }
    }
  }
  return dedup_solutions(std::move(found));
}

} // namespace

std::vector<Solution> method1_candidates(const Instance& inst, double tol) {
  return candidates_from_quartic(inst, method1_quartic(invariants(inst)), tol);
}

std::vector<Solution> method1_candidates(const RatInstance& inst, double tol) {
  auto c = method1_quartic_exact(invariants(inst));
  EvenQuartic q{to_double(c[0]), to_double(c[1]), to_double(c[2]), to_double(c[3]),
                to_double(c[4])};
  return candidates_from_quartic(inst.to_double(), q, tol);
}

} // namespace fourprod::elim
