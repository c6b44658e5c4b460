#pragma once

#include "fourprod/core.hpp"
#include "fourprod/quartic.hpp"
#include "fourprod/surd.hpp"

#include <array>
#include <vector>

namespace fourprod::elim {

/// Numeric values of every quantity in the elimination chain at a given
/// half-sum t: p,q,r,s = sqrt(t^2 - entry), the biquadratic coefficients
/// alpha..delta on both surd branches, and P,Q,R,S.
struct Quantities {
  double t = 0, u = 0;
  double p = 0, q = 0, r = 0, s = 0;
  double alpha = 0, beta = 0;
  double gamma_minus = 0, gamma_plus = 0;
  double delta_minus = 0, delta_plus = 0;
  double radicand = 0;
  double P = 0, Q = 0, R = 0, S = 0;
};

Quantities quantities_at(const Instance& inst, double t);

/// Registry used by the t-side derivation.
const std::vector<std::string>& t_registry(); // {t, A, B, C, D}
const std::vector<std::string>& u_registry(); // {u, A, C, D, E}

/// P,Q,R,S as polynomials in {t,A,B,C,D}, obtained by substituting
/// X := t^2 - Y into X^4 - A X^3 + B X^2 - C X + D and matching the monic
/// quartic in Y, not by transcription.
std::array<MPoly, 4> build_pqrs();

/// Formal check that (Z^4 - aZ^3 + bZ^2 - gZ + d)(Z^4 + aZ^3 + bZ^2 + gZ + d)
/// equals Z^8 - P Z^6 + Q Z^4 - R Z^2 + S under P = a^2 - 2b, Q = b^2 - 2ag + 2d,
/// R = g^2 - 2bd, S = d^2.
bool verify_factorization_relations();

/// gamma = A t + sign*sqrt(radicand), delta = (3t^4 + A t^2/2 - A^2/8 + B/2)
/// + sign*2t*sqrt(radicand); both derived from the factorization relations.
std::pair<SurdExpr, SurdExpr> derive_gamma_delta(int sign = -1);

enum class Verdict { equal, proportional, mismatch };
std::string verdict_name(Verdict v);

struct CellCheck {
  std::string monomial;
  Rational printed;
  Rational derived;
  bool ok = false;
};

struct TableComparison {
  Verdict verdict = Verdict::mismatch;
  Rational ratio; // derived = ratio * printed when not mismatch
  std::vector<CellCheck> cells;
  std::vector<std::string> mismatched_cells;
};

struct DerivationReport {
  SurdExpr pre_rationalized; // delta^2 - S, asserted zero
  MPoly master_t;            // rationalized octic in {t,A,B,C,D}
  MPoly master_u;            // 64 * master_t under t=u/2, B=A^2/4-E, in {u,A,C,D,E}
  TableComparison vs_printed_t;
  TableComparison vs_printed_u;
  bool odd_powers_vanish = false;
};

/// Full symbolic derivation; cached after the first call.
const DerivationReport& derive_master_octic();

/// Transcriptions of the two printed coefficient tables (verification
/// targets only; the numeric pipeline consumes the derived polynomials).
MPoly printed_octic_t();
MPoly printed_octic_u();

/// Quartic in w = u^2 whose coefficients come from the derived u-form octic.
EvenQuartic method1_quartic(const InvariantSet& inv);
std::array<Rational, 5> method1_quartic_exact(const RatInvariantSet& inv);

/// Enumerates sign patterns v_i = (u + s_i*sqrt(u^2 - 4*inst_i))/2 over the
/// octic's u-roots, Newton-polishes, filters by residual, dedups. Negated u
/// is skipped; accepted solutions are mirrored instead.
std::vector<Solution> method1_candidates(const Instance& inst, double tol);
std::vector<Solution> method1_candidates(const RatInstance& inst, double tol);

} // namespace fourprod::elim
