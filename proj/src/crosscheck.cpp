#include "fourprod/crosscheck.hpp"

#include "fourprod/differences.hpp"
#include "fourprod/elimination.hpp"
#include "fourprod/oracle.hpp"

#include <algorithm>

namespace fourprod::oracle {

namespace {
constexpr double kMatchThreshold = 1e-6;
}

CrossCheckReport cross_check(const Instance& inst, double tol) {
  CrossCheckReport rep;
  rep.elimination = elim::method1_candidates(inst, tol);
  rep.differences = diffs::method2_candidates(inst, tol);
  rep.direct = direct_real_solve(inst, tol);
  if (rep.direct && rep.direct->residual > tol) rep.direct.reset();
  rep.direct_absent = !rep.direct.has_value();

  std::vector<bool> used(rep.differences.size(), false);
  for (int i = 0; i < static_cast<int>(rep.elimination.size()); ++i) {
    int best = -1;
    double bestd = kMatchThreshold;
    for (int j = 0; j < static_cast<int>(rep.differences.size()); ++j) {
      if (used[j]) continue;
      double d = quad_distance(rep.elimination[i].quadruple, rep.differences[j].quadruple);
      if (d <= bestd) {
        bestd = d;
        best = j;
      }
    }
    if (best >= 0) {
      used[best] = true;
      rep.matched.emplace_back(i, best);
    } else {
      rep.unmatched_elimination.push_back(i);
    }
  }
  for (int j = 0; j < static_cast<int>(rep.differences.size()); ++j)
    if (!used[j]) rep.unmatched_differences.push_back(j);

  if (rep.direct) {
    auto contains = [&](const std::vector<Solution>& set) {
      return std::any_of(set.begin(), set.end(), [&](const Solution& s) {
        return quad_distance(s.quadruple, rep.direct->quadruple) <= kMatchThreshold;
      });
    };
    rep.direct_matched = contains(rep.elimination) && contains(rep.differences);
  }

  for (const auto& s : rep.elimination) rep.max_residual = std::max(rep.max_residual, s.residual);
  for (const auto& s : rep.differences) rep.max_residual = std::max(rep.max_residual, s.residual);
  if (rep.direct) rep.max_residual = std::max(rep.max_residual, rep.direct->residual);
  return rep;
}

} // namespace fourprod::oracle
