#pragma once

#include "fourprod/core.hpp"

#include <optional>
#include <vector>

namespace fourprod::oracle {

struct CrossCheckReport {
  std::vector<Solution> elimination;
  std::vector<Solution> differences;
  std::optional<Solution> direct;

  std::vector<std::pair<int, int>> matched;   // (elimination idx, differences idx)
  std::vector<int> unmatched_elimination;
  std::vector<int> unmatched_differences;
  bool direct_absent = false;   // no real all-positive-branch solution (expected
                                // on some instances, not a mismatch)
  bool direct_matched = false;  // direct solution found in both method sets
  double max_residual = 0;

  bool consistent() const {
    return unmatched_elimination.empty() && unmatched_differences.empty() &&
           (direct_absent || direct_matched);
  }
};

CrossCheckReport cross_check(const Instance& inst, double tol);

} // namespace fourprod::oracle
