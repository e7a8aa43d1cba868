#pragma once

#include <string>
#include <vector>

#include "billiards/analytic.hpp"
#include "billiards/walker.hpp"

namespace billiards {

struct PointIssue {
  std::vector<Int> sides;
  std::vector<Int> point;
  Int analytic_m = 0;
  Int reference_m = 0;
  std::string note;
};

struct BoxIssue {
  std::vector<Int> sides;
  std::string note;
};

// Cross-check record over a family of boxes. A clean report has every
// failure list empty; complete turns false when a cap skipped some check.
struct VerifyReport {
  long boxes_checked = 0;
  long coprime_boxes_checked = 0;
  long long points_checked = 0;
  std::vector<PointIssue> mismatches;           // analytic vs simulated
  std::vector<PointIssue> theorem1_violations;  // m not 0 and not a power of 2
  std::vector<PointIssue> theorem2_violations;  // coprime closed form disagrees
  std::vector<BoxIssue> identity_failures;      // sum of crossings vs ell
  std::vector<BoxIssue> walker_failures;        // length/equivalence/parity/halt
  std::vector<BoxIssue> bounce_failures;        // formula vs enumeration
  bool complete = true;

  bool clean() const;
};

// All side tuples with 1 <= n <= max_dim, 1 <= a_i <= max_side and
// lcm(sides) <= max_lcm, in dimension-then-lexicographic order.
std::vector<std::vector<Int>> box_family(int max_dim, Int max_side, Int max_lcm);

// For every box: walks both walkers and compares them, checks the halt
// corner, parity and visit totals, then sweeps every lattice point
// comparing the analytic crossing number (and times) against the walk,
// plus the closed form, bounce table and sum identity where applicable.
VerifyReport verify_boxes(const std::vector<std::vector<Int>>& boxes,
                          Int sim_cap = kDefaultSimCap,
                          Int lattice_cap = kDefaultLatticeCap);

}  // namespace billiards
