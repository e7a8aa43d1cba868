#pragma once

#include <cstdint>

#include "billiards/analytic.hpp"
#include "billiards/walker.hpp"

namespace billiards {

struct BenchReport {
  Int ell = 0;
  std::int64_t analytic_ns = 0;
  Int analytic_m = 0;
  bool simulated = false;  // false when ell exceeds the simulation cap
  std::int64_t simulate_ns = 0;
  Int simulate_m = 0;
};

// Wall-clock contrast of one analytic query against the full simulated walk.
BenchReport bench_point(const BoxSpec& box, const LatticePoint& v,
                        Int sim_cap = kDefaultSimCap);

}  // namespace billiards
