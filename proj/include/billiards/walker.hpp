#pragma once

#include <map>
#include <vector>

#include "billiards/board.hpp"

namespace billiards {

inline constexpr Int kDefaultSimCap = 100'000'000;

// Points crossed by the trajectory with the step index of every visit.
// Step 0 (the start corner) is never recorded; step ell always is.
struct VisitMap {
  std::map<LatticePoint, std::vector<Int>> times;  // ascending steps in [1, ell]
  Int total_visits = 0;                            // equals ell after a full walk

  Int count(const LatticePoint& v) const;
  bool operator==(const VisitMap&) const = default;
};

// Visit count with the start-corner convention: the origin reports 1.
Int visits(const VisitMap& map, const LatticePoint& v);

// Direction-change points of the trajectory, start and end corner included.
// Consecutive vertices differ by a positive multiple of a vector in {-1,+1}^n.
struct Polyline {
  std::vector<LatticePoint> vertices;
};

struct WalkResult {
  VisitMap visit_map;
  Polyline polyline;
  Int t_final = 0;  // always equals ell
};

// Steps the reflecting trajectory from the origin in direction (1,...,1)
// until it first reaches a corner. Before every step the direction is
// normalized: entry i becomes +1 at v_i = 0 and -1 at v_i = a_i.
WalkResult walk_reflect(const BoxSpec& box, Int sim_cap = kDefaultSimCap);

// The same trajectory read off the torus of periods 2a_i: position after t
// steps is t mod 2a_i folded into [0, a_i]. Identical VisitMap.
VisitMap walk_unfolded(const BoxSpec& box, Int sim_cap = kDefaultSimCap);

// Trajectory position after t >= 0 steps, without walking.
LatticePoint unfolded_point(const BoxSpec& box, Int t);

// Visit count and times of a single point, streamed in O(1) memory.
struct SimulatedVisits {
  Int m = 0;
  std::vector<Int> times;
};
SimulatedVisits simulate_point(const BoxSpec& box, const LatticePoint& v,
                               Int sim_cap = kDefaultSimCap);

}  // namespace billiards
