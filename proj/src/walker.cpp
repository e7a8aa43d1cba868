#include "billiards/walker.hpp"

#include <algorithm>
#include <stdexcept>

namespace billiards {

namespace {

void require_within_cap(const BoxSpec& box, Int sim_cap) {
  if (box.ell > sim_cap) {
    throw CapExceeded("simulation too large, use analytic method (ell=" +
                      std::to_string(box.ell) + ", cap=" + std::to_string(sim_cap) + ")");
  }
}

struct WalkState {
  std::vector<Int> position;   // inside the box
  std::vector<int> direction;  // +1 at position 0, -1 at position a_i
  Int step = 0;

  explicit WalkState(int n) : position(n, 0), direction(n, +1) {}

  void normalize(const BoxSpec& box) {
    for (int i = 0; i < box.n(); ++i) {
      if (position[i] == 0) {
        direction[i] = +1;
      } else if (position[i] == box.sides[i]) {
        direction[i] = -1;
      }
    }
  }

  void advance() {
    for (std::size_t i = 0; i < position.size(); ++i) position[i] += direction[i];
    ++step;
  }
};

}  // namespace

Int VisitMap::count(const LatticePoint& v) const {
  const auto it = times.find(v);
  return it == times.end() ? 0 : static_cast<Int>(it->second.size());
}

Int visits(const VisitMap& map, const LatticePoint& v) {
  const bool is_origin =
      std::all_of(v.coords.begin(), v.coords.end(), [](Int c) { return c == 0; });
  if (is_origin) return 1;
  return map.count(v);
}

WalkResult walk_reflect(const BoxSpec& box, Int sim_cap) {
  require_within_cap(box, sim_cap);
  WalkResult out;
  WalkState state(box.n());
  out.polyline.vertices.push_back(LatticePoint{state.position});
  std::vector<int> previous_direction;
  while (true) {
    state.normalize(box);
    if (!previous_direction.empty() && state.direction != previous_direction) {
      out.polyline.vertices.push_back(LatticePoint{state.position});
    }
    previous_direction = state.direction;
    state.advance();
    LatticePoint here{state.position};
    out.visit_map.times[here].push_back(state.step);
    ++out.visit_map.total_visits;
    if (box.is_corner(here)) {
      out.polyline.vertices.push_back(std::move(here));
      break;
    }
    if (state.step > box.ell) {
      throw std::logic_error("trajectory missed every corner within ell steps");
    }
  }
  out.t_final = state.step;
  if (out.t_final != box.ell) {
    throw std::logic_error("trajectory halted after " + std::to_string(out.t_final) +
                           " steps, expected " + std::to_string(box.ell));
  }
  return out;
}

VisitMap walk_unfolded(const BoxSpec& box, Int sim_cap) {
  require_within_cap(box, sim_cap);
  const int n = box.n();
  VisitMap map;
  std::vector<Int> residue(n, 0);  // t mod 2a_i, kept incrementally
  LatticePoint folded;
  folded.coords.assign(n, 0);
  for (Int t = 1; t <= box.ell; ++t) {
    for (int i = 0; i < n; ++i) {
      const Int period = 2 * box.sides[i];
      if (++residue[i] == period) residue[i] = 0;
      folded.coords[i] = residue[i] <= box.sides[i] ? residue[i] : period - residue[i];
    }
    map.times[folded].push_back(t);
    ++map.total_visits;
  }
  return map;
}

LatticePoint unfolded_point(const BoxSpec& box, Int t) {
  if (t < 0) throw ValidationError("step index must be non-negative");
  LatticePoint point;
  point.coords.reserve(box.sides.size());
  for (Int side : box.sides) {
    const Int r = t % (2 * side);
    point.coords.push_back(r <= side ? r : 2 * side - r);
  }
  return point;
}

SimulatedVisits simulate_point(const BoxSpec& box, const LatticePoint& v, Int sim_cap) {
  if (!box.contains(v)) {
    throw ValidationError("point " + format_point(v) + " is not a lattice point of the box");
  }
  require_within_cap(box, sim_cap);
  const bool is_origin =
      std::all_of(v.coords.begin(), v.coords.end(), [](Int c) { return c == 0; });
  if (is_origin) return {1, {}};
  const int n = box.n();
  std::vector<Int> residue(n, 0);
  SimulatedVisits out;
  for (Int t = 1; t <= box.ell; ++t) {
    bool match = true;
    for (int i = 0; i < n; ++i) {
      const Int period = 2 * box.sides[i];
      if (++residue[i] == period) residue[i] = 0;
      const Int folded = residue[i] <= box.sides[i] ? residue[i] : period - residue[i];
      if (folded != v.coords[i]) match = false;
    }
    if (match) out.times.push_back(t);
  }
  out.m = static_cast<Int>(out.times.size());
  return out;
}

}  // namespace billiards
