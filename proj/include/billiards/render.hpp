#pragma once

#include <string>

#include "billiards/walker.hpp"

namespace billiards {

struct SvgOptions {
  bool unfolded = false;  // overlay the torus trajectory on [0,2a_1]x[0,2a_2]
  bool color = false;     // one palette color per segment, same in both paths
  Int unit = 40;          // pixels per lattice unit
};

// Deterministic SVG 1.1 document for a 2-dimensional box: lattice grid,
// box border, solid reflected trajectory, optional dashed torus overlay,
// start and end corner markers. Byte-identical for identical inputs.
std::string render_trajectory_svg(const BoxSpec& box, const Polyline& path,
                                  const SvgOptions& options = {});

// Time-ordered visit rows: header "t,v1,...,vn", one row per step.
std::string trajectory_csv(const BoxSpec& box, Int sim_cap = kDefaultSimCap);

}  // namespace billiards
