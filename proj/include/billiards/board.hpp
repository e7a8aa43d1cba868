#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "billiards/numthy.hpp"

namespace billiards {

struct LatticePoint {
  std::vector<Int> coords;
  auto operator<=>(const LatticePoint&) const = default;
};

std::string format_point(const LatticePoint& v);
std::ostream& operator<<(std::ostream& os, const LatticePoint& v);

// Axis-aligned box [0,a_1] x ... x [0,a_n] brought to integer sides by a
// joint scaling factor. No reduction by a common gcd is ever performed.
struct BoxSpec {
  std::vector<Rational> sides_rational;  // as given, each > 0
  std::vector<Int> sides;                // sides_rational[i] * scale, each >= 1
  Int scale = 1;                         // positive integer
  Int ell = 1;                           // lcm(sides): steps until a corner

  int n() const { return static_cast<int>(sides.size()); }
  LatticePoint origin() const { return LatticePoint{std::vector<Int>(sides.size(), 0)}; }
  bool contains(const LatticePoint& v) const;
  bool is_corner(const LatticePoint& v) const;  // every coordinate 0 or a_i
};

// scale = lcm of the side denominators, the least joint integer scaling.
BoxSpec make_box(const std::vector<Rational>& sides_rational);
BoxSpec make_box(const std::vector<Int>& sides);

// Same box at a requested scale; sigma must be a multiple of every side
// denominator (it may be finer than the minimal scale).
BoxSpec make_box_scaled(const std::vector<Rational>& sides_rational, Int sigma);

struct ScaledQuery {
  BoxSpec box;
  LatticePoint point;
};

// Rescales box and point together by the least factor making both integral.
// Crossing numbers are invariant under this joint rescaling.
ScaledQuery scale_point(const BoxSpec& box, const std::vector<Rational>& point);

// Boundary structure of a lattice point.
struct BoundaryProfile {
  std::vector<int> at_zero;      // { i : v_i = 0 }
  std::vector<int> at_far;       // { i : v_i = a_i }
  std::vector<int> boundary;     // union of the two, ascending
  std::vector<int> self_paired;  // { i : v_i = -v_i mod 2a_i }; equals boundary on the lattice
  bool corner = false;           // |boundary| = n
};

BoundaryProfile classify(const BoxSpec& box, const LatticePoint& v);

// All coordinates even or all odd; necessary for the trajectory to cross v.
bool parity_consistent(const BoxSpec& box, const LatticePoint& v);

// The corner where the trajectory halts: coordinate a_i where ell/a_i is
// odd, else 0. Never the origin.
LatticePoint end_corner(const BoxSpec& box);

// Number of lattice points of the box, prod(a_i + 1); checked.
Int lattice_size(const BoxSpec& box);

template <typename F>
void for_each_lattice_point(const BoxSpec& box, F&& fn) {
  LatticePoint v;
  v.coords.assign(box.sides.size(), 0);
  const int n = box.n();
  while (true) {
    fn(static_cast<const LatticePoint&>(v));
    int i = 0;
    while (i < n) {
      if (++v.coords[i] <= box.sides[i]) break;
      v.coords[i] = 0;
      ++i;
    }
    if (i == n) return;
  }
}

}  // namespace billiards
