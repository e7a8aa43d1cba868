#include "billiards/board.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace billiards {

std::string format_point(const LatticePoint& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v.coords[i]);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& v) {
  return os << format_point(v);
}

bool BoxSpec::contains(const LatticePoint& v) const {
  if (v.coords.size() != sides.size()) return false;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    if (v.coords[i] < 0 || v.coords[i] > sides[i]) return false;
  }
  return true;
}

bool BoxSpec::is_corner(const LatticePoint& v) const {
  for (std::size_t i = 0; i < sides.size(); ++i) {
    if (v.coords[i] != 0 && v.coords[i] != sides[i]) return false;
  }
  return true;
}

BoxSpec make_box_scaled(const std::vector<Rational>& sides_rational, Int sigma) {
  if (sides_rational.empty()) throw ValidationError("box needs at least one side");
  if (sigma < 1) throw ValidationError("scale must be a positive integer");
  BoxSpec box;
  box.sides_rational = sides_rational;
  box.scale = sigma;
  box.sides.reserve(sides_rational.size());
  for (const auto& side : sides_rational) {
    if (side.num() <= 0) {
      throw ValidationError("box sides must be positive, got " + side.str());
    }
    box.sides.push_back(side.times_exact(sigma));
  }
  box.ell = lcm_all(box.sides);
  return box;
}

BoxSpec make_box(const std::vector<Rational>& sides_rational) {
  Int sigma = 1;
  for (const auto& side : sides_rational) sigma = lcm(sigma, side.den());
  return make_box_scaled(sides_rational, sigma);
}

BoxSpec make_box(const std::vector<Int>& sides) {
  std::vector<Rational> rational;
  rational.reserve(sides.size());
  for (Int side : sides) rational.emplace_back(side);
  return make_box(rational);
}

ScaledQuery scale_point(const BoxSpec& box, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != box.n()) {
    throw ValidationError("point has " + std::to_string(point.size()) + " coordinates, box has " +
                          std::to_string(box.n()));
  }
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (point[i] < Rational(0) || point[i] > box.sides_rational[i]) {
      throw ValidationError("point coordinate " + point[i].str() + " outside [0, " +
                            box.sides_rational[i].str() + "]");
    }
  }
  Int sigma = box.scale;
  for (const auto& coord : point) sigma = lcm(sigma, coord.den());
  ScaledQuery query;
  query.box = sigma == box.scale ? box : make_box_scaled(box.sides_rational, sigma);
  query.point.coords.reserve(point.size());
  for (const auto& coord : point) query.point.coords.push_back(coord.times_exact(sigma));
  return query;
}

BoundaryProfile classify(const BoxSpec& box, const LatticePoint& v) {
  if (!box.contains(v)) {
    throw ValidationError("point " + format_point(v) + " is not a lattice point of the box");
  }
  BoundaryProfile profile;
  for (int i = 0; i < box.n(); ++i) {
    const Int coord = v.coords[i];
    if (coord == 0) profile.at_zero.push_back(i);
    if (coord == box.sides[i]) profile.at_far.push_back(i);
    // v_i = -v_i mod 2a_i is the same as a_i | v_i.
    if (coord % box.sides[i] == 0) profile.self_paired.push_back(i);
  }
  std::merge(profile.at_zero.begin(), profile.at_zero.end(), profile.at_far.begin(),
             profile.at_far.end(), std::back_inserter(profile.boundary));
  if (profile.self_paired != profile.boundary) {
    throw std::logic_error("reflection-fixed index set differs from the boundary set");
  }
  profile.corner = static_cast<int>(profile.boundary.size()) == box.n();
  return profile;
}

bool parity_consistent(const BoxSpec& box, const LatticePoint& v) {
  if (!box.contains(v)) {
    throw ValidationError("point " + format_point(v) + " is not a lattice point of the box");
  }
  const Int parity = v.coords.front() & 1;
  return std::all_of(v.coords.begin(), v.coords.end(),
                     [parity](Int c) { return (c & 1) == parity; });
}

LatticePoint end_corner(const BoxSpec& box) {
  LatticePoint corner;
  corner.coords.reserve(box.sides.size());
  bool any_odd = false;
  for (Int side : box.sides) {
    const bool odd = (box.ell / side) % 2 == 1;
    any_odd |= odd;
    corner.coords.push_back(odd ? side : 0);
  }
  if (!any_odd) throw std::logic_error("halting corner equals the origin");
  return corner;
}

Int lattice_size(const BoxSpec& box) {
  Int total = 1;
  for (Int side : box.sides) total = checked_mul(total, checked_add(side, 1));
  return total;
}

}  // namespace billiards
