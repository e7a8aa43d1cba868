#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"

#include "billiards/walker.hpp"

using billiards::BoxSpec;
using billiards::Int;
using billiards::LatticePoint;

namespace {

LatticePoint pt(std::vector<Int> coords) { return LatticePoint{std::move(coords)}; }

}  // namespace

TEST_CASE("reflected walk in the 4x3 box") {
  const BoxSpec box = billiards::make_box(std::vector<Int>{4, 3});
  const auto walk = billiards::walk_reflect(box);
  CHECK(walk.t_final == 12);
  const std::vector<LatticePoint> expected = {pt({0, 0}), pt({3, 3}), pt({4, 2}), pt({2, 0}),
                                              pt({0, 2}), pt({1, 3}), pt({4, 0})};
  CHECK(walk.polyline.vertices == expected);
  CHECK(walk.visit_map.total_visits == 12);
  CHECK(walk.visit_map.times.at(pt({1, 1})) == std::vector<Int>{1, 7});
  CHECK(walk.visit_map.times.at(pt({2, 2})) == std::vector<Int>{2, 10});
  CHECK(walk.visit_map.times.at(pt({3, 1})) == std::vector<Int>{5, 11});
  CHECK(walk.visit_map.times.at(pt({4, 0})) == std::vector<Int>{12});
  CHECK(walk.visit_map.count(pt({1, 2})) == 0);
}

TEST_CASE("unit box walk") {
  const BoxSpec box = billiards::make_box(std::vector<Int>{1, 1});
  const auto walk = billiards::walk_reflect(box);
  CHECK(walk.t_final == 1);
  CHECK(walk.polyline.vertices == std::vector<LatticePoint>{pt({0, 0}), pt({1, 1})});
  CHECK(walk.visit_map.times.at(pt({1, 1})) == std::vector<Int>{1});
  CHECK(walk.visit_map.total_visits == 1);
}

TEST_CASE("2x6 walk visits each point once, against direct folding") {
  const BoxSpec box = billiards::make_box(std::vector<Int>{2, 6});
  const auto walk = billiards::walk_reflect(box);
  CHECK(walk.t_final == 6);

  std::map<LatticePoint, std::vector<Int>> expected;
  for (Int t = 1; t <= 6; ++t) {
    const Int rx = t % 4;
    const Int ry = t % 12;
    expected[pt({rx <= 2 ? rx : 4 - rx, ry <= 6 ? ry : 12 - ry})].push_back(t);
  }
  CHECK(walk.visit_map.times == expected);
  CHECK(walk.visit_map.count(pt({1, 3})) == 1);
  CHECK(walk.visit_map.times.at(pt({2, 6})) == std::vector<Int>{6});
}

TEST_CASE("reflect and unfold agree across a small family") {
  for (const auto& sides : {std::vector<Int>{4, 3}, {2, 6}, {5, 5}, {1, 1}, {7}, {1, 2, 4},
                            {2, 3, 5}, {2, 2, 2}, {6, 10, 15}}) {
    const BoxSpec box = billiards::make_box(sides);
    const auto reflected = billiards::walk_reflect(box);
    const auto unfolded = billiards::walk_unfolded(box);
    CHECK(reflected.visit_map == unfolded);
    CHECK(reflected.t_final == box.ell);
    CHECK(reflected.polyline.vertices.front() == box.origin());
    CHECK(reflected.polyline.vertices.back() == billiards::end_corner(box));
    // Each vertex-to-vertex leg is a straight diagonal; coordinates move in
    // lockstep by the same number of steps.
    const auto& vertices = reflected.polyline.vertices;
    for (std::size_t j = 1; j < vertices.size(); ++j) {
      const Int leg = std::llabs(vertices[j].coords[0] - vertices[j - 1].coords[0]);
      for (std::size_t i = 1; i < sides.size(); ++i) {
        CHECK(std::llabs(vertices[j].coords[i] - vertices[j - 1].coords[i]) == leg);
      }
      CHECK(leg > 0);
    }
    // Every visited point has one coordinate parity, and no corner other
    // than the halt shows up.
    for (const auto& [point, steps] : reflected.visit_map.times) {
      CHECK(billiards::parity_consistent(box, point));
      if (box.is_corner(point)) CHECK(point == vertices.back());
      CHECK_FALSE(steps.empty());
    }
  }
}

TEST_CASE("unfolded_point maps steps to positions") {
  const BoxSpec box = billiards::make_box(std::vector<Int>{4, 3});
  CHECK(billiards::unfolded_point(box, 0) == pt({0, 0}));
  CHECK(billiards::unfolded_point(box, 7) == pt({1, 1}));
  CHECK(billiards::unfolded_point(box, 12) == pt({4, 0}));
  CHECK(billiards::unfolded_point(billiards::make_box(std::vector<Int>{2, 6}), 4) == pt({0, 4}));
  CHECK_THROWS_AS(billiards::unfolded_point(box, -1), billiards::ValidationError);
}

TEST_CASE("visit lookups count the origin as crossed once") {
  const BoxSpec box = billiards::make_box(std::vector<Int>{4, 3});
  const auto walk = billiards::walk_reflect(box);
  CHECK(billiards::visits(walk.visit_map, box.origin()) == 1);
  CHECK(billiards::visits(walk.visit_map, pt({1, 1})) == 2);
  CHECK(billiards::visits(walk.visit_map, pt({1, 2})) == 0);
  CHECK(billiards::visits(walk.visit_map, pt({0, 3})) == 0);
}

TEST_CASE("walks refuse to run past the step cap") {
  const BoxSpec box = billiards::make_box(std::vector<Int>{4, 3});
  CHECK_THROWS_WITH_AS(billiards::walk_reflect(box, 5),
                       "simulation too large, use analytic method (ell=12, cap=5)",
                       billiards::CapExceeded);
  CHECK_THROWS_AS(billiards::walk_unfolded(box, 5), billiards::CapExceeded);
  CHECK_THROWS_AS(billiards::simulate_point(box, pt({1, 1}), 5), billiards::CapExceeded);
  CHECK_NOTHROW(billiards::walk_reflect(box, 12));
}

TEST_CASE("simulate_point matches the full walk pointwise") {
  for (const auto& sides : {std::vector<Int>{4, 3}, {2, 6}, {2, 3, 5}}) {
    const BoxSpec box = billiards::make_box(sides);
    const auto walk = billiards::walk_reflect(box);
    billiards::for_each_lattice_point(box, [&](const LatticePoint& v) {
      const auto simulated = billiards::simulate_point(box, v);
      if (v == box.origin()) {
        // Convention: the start corner counts as crossed, with no step.
        CHECK(simulated.m == 1);
        CHECK(simulated.times.empty());
      } else {
        CHECK(simulated.m == static_cast<Int>(simulated.times.size()));
        CHECK(simulated.m == walk.visit_map.count(v));
        const auto it = walk.visit_map.times.find(v);
        if (it != walk.visit_map.times.end()) CHECK(simulated.times == it->second);
      }
    });
  }
  const BoxSpec box = billiards::make_box(std::vector<Int>{2, 6});
  const auto one = billiards::simulate_point(box, pt({1, 3}));
  CHECK(one.m == 1);
  CHECK(one.times == std::vector<Int>{3});
  CHECK_THROWS_AS(billiards::simulate_point(box, pt({3, 3})), billiards::ValidationError);
}
