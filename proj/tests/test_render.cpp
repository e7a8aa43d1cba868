#include <string>
#include <vector>

#include "doctest.h"

#include "billiards/render.hpp"

using billiards::BoxSpec;
using billiards::Int;

namespace {

std::string default_svg(const BoxSpec& box, billiards::SvgOptions options = {}) {
  return billiards::render_trajectory_svg(box, billiards::walk_reflect(box).polyline, options);
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("svg output is byte deterministic") {
  const BoxSpec box = billiards::make_box(std::vector<Int>{4, 3});
  CHECK(default_svg(box) == default_svg(box));
}

TEST_CASE("svg geometry of the 4x3 trajectory") {
  const BoxSpec box = billiards::make_box(std::vector<Int>{4, 3});
  const std::string svg = default_svg(box);
  CHECK(svg.rfind("<?xml version=\"1.0\"", 0) == 0);
  CHECK(contains(svg, "width=\"200\" height=\"160\""));
  CHECK(contains(svg,
                 "<path d=\"M 20 140 L 140 20 L 180 60 L 100 140 L 20 60 L 60 20 L 180 140\""));
  CHECK(contains(svg, "<circle cx=\"20\" cy=\"140\" r=\"5\" fill=\"green\"/>"));
  CHECK(contains(svg, "<circle cx=\"180\" cy=\"140\" r=\"5\" fill=\"red\"/>"));
  CHECK_FALSE(contains(svg, "stroke-dasharray"));
}

TEST_CASE("unfolded overlay doubles the canvas and dashes the torus path") {
  const BoxSpec box = billiards::make_box(std::vector<Int>{4, 3});
  billiards::SvgOptions options;
  options.unfolded = true;
  const std::string svg = default_svg(box, options);
  CHECK(contains(svg, "width=\"360\" height=\"280\""));
  CHECK(contains(svg, "stroke-dasharray=\"6,4\""));
}

TEST_CASE("color mode cycles the palette per direction change") {
  const BoxSpec box = billiards::make_box(std::vector<Int>{4, 3});
  billiards::SvgOptions options;
  options.color = true;
  const std::string svg = default_svg(box, options);
  for (const char* color : {"green", "red", "orange", "cyan", "violet", "blue"}) {
    CHECK(contains(svg, std::string("stroke=\"") + color + "\""));
  }
  CHECK_FALSE(contains(svg, "<path"));
}

TEST_CASE("svg rejects non-planar boxes and bad units") {
  CHECK_THROWS_AS(default_svg(billiards::make_box(std::vector<Int>{2, 3, 5})),
                  billiards::ValidationError);
  CHECK_THROWS_AS(default_svg(billiards::make_box(std::vector<Int>{5})),
                  billiards::ValidationError);
  const BoxSpec box = billiards::make_box(std::vector<Int>{4, 3});
  billiards::SvgOptions options;
  options.unit = 0;
  CHECK_THROWS_AS(default_svg(box, options), billiards::ValidationError);
}

TEST_CASE("svg unit scales the canvas") {
  const BoxSpec box = billiards::make_box(std::vector<Int>{4, 3});
  billiards::SvgOptions options;
  options.unit = 10;
  CHECK(contains(default_svg(box, options), "width=\"80\" height=\"70\""));
}

TEST_CASE("csv lists one row per step") {
  const std::string csv = billiards::trajectory_csv(billiards::make_box(std::vector<Int>{2, 6}));
  CHECK(csv == "t,v1,v2\n1,1,1\n2,2,2\n3,1,3\n4,0,4\n5,1,5\n6,2,6\n");

  const std::string wide = billiards::trajectory_csv(billiards::make_box(std::vector<Int>{4, 3}));
  CHECK(contains(wide, "\n7,1,1\n"));
  CHECK(contains(wide, "\n12,4,0\n"));

  const std::string deep =
      billiards::trajectory_csv(billiards::make_box(std::vector<Int>{2, 3, 5}));
  CHECK(deep.rfind("t,v1,v2,v3\n1,1,1,1\n", 0) == 0);

  CHECK_THROWS_AS(billiards::trajectory_csv(billiards::make_box(std::vector<Int>{4, 3}), 5),
                  billiards::CapExceeded);
}
