#include "billiards/render.hpp"

#include <array>
#include <cstdlib>
#include <sstream>

namespace billiards {

namespace {

// Matching segment colors for the reflected path and its torus image.
constexpr std::array<const char*, 6> kPalette = {"green",  "red",    "orange",
                                                 "cyan",   "violet", "blue"};
constexpr Int kMargin = 20;

void line(std::ostringstream& svg, Int x1, Int y1, Int x2, Int y2, const char* stroke,
          int width, bool dashed = false) {
  svg << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
      << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"";
  if (dashed) svg << " stroke-dasharray=\"6,4\"";
  svg << "/>\n";
}

}  // namespace

std::string render_trajectory_svg(const BoxSpec& box, const Polyline& path,
                                  const SvgOptions& options) {
  if (box.n() != 2) {
    throw ValidationError("svg rendering requires a 2-dimensional box, got n=" +
                          std::to_string(box.n()));
  }
  if (path.vertices.size() < 2) {
    throw ValidationError("svg rendering needs a polyline with at least two vertices");
  }
  if (options.unit < 1) throw ValidationError("svg unit must be positive");
  const Int a1 = box.sides[0];
  const Int a2 = box.sides[1];
  const Int span_x = options.unfolded ? 2 * a1 : a1;
  const Int span_y = options.unfolded ? 2 * a2 : a2;
  const Int width = checked_add(checked_mul(span_x, options.unit), 2 * kMargin);
  const Int height = checked_add(checked_mul(span_y, options.unit), 2 * kMargin);
  const auto px = [&](Int x) { return kMargin + x * options.unit; };
  const auto py = [&](Int y) { return kMargin + (span_y - y) * options.unit; };

  // Cumulative step index of every polyline vertex: both coordinates move
  // by one per step, so the first coordinate's jump is the segment length.
  std::vector<Int> step_at(path.vertices.size(), 0);
  for (std::size_t j = 1; j < path.vertices.size(); ++j) {
    const Int dt = std::llabs(path.vertices[j].coords[0] - path.vertices[j - 1].coords[0]);
    step_at[j] = step_at[j - 1] + dt;
  }

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";

  for (Int x = 0; x <= span_x; ++x) line(svg, px(x), py(0), px(x), py(span_y), "#dddddd", 1);
  for (Int y = 0; y <= span_y; ++y) line(svg, px(0), py(y), px(span_x), py(y), "#dddddd", 1);

  svg << "<rect x=\"" << px(0) << "\" y=\"" << py(a2) << "\" width=\"" << a1 * options.unit
      << "\" height=\"" << a2 * options.unit << "\" fill=\"none\" stroke=\"#333333\""
      << " stroke-width=\"1\"/>\n";
  if (options.unfolded) {
    svg << "<rect x=\"" << px(0) << "\" y=\"" << py(span_y) << "\" width=\""
        << span_x * options.unit << "\" height=\"" << span_y * options.unit
        << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    // Torus image of the diagonal: between direction changes it is a
    // straight piece starting at (t mod 2a_i) and advancing by dt.
    for (std::size_t j = 0; j + 1 < path.vertices.size(); ++j) {
      const Int t = step_at[j];
      const Int dt = step_at[j + 1] - t;
      const Int sx = t % (2 * a1);
      const Int sy = t % (2 * a2);
      const char* stroke = options.color ? kPalette[j % kPalette.size()] : "#888888";
      line(svg, px(sx), py(sy), px(sx + dt), py(sy + dt), stroke, 2, true);
    }
  }

  if (options.color) {
    for (std::size_t j = 0; j + 1 < path.vertices.size(); ++j) {
      const auto& from = path.vertices[j].coords;
      const auto& to = path.vertices[j + 1].coords;
      line(svg, px(from[0]), py(from[1]), px(to[0]), py(to[1]),
           kPalette[j % kPalette.size()], 2);
    }
  } else {
    svg << "<path d=\"";
    for (std::size_t j = 0; j < path.vertices.size(); ++j) {
      const auto& v = path.vertices[j].coords;
      svg << (j == 0 ? "M " : " L ") << px(v[0]) << " " << py(v[1]);
    }
    svg << "\" fill=\"none\" stroke=\"#111111\" stroke-width=\"2\"/>\n";
  }

  const auto& start = path.vertices.front().coords;
  const auto& stop = path.vertices.back().coords;
  svg << "<circle cx=\"" << px(start[0]) << "\" cy=\"" << py(start[1])
      << "\" r=\"5\" fill=\"green\"/>\n";
  svg << "<circle cx=\"" << px(stop[0]) << "\" cy=\"" << py(stop[1])
      << "\" r=\"5\" fill=\"red\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string trajectory_csv(const BoxSpec& box, Int sim_cap) {
  if (box.ell > sim_cap) {
    throw CapExceeded("simulation too large, use analytic method (ell=" +
                      std::to_string(box.ell) + ", cap=" + std::to_string(sim_cap) + ")");
  }
  std::ostringstream out;
  out << "t";
  for (int i = 1; i <= box.n(); ++i) out << ",v" << i;
  out << "\n";
  for (Int t = 1; t <= box.ell; ++t) {
    const LatticePoint point = unfolded_point(box, t);
    out << t;
    for (Int coord : point.coords) out << "," << coord;
    out << "\n";
  }
  return out.str();
}

}  // namespace billiards
