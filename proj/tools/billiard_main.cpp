#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "billiards/analytic.hpp"
#include "billiards/bench.hpp"
#include "billiards/render.hpp"
#include "billiards/verify.hpp"

namespace {

using billiards::Int;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitCapRefusal = 3;

std::vector<billiards::Rational> parse_rational_list(const std::string& text) {
  if (text.empty()) throw billiards::ValidationError("empty number list");
  std::vector<billiards::Rational> out;
  std::size_t begin = 0;
  while (true) {
    const auto comma = text.find(',', begin);
    const auto len = comma == std::string::npos ? std::string::npos : comma - begin;
    out.push_back(billiards::parse_rational(text.substr(begin, len)));
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return out;
}

ordered_json base_object(const billiards::BoxSpec& box, const char* method) {
  ordered_json object;
  object["box"] = box.sides;
  object["scale"] = box.scale;
  object["ell"] = box.ell;
  object["method"] = method;
  object["convention"] = "visits-exclude-start";
  return object;
}

ordered_json point_issue_json(const billiards::PointIssue& issue, const char* got_key,
                              const char* want_key) {
  ordered_json object;
  object["box"] = issue.sides;
  object["point"] = issue.point;
  object[got_key] = issue.analytic_m;
  object[want_key] = issue.reference_m;
  object["note"] = issue.note;
  return object;
}

ordered_json box_issue_json(const billiards::BoxIssue& issue) {
  ordered_json object;
  object["box"] = issue.sides;
  object["note"] = issue.note;
  return object;
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw billiards::ValidationError("cannot open output file " + out_path);
  file << text;
}

void emit_json(const ordered_json& object, const std::string& out_path) {
  emit_text(object.dump(2) + "\n", out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact crossing numbers of billiard trajectories in boxes"};
  app.require_subcommand(1);

  std::string sides_text;
  std::string point_text;
  std::string format = "json";
  std::string method = "analytic";
  std::string out_path;
  std::vector<std::string> verify_sides;
  int max_dim = 0;
  Int max_side = 0;
  Int max_lcm = 1'000'000;
  Int sim_cap = billiards::kDefaultSimCap;
  Int assignment_cap = billiards::kDefaultAssignmentCap;
  Int lattice_cap = billiards::kDefaultLatticeCap;
  bool unfolded = false;
  bool color = false;
  bool check = false;
  Int unit = 40;

  const auto add_sides = [&sides_text](CLI::App* cmd) {
    cmd->add_option("--sides", sides_text, "comma-separated side lengths, integers or p/q")
        ->required();
  };
  const auto add_point = [&point_text](CLI::App* cmd) {
    cmd->add_option("--point", point_text, "comma-separated point coordinates, integers or p/q")
        ->required();
  };
  const auto add_sim_cap = [&sim_cap](CLI::App* cmd) {
    cmd->add_option("--sim-cap", sim_cap, "maximum walk length in steps")
        ->envname("BILLIARD_SIM_CAP")
        ->capture_default_str();
  };

  CLI::App* simulate = app.add_subcommand("simulate", "walk one trajectory and report it");
  add_sides(simulate);
  simulate->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "svg"}))
      ->capture_default_str();
  simulate->add_flag("--unfolded", unfolded, "overlay the torus trajectory (svg)");
  simulate->add_flag("--color", color, "color matching segments (svg)");
  simulate->add_option("--unit", unit, "pixels per lattice unit (svg)")->capture_default_str();
  simulate->add_option("--out", out_path, "write to file instead of stdout");
  add_sim_cap(simulate);

  CLI::App* crossing = app.add_subcommand("crossing", "crossing number of one point");
  add_sides(crossing);
  add_point(crossing);
  crossing->add_option("--method", method, "computation method")
      ->check(CLI::IsMember({"analytic", "simulate", "both"}))
      ->capture_default_str();
  add_sim_cap(crossing);

  CLI::App* times = app.add_subcommand("times", "crossing steps of one non-corner point");
  add_sides(times);
  add_point(times);
  times->add_option("--enum-cap", assignment_cap, "maximum assignments to enumerate")
      ->envname("BILLIARD_ENUM_CAP")
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "cross-check analytic counts against walks");
  verify->add_option("--sides", verify_sides, "box to check; repeatable");
  verify->add_option("--max-dim", max_dim, "family bound: dimensions 1..max-dim");
  verify->add_option("--max-side", max_side, "family bound: sides 1..max-side");
  verify->add_option("--max-lcm", max_lcm, "family bound: lcm of sides")->capture_default_str();
  add_sim_cap(verify);
  verify->add_option("--enum-cap", lattice_cap, "maximum lattice points per box")
      ->envname("BILLIARD_ENUM_CAP")
      ->capture_default_str();

  CLI::App* bounce = app.add_subcommand("bounce", "crossed points grouped by boundary count");
  add_sides(bounce);
  bounce->add_flag("--check", check, "compare closed form against enumeration");
  bounce->add_option("--enum-cap", lattice_cap, "maximum lattice points to enumerate")
      ->envname("BILLIARD_ENUM_CAP")
      ->capture_default_str();

  CLI::App* bench = app.add_subcommand("bench", "time analytic query vs full walk");
  add_sides(bench);
  add_point(bench);
  add_sim_cap(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(simulate)) {
      const billiards::BoxSpec box = billiards::make_box(parse_rational_list(sides_text));
      if (format == "csv") {
        emit_text(billiards::trajectory_csv(box, sim_cap), out_path);
        return kExitOk;
      }
      const billiards::WalkResult walk = billiards::walk_reflect(box, sim_cap);
      if (format == "svg") {
        billiards::SvgOptions options;
        options.unfolded = unfolded;
        options.color = color;
        options.unit = unit;
        emit_text(billiards::render_trajectory_svg(box, walk.polyline, options), out_path);
        return kExitOk;
      }
      ordered_json object = base_object(box, "simulation");
      object["t_final"] = walk.t_final;
      ordered_json polyline = ordered_json::array();
      for (const auto& vertex : walk.polyline.vertices) polyline.push_back(vertex.coords);
      object["polyline"] = std::move(polyline);
      ordered_json visit_rows = ordered_json::array();
      for (const auto& [point, steps] : walk.visit_map.times) {
        ordered_json row;
        row["point"] = point.coords;
        row["count"] = steps.size();
        row["times"] = steps;
        visit_rows.push_back(std::move(row));
      }
      object["visits"] = std::move(visit_rows);
      emit_json(object, out_path);
      return kExitOk;
    }

    if (app.got_subcommand(crossing)) {
      const billiards::BoxSpec box = billiards::make_box(parse_rational_list(sides_text));
      const billiards::ScaledQuery query =
          billiards::scale_point(box, parse_rational_list(point_text));
      if (method == "analytic") {
        const billiards::CrossingResult result =
            billiards::crossing_number(query.box, query.point);
        ordered_json object = base_object(query.box, billiards::method_name(result.method));
        object["point"] = query.point.coords;
        object["m"] = result.m;
        emit_json(object, out_path);
        return kExitOk;
      }
      if (method == "simulate") {
        const billiards::SimulatedVisits simulated =
            billiards::simulate_point(query.box, query.point, sim_cap);
        ordered_json object = base_object(query.box, "simulation");
        object["point"] = query.point.coords;
        object["m"] = simulated.m;
        emit_json(object, out_path);
        return kExitOk;
      }
      using Clock = std::chrono::steady_clock;
      const auto analytic_start = Clock::now();
      const billiards::CrossingResult analytic =
          billiards::crossing_number(query.box, query.point);
      const auto analytic_stop = Clock::now();
      const billiards::SimulatedVisits simulated =
          billiards::simulate_point(query.box, query.point, sim_cap);
      const auto simulate_stop = Clock::now();
      const bool agree = analytic.m == simulated.m;
      ordered_json object = base_object(query.box, "both");
      object["point"] = query.point.coords;
      object["analytic"] = {
          {"m", analytic.m},
          {"method", billiards::method_name(analytic.method)},
          {"ns", std::chrono::duration_cast<std::chrono::nanoseconds>(analytic_stop -
                                                                      analytic_start)
                     .count()}};
      object["simulate"] = {
          {"m", simulated.m},
          {"ns", std::chrono::duration_cast<std::chrono::nanoseconds>(simulate_stop -
                                                                      analytic_stop)
                     .count()}};
      object["agree"] = agree;
      emit_json(object, out_path);
      return agree ? kExitOk : kExitMismatch;
    }

    if (app.got_subcommand(times)) {
      const billiards::BoxSpec box = billiards::make_box(parse_rational_list(sides_text));
      const billiards::ScaledQuery query =
          billiards::scale_point(box, parse_rational_list(point_text));
      const billiards::CrossingResult result =
          billiards::crossing_times(query.box, query.point, assignment_cap);
      ordered_json object = base_object(query.box, billiards::method_name(result.method));
      object["point"] = query.point.coords;
      object["m"] = result.m;
      object["times"] = *result.times;
      emit_json(object, out_path);
      return kExitOk;
    }

    if (app.got_subcommand(verify)) {
      std::vector<std::vector<Int>> boxes;
      for (const std::string& text : verify_sides) {
        boxes.push_back(billiards::make_box(parse_rational_list(text)).sides);
      }
      if (boxes.empty()) {
        if (max_dim < 1 || max_side < 1) {
          throw billiards::ValidationError(
              "give --sides, or a family via --max-dim and --max-side");
        }
        boxes = billiards::box_family(max_dim, max_side, max_lcm);
      }
      const billiards::VerifyReport report =
          billiards::verify_boxes(boxes, sim_cap, lattice_cap);
      ordered_json object;
      if (boxes.size() == 1) {
        object = base_object(billiards::make_box(boxes.front()), "verify");
      } else {
        object["box"] = nullptr;
        object["scale"] = nullptr;
        object["ell"] = nullptr;
        object["method"] = "verify";
        object["convention"] = "visits-exclude-start";
      }
      object["boxes_checked"] = report.boxes_checked;
      object["coprime_boxes_checked"] = report.coprime_boxes_checked;
      object["points_checked"] = report.points_checked;
      ordered_json mismatches = ordered_json::array();
      for (const auto& issue : report.mismatches) {
        mismatches.push_back(point_issue_json(issue, "analytic_m", "simulated_m"));
      }
      object["mismatches"] = std::move(mismatches);
      ordered_json theorem1 = ordered_json::array();
      for (const auto& issue : report.theorem1_violations) {
        theorem1.push_back(point_issue_json(issue, "m", "reference"));
      }
      object["theorem1_violations"] = std::move(theorem1);
      ordered_json theorem2 = ordered_json::array();
      for (const auto& issue : report.theorem2_violations) {
        theorem2.push_back(point_issue_json(issue, "m", "reference"));
      }
      object["theorem2_violations"] = std::move(theorem2);
      ordered_json identity = ordered_json::array();
      for (const auto& issue : report.identity_failures) identity.push_back(box_issue_json(issue));
      object["identity_failures"] = std::move(identity);
      ordered_json walker = ordered_json::array();
      for (const auto& issue : report.walker_failures) walker.push_back(box_issue_json(issue));
      object["walker_failures"] = std::move(walker);
      ordered_json bounce_issues = ordered_json::array();
      for (const auto& issue : report.bounce_failures) {
        bounce_issues.push_back(box_issue_json(issue));
      }
      object["bounce_failures"] = std::move(bounce_issues);
      object["complete"] = report.complete;
      object["clean"] = report.clean();
      emit_json(object, out_path);
      return report.clean() ? kExitOk : kExitMismatch;
    }

    if (app.got_subcommand(bounce)) {
      const billiards::BoxSpec box = billiards::make_box(parse_rational_list(sides_text));
      const bool coprime = billiards::pairwise_coprime(box);
      if (check) {
        if (!coprime) {
          throw billiards::ValidationError("--check requires pairwise coprime sides");
        }
        const billiards::BounceTable formula = billiards::bounce_table_formula(box);
        const billiards::BounceTable enumerated =
            billiards::bounce_table_enumerated(box, lattice_cap);
        const bool agree = formula == enumerated;
        ordered_json object = base_object(box, "both");
        object["b"] = formula.by_k;
        object["b_enumerated"] = enumerated.by_k;
        object["agree"] = agree;
        emit_json(object, out_path);
        return agree ? kExitOk : kExitMismatch;
      }
      if (coprime) {
        ordered_json object = base_object(box, "formula");
        object["b"] = billiards::bounce_table_formula(box).by_k;
        emit_json(object, out_path);
        return kExitOk;
      }
      ordered_json object = base_object(box, "enumeration");
      object["b"] = billiards::bounce_table_enumerated(box, lattice_cap).by_k;
      object["note"] = "sides are not pairwise coprime; closed form skipped";
      emit_json(object, out_path);
      return kExitOk;
    }

    if (app.got_subcommand(bench)) {
      const billiards::BoxSpec box = billiards::make_box(parse_rational_list(sides_text));
      const billiards::ScaledQuery query =
          billiards::scale_point(box, parse_rational_list(point_text));
      const billiards::BenchReport report =
          billiards::bench_point(query.box, query.point, sim_cap);
      ordered_json object = base_object(query.box, "bench");
      object["point"] = query.point.coords;
      object["analytic_ns"] = report.analytic_ns;
      object["analytic_m"] = report.analytic_m;
      object["simulate_skipped"] = !report.simulated;
      if (report.simulated) {
        object["simulate_ns"] = report.simulate_ns;
        object["simulate_m"] = report.simulate_m;
      } else {
        object["simulate_ns"] = nullptr;
        object["simulate_m"] = nullptr;
      }
      emit_json(object, out_path);
      return kExitOk;
    }
  } catch (const billiards::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapRefusal;
  } catch (const billiards::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const billiards::ArithmeticOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
