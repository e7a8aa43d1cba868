#include "billiards/verify.hpp"

#include <algorithm>
#include <bit>
#include <optional>

namespace billiards {

bool VerifyReport::clean() const {
  return mismatches.empty() && theorem1_violations.empty() && theorem2_violations.empty() &&
         identity_failures.empty() && walker_failures.empty() && bounce_failures.empty();
}

std::vector<std::vector<Int>> box_family(int max_dim, Int max_side, Int max_lcm) {
  if (max_dim < 1 || max_side < 1 || max_lcm < 1) {
    throw ValidationError("box family bounds must be positive");
  }
  std::vector<std::vector<Int>> out;
  std::vector<Int> sides;
  const auto emit = [&](auto&& self, int depth) -> void {
    if (depth > 0) {
      bool fits = true;
      try {
        fits = lcm_all(sides) <= max_lcm;
      } catch (const ArithmeticOverflow&) {
        fits = false;
      }
      if (fits) out.push_back(sides);
    }
    if (depth == max_dim) return;
    for (Int a = 1; a <= max_side; ++a) {
      sides.push_back(a);
      self(self, depth + 1);
      sides.pop_back();
    }
  };
  emit(emit, 0);
  // Dimension-major order: stable for reports and tests.
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

namespace {

bool power_of_two_or_zero(Int m) {
  return m == 0 || (m > 0 && std::has_single_bit(static_cast<std::uint64_t>(m)));
}

void check_walkers(const BoxSpec& box, const WalkResult& reflected, const VisitMap& unfolded,
                   VerifyReport& report) {
  const std::vector<Int>& sides = box.sides;
  if (!(reflected.visit_map == unfolded)) {
    report.walker_failures.push_back({sides, "reflection and unfolded walkers disagree"});
  }
  if (reflected.t_final != box.ell) {
    report.walker_failures.push_back({sides, "trajectory length differs from lcm of sides"});
  }
  const LatticePoint halt = end_corner(box);
  if (reflected.polyline.vertices.empty() || reflected.polyline.vertices.back() != halt) {
    report.walker_failures.push_back({sides, "trajectory does not halt at the predicted corner"});
  }
  if (unfolded.total_visits != box.ell) {
    report.walker_failures.push_back({sides, "total visit count differs from ell"});
  }
  for (const auto& [point, steps] : unfolded.times) {
    if (!parity_consistent(box, point)) {
      report.walker_failures.push_back({sides, "visited point " + format_point(point) +
                                                   " violates the parity condition"});
    }
    if (box.is_corner(point) && point != halt) {
      report.walker_failures.push_back({sides, "trajectory crossed corner " +
                                                   format_point(point) + " before halting"});
    }
    (void)steps;
  }
}

}  // namespace

VerifyReport verify_boxes(const std::vector<std::vector<Int>>& boxes, Int sim_cap,
                          Int lattice_cap) {
  VerifyReport report;
  for (const std::vector<Int>& sides : boxes) {
    const BoxSpec box = make_box(sides);
    ++report.boxes_checked;
    const bool coprime = pairwise_coprime(box);
    if (coprime) ++report.coprime_boxes_checked;

    std::optional<VisitMap> simulated;
    if (box.ell <= sim_cap) {
      const WalkResult reflected = walk_reflect(box, sim_cap);
      VisitMap unfolded = walk_unfolded(box, sim_cap);
      check_walkers(box, reflected, unfolded, report);
      simulated = std::move(unfolded);
    } else {
      report.complete = false;
    }

    if (lattice_size(box) > lattice_cap) {
      report.complete = false;
      continue;
    }
    for_each_lattice_point(box, [&](const LatticePoint& v) {
      ++report.points_checked;
      const CrossingResult analytic = crossing_number(box, v);
      if (!power_of_two_or_zero(analytic.m)) {
        report.theorem1_violations.push_back(
            {sides, v.coords, analytic.m, 0, "crossing number is neither 0 nor a power of 2"});
      }
      if (simulated) {
        const Int simulated_m = visits(*simulated, v);
        if (analytic.m != simulated_m) {
          report.mismatches.push_back(
              {sides, v.coords, analytic.m, simulated_m, "crossing number"});
        } else if (!box.is_corner(v)) {
          const CrossingResult timed = crossing_times(box, v);
          const auto it = simulated->times.find(v);
          const std::vector<Int> expected = it == simulated->times.end()
                                                ? std::vector<Int>{}
                                                : it->second;
          if (*timed.times != expected) {
            report.mismatches.push_back(
                {sides, v.coords, timed.m, simulated_m, "crossing times"});
          }
        }
      }
      if (coprime && !box.is_corner(v)) {
        const Int closed_form = coprime_crossing_formula(box, v);
        if (closed_form != analytic.m) {
          report.theorem2_violations.push_back(
              {sides, v.coords, analytic.m, closed_form, "closed form"});
        }
      }
    });
    const SumIdentity identity = sum_identity_check(box, lattice_cap);
    if (!identity.equal) {
      report.identity_failures.push_back(
          {sides, "sum of crossing numbers is " + std::to_string(identity.lhs) +
                      ", expected ell = " + std::to_string(identity.rhs)});
    }
    if (coprime) {
      const BounceTable formula = bounce_table_formula(box);
      const BounceTable enumerated = bounce_table_enumerated(box, lattice_cap);
      if (!(formula == enumerated)) {
        report.bounce_failures.push_back({sides, "bounce formula differs from enumeration"});
      }
    }
  }
  return report;
}

}  // namespace billiards
