#include "billiards/bench.hpp"

#include <chrono>

namespace billiards {

BenchReport bench_point(const BoxSpec& box, const LatticePoint& v, Int sim_cap) {
  using Clock = std::chrono::steady_clock;
  BenchReport report;
  report.ell = box.ell;

  const auto analytic_start = Clock::now();
  const CrossingResult analytic = crossing_number(box, v);
  const auto analytic_stop = Clock::now();
  report.analytic_ns =
      std::chrono::duration_cast<std::chrono::nanoseconds>(analytic_stop - analytic_start)
          .count();
  report.analytic_m = analytic.m;

  if (box.ell <= sim_cap) {
    const auto simulate_start = Clock::now();
    const SimulatedVisits simulated = simulate_point(box, v, sim_cap);
    const auto simulate_stop = Clock::now();
    report.simulated = true;
    report.simulate_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(simulate_stop - simulate_start)
            .count();
    report.simulate_m = simulated.m;
  }
  return report;
}

}  // namespace billiards
