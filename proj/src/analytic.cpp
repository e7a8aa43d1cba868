#include "billiards/analytic.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace billiards {

namespace {

Int power_of_two(int exponent) {
  if (exponent < 0) throw std::logic_error("negative power of two requested");
  if (exponent >= 63) {
    throw ArithmeticOverflow("2^" + std::to_string(exponent) + " exceeds 64 bits");
  }
  return Int{1} << exponent;
}

void require_lattice_within_cap(const BoxSpec& box, Int lattice_cap) {
  const Int size = lattice_size(box);
  if (size > lattice_cap) {
    throw CapExceeded("lattice enumeration of " + std::to_string(size) +
                      " points exceeds cap " + std::to_string(lattice_cap));
  }
}

}  // namespace

const char* method_name(Method method) {
  switch (method) {
    case Method::Csp: return "csp";
    case Method::CornerConvention: return "corner-convention";
    case Method::Formula: return "formula";
    case Method::Simulation: return "simulation";
  }
  return "unknown";
}

CrossingResult crossing_number(const BoxSpec& box, const LatticePoint& v) {
  const BoundaryProfile profile = classify(box, v);
  if (profile.corner) {
    const bool crossed = v == box.origin() || v == end_corner(box);
    return {crossed ? 1 : 0, Method::CornerConvention, std::nullopt};
  }
  const AssignmentCount count = count_assignments(build_csp(box, v));
  if (count.total == 0) return {0, Method::Csp, std::nullopt};
  const int j = static_cast<int>(profile.self_paired.size());
  // Each index of J(v) is an isolated vertex of H once the instance is
  // satisfiable, and at least one further component exists, so the
  // quotient below is an exact power of two.
  if (count.component_count < j + 1) {
    throw std::logic_error("component count below |J(v)|+1 on a satisfiable instance");
  }
  return {count.total >> (j + 1), Method::Csp, std::nullopt};
}

CrossingResult crossing_times(const BoxSpec& box, const LatticePoint& v, Int assignment_cap) {
  const BoundaryProfile profile = classify(box, v);
  if (profile.corner) {
    throw ValidationError("crossing times are defined for non-corner points only");
  }
  const CspInstance csp = build_csp(box, v);
  const AssignmentCount count = count_assignments(csp);
  CrossingResult out{0, Method::Csp, std::vector<Int>{}};
  if (count.total == 0) return out;
  const int j = static_cast<int>(profile.self_paired.size());
  const Int expected_m = count.total >> (j + 1);
  const Int two_ell = checked_mul(2, box.ell);
  std::set<Int> steps;
  Int representatives = 0;
  for (const Assignment& g : enumerate_assignments(csp, assignment_cap)) {
    // One representative per class of assignments agreeing off J(v): the
    // J(v) indices are isolated, so pinning them to 0 picks exactly one.
    const bool representative = std::all_of(profile.self_paired.begin(),
                                            profile.self_paired.end(),
                                            [&g](int i) { return g[i] == 0; });
    if (!representative) continue;
    ++representatives;
    CongruenceSystem system;
    system.items.reserve(v.coords.size());
    for (int i = 0; i < box.n(); ++i) {
      const Int period = checked_mul(2, box.sides[i]);
      const Int residue = g[i] ? mod_floor(-v.coords[i], period) : v.coords[i];
      system.items.push_back({residue, period});
    }
    const auto merged = crt_merge(system);
    if (!merged) {
      throw std::logic_error("satisfying assignment produced an unsolvable congruence system");
    }
    if (merged->modulus != two_ell) {
      throw std::logic_error("merged modulus differs from twice the trajectory length");
    }
    const Int x = merged->residue;
    const Int t = x <= box.ell ? x : two_ell - x;
    if (t < 1 || t >= box.ell) {
      throw std::logic_error("crossing step outside the open trajectory interval");
    }
    steps.insert(t);
  }
  if (representatives != count.total >> j) {
    throw std::logic_error("representative count differs from class count");
  }
  if (static_cast<Int>(steps.size()) != expected_m) {
    throw std::logic_error("crossing step count differs from the crossing number");
  }
  out.m = expected_m;
  out.times->assign(steps.begin(), steps.end());
  return out;
}

bool pairwise_coprime(const BoxSpec& box) {
  for (int i = 0; i < box.n(); ++i) {
    for (int j = i + 1; j < box.n(); ++j) {
      if (std::gcd(box.sides[i], box.sides[j]) != 1) return false;
    }
  }
  return true;
}

Int coprime_crossing_formula(const BoxSpec& box, const LatticePoint& v) {
  if (!pairwise_coprime(box)) {
    throw ValidationError("closed form requires pairwise coprime sides");
  }
  const BoundaryProfile profile = classify(box, v);
  if (profile.corner) {
    throw ValidationError("closed form applies to non-corner points only");
  }
  if (!parity_consistent(box, v)) return 0;
  return power_of_two(box.n() - 1 - static_cast<int>(profile.boundary.size()));
}

Int crossing_upper_bound(const BoxSpec& box, const LatticePoint& v) {
  const BoundaryProfile profile = classify(box, v);
  if (profile.corner) {
    throw ValidationError("bound applies to non-corner points only");
  }
  return power_of_two(box.n() - 1 - static_cast<int>(profile.boundary.size()));
}

BounceTable bounce_table_formula(const BoxSpec& box) {
  if (!pairwise_coprime(box)) {
    throw ValidationError("bounce formula requires pairwise coprime sides");
  }
  const int n = box.n();
  if (n > 24) {
    throw CapExceeded("bounce formula iterates 2^n subsets; n=" + std::to_string(n) +
                      " is too large");
  }
  // subset_sum[k] = sum over k-subsets K of prod_{j not in K} (a_j - 1).
  std::vector<Int> subset_sum(n + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Int product = 1;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) product = checked_mul(product, box.sides[j] - 1);
    }
    const int k = std::popcount(mask);
    subset_sum[k] = checked_add(subset_sum[k], product);
  }
  BounceTable table;
  table.by_k.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    const int exponent = 1 - n + k;
    if (exponent >= 0) {
      table.by_k.push_back(checked_mul(subset_sum[k], power_of_two(exponent)));
    } else {
      const Int divisor = power_of_two(-exponent);
      if (subset_sum[k] % divisor != 0) {
        throw std::logic_error("bounce subset sum is not divisible by 2^(n-1-k)");
      }
      table.by_k.push_back(subset_sum[k] / divisor);
    }
  }
  return table;
}

BounceTable bounce_table_enumerated(const BoxSpec& box, Int lattice_cap) {
  require_lattice_within_cap(box, lattice_cap);
  BounceTable table;
  table.by_k.assign(box.n() + 1, 0);
  for_each_lattice_point(box, [&](const LatticePoint& v) {
    if (crossing_number(box, v).m == 0) return;
    ++table.by_k[classify(box, v).boundary.size()];
  });
  return table;
}

SumIdentity sum_identity_check(const BoxSpec& box, Int lattice_cap) {
  require_lattice_within_cap(box, lattice_cap);
  const LatticePoint origin = box.origin();
  Int lhs = 0;
  for_each_lattice_point(box, [&](const LatticePoint& v) {
    if (v == origin) return;
    lhs = checked_add(lhs, crossing_number(box, v).m);
  });
  return {lhs, box.ell, lhs == box.ell};
}

}  // namespace billiards
