#pragma once

#include <optional>
#include <vector>

#include "billiards/board.hpp"
#include "billiards/csp.hpp"

namespace billiards {

inline constexpr Int kDefaultLatticeCap = 10'000'000;

enum class Method { Csp, CornerConvention, Formula, Simulation };
const char* method_name(Method method);

struct CrossingResult {
  Int m = 0;
  Method method = Method::Csp;
  std::optional<std::vector<Int>> times;  // ascending, size m when present
};

// Crossing number of a lattice point, in closed form over congruences
// rather than by walking. Corners follow the convention m = 1 for the
// start and the end corner, 0 otherwise. Any other point is counted as
// |A(G)| / 2^(|J(v)|+1) from the sign-compatibility CSP; the division is
// exact because every index in J(v) is an isolated vertex of H.
CrossingResult crossing_number(const BoxSpec& box, const LatticePoint& v);

// Steps t in [1, ell-1] at which the trajectory crosses a non-corner v.
// Per representative satisfying assignment g (fixed to 0 on J(v)), the
// merged congruence x = (-1)^g(i) * v_i mod 2a_i has a unique solution in
// [0, 2 ell); the crossing step is min(x, 2 ell - x).
CrossingResult crossing_times(const BoxSpec& box, const LatticePoint& v,
                              Int assignment_cap = kDefaultAssignmentCap);

bool pairwise_coprime(const BoxSpec& box);

// Closed form for pairwise coprime sides and non-corner v:
// 2^(n-1-|I(v)|) when v is parity-consistent, else 0.
Int coprime_crossing_formula(const BoxSpec& box, const LatticePoint& v);

// 2^(n-1-|I(v)|) bounds the crossing number for any sides; non-corner v.
Int crossing_upper_bound(const BoxSpec& box, const LatticePoint& v);

// by_k[k] = number of crossed points with exactly k boundary coordinates.
struct BounceTable {
  std::vector<Int> by_k;
  bool operator==(const BounceTable&) const = default;
};

// b_k = 2^(1-n+k) * sum over k-subsets K of prod_{j not in K} (a_j - 1).
// Requires pairwise coprime sides; the division is exact term by term.
BounceTable bounce_table_formula(const BoxSpec& box);

// Exhaustive lattice count of crossed points grouped by |I(v)|; any sides.
BounceTable bounce_table_enumerated(const BoxSpec& box,
                                    Int lattice_cap = kDefaultLatticeCap);

struct SumIdentity {
  Int lhs = 0;
  Int rhs = 0;
  bool equal = false;
};

// Sum of crossing numbers over all lattice points, origin excluded,
// compared against ell. The walk crosses ell points counted with
// multiplicity when the start is left out.
SumIdentity sum_identity_check(const BoxSpec& box, Int lattice_cap = kDefaultLatticeCap);

}  // namespace billiards
