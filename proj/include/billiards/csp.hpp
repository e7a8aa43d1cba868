#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "billiards/board.hpp"

namespace billiards {

// Pairwise constraint on two binary variables, named by what it requires.
// In forbidden-pair terms: Free forbids nothing, RequireEqual forbids the
// two mixed pairs, RequireUnequal forbids the two equal pairs, Impossible
// forbids all four.
enum class ConstraintKind : std::uint8_t { Free, RequireEqual, RequireUnequal, Impossible };

const char* constraint_name(ConstraintKind kind);

// Binary CSP over variables 0..var_count-1, at most one constraint per
// unordered pair. Only non-Free constraints are stored; they are exactly
// the edges of the auxiliary graph H.
struct CspInstance {
  int var_count = 0;
  std::map<std::pair<int, int>, ConstraintKind> constraints;  // keys i < j

  ConstraintKind constraint(int i, int j) const;
  void set_constraint(int i, int j, ConstraintKind kind);
};

struct AssignmentCount {
  bool satisfiable = false;
  int component_count = 0;  // components of H, isolated vertices included
  Int total = 0;            // 2^component_count if satisfiable, else 0
};

using Assignment = std::vector<std::uint8_t>;  // values in {0, 1}

inline constexpr Int kDefaultAssignmentCap = Int{1} << 16;

// Sign-compatibility instance of a lattice point: for each pair i < j with
// g = gcd(2a_i, 2a_j), tests v_i = v_j mod g and v_i = -v_j mod g and keeps
// exactly the sign choices those congruences allow.
CspInstance build_csp(const BoxSpec& box, const LatticePoint& v);

// Counts satisfying assignments with a parity union-find: an Impossible or
// conflicting edge gives 0, otherwise 2^(components of H).
AssignmentCount count_assignments(const CspInstance& csp);

// All satisfying assignments: one free bit per component root, expanded
// through the stored parities. Closed under complement. Throws CapExceeded
// when the count exceeds cap; count_assignments still works then.
std::vector<Assignment> enumerate_assignments(const CspInstance& csp,
                                              Int cap = kDefaultAssignmentCap);

bool assignment_satisfies(const CspInstance& csp, const Assignment& g);

}  // namespace billiards
