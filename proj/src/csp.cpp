#include "billiards/csp.hpp"

#include <numeric>
#include <stdexcept>

namespace billiards {

namespace {

// Union-find storing, per node, the parity of its value relative to the
// parent. Supports "equal" (relation 0) and "unequal" (relation 1) merges.
class ParityDsu {
 public:
  explicit ParityDsu(int n) : parent_(n), size_(n, 1), parity_(n, 0), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  // Returns {root, parity of x relative to root} and compresses the path.
  std::pair<int, int> find(int x) {
    int root = x;
    int parity = 0;
    while (parent_[root] != root) {
      parity ^= parity_[root];
      root = parent_[root];
    }
    int node = x;
    int node_parity = parity;
    while (parent_[node] != root) {
      const int next = parent_[node];
      const int edge = parity_[node];
      parent_[node] = root;
      parity_[node] = node_parity;
      node = next;
      node_parity ^= edge;
    }
    return {root, parity};
  }

  // Enforce value(x) xor value(y) == relation; false on contradiction.
  bool unite(int x, int y, int relation) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == relation;
    if (size_[rx] < size_[ry]) {
      std::swap(rx, ry);
      std::swap(px, py);
    }
    parent_[ry] = rx;
    parity_[ry] = px ^ py ^ relation;
    size_[rx] += size_[ry];
    --components_;
    return true;
  }

  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> parity_;
  int components_;
};

struct Solved {
  ParityDsu dsu;
  bool satisfiable;
};

Solved solve(const CspInstance& csp) {
  if (csp.var_count < 1) throw ValidationError("CSP needs at least one variable");
  ParityDsu dsu(csp.var_count);
  bool satisfiable = true;
  for (const auto& [pair, kind] : csp.constraints) {
    const auto [i, j] = pair;
    switch (kind) {
      case ConstraintKind::Free:
        break;
      case ConstraintKind::RequireEqual:
        satisfiable &= dsu.unite(i, j, 0);
        break;
      case ConstraintKind::RequireUnequal:
        satisfiable &= dsu.unite(i, j, 1);
        break;
      case ConstraintKind::Impossible:
        // Still an edge of H: it merges components, and forces zero total.
        dsu.unite(i, j, 0);
        satisfiable = false;
        break;
    }
  }
  return {std::move(dsu), satisfiable};
}

}  // namespace

const char* constraint_name(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::Free: return "free";
    case ConstraintKind::RequireEqual: return "require-equal";
    case ConstraintKind::RequireUnequal: return "require-unequal";
    case ConstraintKind::Impossible: return "impossible";
  }
  return "unknown";
}

ConstraintKind CspInstance::constraint(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= var_count || j >= var_count) {
    throw ValidationError("constraint indices out of range");
  }
  if (i > j) std::swap(i, j);
  const auto it = constraints.find({i, j});
  return it == constraints.end() ? ConstraintKind::Free : it->second;
}

void CspInstance::set_constraint(int i, int j, ConstraintKind kind) {
  if (i == j || i < 0 || j < 0 || i >= var_count || j >= var_count) {
    throw ValidationError("constraint indices out of range");
  }
  if (i > j) std::swap(i, j);
  if (kind == ConstraintKind::Free) {
    constraints.erase({i, j});
  } else {
    constraints[{i, j}] = kind;
  }
}

CspInstance build_csp(const BoxSpec& box, const LatticePoint& v) {
  if (!box.contains(v)) {
    throw ValidationError("point " + format_point(v) + " is not a lattice point of the box");
  }
  CspInstance csp;
  csp.var_count = box.n();
  for (int i = 0; i < box.n(); ++i) {
    for (int j = i + 1; j < box.n(); ++j) {
      const Int g = std::gcd(2 * box.sides[i], 2 * box.sides[j]);
      const bool same_sign = mod_floor(v.coords[i] - v.coords[j], g) == 0;
      const bool opposite_sign = mod_floor(checked_add(v.coords[i], v.coords[j]), g) == 0;
      ConstraintKind kind;
      if (same_sign && opposite_sign) {
        kind = ConstraintKind::Free;
      } else if (same_sign) {
        kind = ConstraintKind::RequireEqual;
      } else if (opposite_sign) {
        kind = ConstraintKind::RequireUnequal;
      } else {
        kind = ConstraintKind::Impossible;
      }
      csp.set_constraint(i, j, kind);
    }
  }
  return csp;
}

AssignmentCount count_assignments(const CspInstance& csp) {
  auto [dsu, satisfiable] = solve(csp);
  const int k = dsu.components();
  if (satisfiable && k >= 63) {
    throw ArithmeticOverflow("2^" + std::to_string(k) + " exceeds 64 bits");
  }
  return {satisfiable, k, satisfiable ? Int{1} << k : 0};
}

std::vector<Assignment> enumerate_assignments(const CspInstance& csp, Int cap) {
  auto [dsu, satisfiable] = solve(csp);
  if (!satisfiable) return {};
  const int k = dsu.components();
  if (k >= 63) throw ArithmeticOverflow("2^" + std::to_string(k) + " exceeds 64 bits");
  const Int total = Int{1} << k;
  if (total > cap) {
    throw CapExceeded("enumerating " + std::to_string(total) + " assignments exceeds cap " +
                      std::to_string(cap) + "; use count_assignments");
  }
  // Component roots indexed by first appearance, so the output order is
  // stable across union-find internals.
  std::vector<int> root_bit(csp.var_count, -1);
  int bits = 0;
  for (int i = 0; i < csp.var_count; ++i) {
    const int root = dsu.find(i).first;
    if (root_bit[root] < 0) root_bit[root] = bits++;
  }
  std::vector<Assignment> out;
  out.reserve(static_cast<std::size_t>(total));
  for (Int mask = 0; mask < total; ++mask) {
    Assignment g(csp.var_count);
    for (int i = 0; i < csp.var_count; ++i) {
      const auto [root, parity] = dsu.find(i);
      g[i] = static_cast<std::uint8_t>(((mask >> root_bit[root]) & 1) ^ parity);
    }
    if (!assignment_satisfies(csp, g)) {
      throw std::logic_error("enumerated assignment violates a constraint");
    }
    out.push_back(std::move(g));
  }
  return out;
}

bool assignment_satisfies(const CspInstance& csp, const Assignment& g) {
  if (static_cast<int>(g.size()) != csp.var_count) {
    throw ValidationError("assignment length differs from variable count");
  }
  for (const auto& [pair, kind] : csp.constraints) {
    const bool equal = g[pair.first] == g[pair.second];
    switch (kind) {
      case ConstraintKind::Free:
        break;
      case ConstraintKind::RequireEqual:
        if (!equal) return false;
        break;
      case ConstraintKind::RequireUnequal:
        if (equal) return false;
        break;
      case ConstraintKind::Impossible:
        return false;
    }
  }
  return true;
}

}  // namespace billiards
