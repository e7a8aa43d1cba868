#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "billiards/errors.hpp"

namespace billiards {

using Int = std::int64_t;

// Checked 64-bit arithmetic: throws ArithmeticOverflow instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

Int gcd(Int a, Int b);  // non-negative arguments; gcd(0, 0) == 0
Int lcm(Int a, Int b);  // positive arguments; checked

// lcm of a non-empty list of positive integers.
Int lcm_all(const std::vector<Int>& values);

// Least non-negative representative of a mod m, m >= 1.
Int mod_floor(Int a, Int m);

// (a * b) mod m for a, b in [0, m); no intermediate overflow.
Int mul_mod(Int a, Int b, Int m);

// gcd(a, b) together with Bezout coefficients: a*x + b*y = g.
struct ExtGcd {
  Int g = 0;
  Int x = 0;
  Int y = 0;
};
ExtGcd extended_gcd(Int a, Int b);

// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(Int num) : num_(num) {}
  Rational(Int num, Int den);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  // this * sigma where den() divides sigma; exact.
  Int times_exact(Int sigma) const;

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  std::string str() const;

 private:
  Int num_ = 0;
  Int den_ = 1;
};

// Accepts "7", "-7" or "3/4"; the denominator must be a positive integer.
Rational parse_rational(const std::string& token);

struct Congruence {
  Int residue = 0;  // in [0, modulus)
  Int modulus = 1;  // >= 1
  bool operator==(const Congruence&) const = default;
};

struct CongruenceSystem {
  std::vector<Congruence> items;  // non-empty
};

// Left fold of pairwise merges. The system is solvable iff every two items
// agree modulo the gcd of their moduli; the result is then the unique
// congruence modulo lcm of all moduli implied by the system.
std::optional<Congruence> crt_merge(const CongruenceSystem& system);

}  // namespace billiards
