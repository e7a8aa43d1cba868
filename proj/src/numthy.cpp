#include "billiards/numthy.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace billiards {

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ArithmeticOverflow("integer addition overflows 64 bits");
  }
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ArithmeticOverflow("integer multiplication overflows 64 bits");
  }
  return out;
}

Int checked_neg(Int a) {
  if (a == std::numeric_limits<Int>::min()) {
    throw ArithmeticOverflow("integer negation overflows 64 bits");
  }
  return -a;
}

Int gcd(Int a, Int b) {
  if (a < 0 || b < 0) throw ValidationError("gcd expects non-negative arguments");
  return std::gcd(a, b);
}

Int lcm(Int a, Int b) {
  if (a < 1 || b < 1) throw ValidationError("lcm expects positive arguments");
  return checked_mul(a / std::gcd(a, b), b);
}

Int lcm_all(const std::vector<Int>& values) {
  if (values.empty()) throw ValidationError("lcm_all expects a non-empty list");
  Int acc = 1;
  for (Int v : values) acc = lcm(acc, v);
  return acc;
}

Int mod_floor(Int a, Int m) {
  if (m < 1) throw ValidationError("modulus must be positive");
  const Int r = a % m;
  return r < 0 ? r + m : r;
}

Int mul_mod(Int a, Int b, Int m) {
  if (m < 1) throw ValidationError("modulus must be positive");
  return static_cast<Int>(static_cast<__int128>(a) * b % m);
}

ExtGcd extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_x = std::exchange(x, old_x - q * x);
    old_y = std::exchange(y, old_y - q * y);
  }
  return {old_r, old_x, old_y};
}

Rational::Rational(Int num, Int den) : num_(num), den_(den) {
  if (den_ == 0) throw ValidationError("rational with zero denominator");
  if (den_ < 0) {
    num_ = checked_neg(num_);
    den_ = checked_neg(den_);
  }
  if (num_ == std::numeric_limits<Int>::min()) {
    throw ArithmeticOverflow("rational numerator out of range");
  }
  const Int g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Int Rational::times_exact(Int sigma) const {
  if (sigma % den_ != 0) {
    throw ValidationError("scale " + std::to_string(sigma) + " is not a multiple of denominator " +
                          std::to_string(den_));
  }
  return checked_mul(num_, sigma / den_);
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                  checked_mul(den_, o.den_));
}

Rational Rational::operator-(const Rational& o) const {
  return *this + Rational(checked_neg(o.num_), o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw ValidationError("rational division by zero");
  return Rational(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  const auto lhs = static_cast<__int128>(num_) * o.den_;
  const auto rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational parse_rational(const std::string& token) {
  const auto parse_int = [&token](const char* first, const char* last) -> Int {
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      throw ValidationError("not a rational number: '" + token + "'");
    }
    return value;
  };
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto slash = token.find('/');
  if (slash == std::string::npos) return Rational(parse_int(begin, end));
  const Int num = parse_int(begin, begin + slash);
  const Int den = parse_int(begin + slash + 1, end);
  if (den <= 0) throw ValidationError("denominator must be positive in '" + token + "'");
  return Rational(num, den);
}

namespace {

Congruence normalized(const Congruence& c) {
  if (c.modulus < 1) throw ValidationError("congruence modulus must be >= 1");
  return {mod_floor(c.residue, c.modulus), c.modulus};
}

// Merge two congruences into one modulo lcm of the moduli, or report that
// they disagree modulo the gcd.
std::optional<Congruence> merge_pair(const Congruence& lhs, const Congruence& rhs) {
  const Int g = std::gcd(lhs.modulus, rhs.modulus);
  const Int diff = rhs.residue - lhs.residue;  // |diff| < max modulus, safe
  if (diff % g != 0) return std::nullopt;
  const Int rm = rhs.modulus / g;
  const Int merged_modulus = checked_mul(lhs.modulus, rm);
  if (rm == 1) return Congruence{lhs.residue, merged_modulus};
  // lhs.residue + lhs.modulus * k = rhs.residue (mod rhs.modulus); the step
  // lhs.modulus/g is invertible mod rm.
  const Int step = mod_floor(lhs.modulus / g, rm);
  const Int inverse = mod_floor(extended_gcd(step, rm).x, rm);
  const Int k = mul_mod(mod_floor(diff / g, rm), inverse, rm);
  const Int residue = checked_add(lhs.residue, checked_mul(lhs.modulus, k));
  return Congruence{residue, merged_modulus};
}

}  // namespace

std::optional<Congruence> crt_merge(const CongruenceSystem& system) {
  if (system.items.empty()) throw ValidationError("congruence system must be non-empty");
  Congruence acc = normalized(system.items.front());
  for (std::size_t i = 1; i < system.items.size(); ++i) {
    const auto merged = merge_pair(acc, normalized(system.items[i]));
    if (!merged) return std::nullopt;
    acc = *merged;
  }
  return acc;
}

}  // namespace billiards
