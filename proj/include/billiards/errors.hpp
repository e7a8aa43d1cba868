#pragma once

#include <stdexcept>
#include <string>

namespace billiards {

// Exact arithmetic exceeded the 64-bit contract.
struct ArithmeticOverflow : std::overflow_error {
  explicit ArithmeticOverflow(const std::string& what) : std::overflow_error(what) {}
};

// Invalid input: malformed rationals, points outside the box, bad dimensions.
struct ValidationError : std::invalid_argument {
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured resource cap would be exceeded; the request was refused.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace billiards
