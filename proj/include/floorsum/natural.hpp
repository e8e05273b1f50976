#pragma once

// Wide unsigned integers with checked arithmetic, plus the error types shared
// by every floorsum module.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace floorsum {

/// Non-negative integer with 128-bit magnitude. Products j*n up to n^2 with
/// n < 2^64 fit without wraparound.
using Natural = unsigned __int128;

/// Signed companion of Natural, used for alternating sums.
using Wide = __int128;

inline constexpr Natural kNaturalMax = std::numeric_limits<Natural>::max();

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a request exceeds a configured resource budget.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

[[nodiscard]] constexpr Natural checked_add(Natural a, Natural b) {
  Natural r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("Natural addition overflows 128 bits");
  }
  return r;
}

[[nodiscard]] constexpr Natural checked_mul(Natural a, Natural b) {
  Natural r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("Natural multiplication overflows 128 bits");
  }
  return r;
}

/// Decimal rendering; iostreams have no overload for 128-bit integers.
[[nodiscard]] std::string to_string(Natural value);
[[nodiscard]] std::string to_string(Wide value);

/// Parses a decimal string into a Natural. Throws std::invalid_argument on
/// malformed input and OverflowError when the value does not fit.
[[nodiscard]] Natural parse_natural(std::string_view text);

}  // namespace floorsum
