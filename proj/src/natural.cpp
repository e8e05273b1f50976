#include "floorsum/natural.hpp"

#include <algorithm>

namespace floorsum {

std::string to_string(Natural value) {
  if (value == 0) {
    return "0";
  }
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string to_string(Wide value) {
  if (value >= 0) {
    return to_string(static_cast<Natural>(value));
  }
  // Negate in unsigned space so the minimum value is handled.
  return "-" + to_string(Natural{0} - static_cast<Natural>(value));
}

Natural parse_natural(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty integer literal");
  }
  Natural value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("invalid digit in integer literal: " + std::string(text));
    }
    value = checked_add(checked_mul(value, 10), static_cast<Natural>(c - '0'));
  }
  return value;
}

}  // namespace floorsum
