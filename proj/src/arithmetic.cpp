#include "floorsum/arithmetic.hpp"

#include <array>
#include <limits>
#include <string>

#include "floorsum/exact_kernel.hpp"

namespace floorsum {

LiouvilleSieve::LiouvilleSieve(std::uint64_t limit, std::uint64_t budget) : limit_(limit) {
  if (limit == 0) {
    throw DomainError("Liouville sieve limit must be at least 1");
  }
  if (limit > budget || limit >= std::numeric_limits<std::int32_t>::max()) {
    throw CapacityError("Liouville sieve limit " + std::to_string(limit) +
                        " exceeds the memory budget of " + std::to_string(budget) + " entries");
  }

  const auto size = static_cast<std::size_t>(limit) + 1;
  omega_.assign(size, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (omega_[i] == 0) {
      omega_[i] = 1;
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (const std::uint32_t p : primes) {
      const std::uint64_t composite = i * p;
      if (composite > limit) {
        break;
      }
      omega_[composite] = static_cast<std::uint8_t>(omega_[i] + 1);
      if (i % p == 0) {
        break;
      }
    }
  }

  prefix_.assign(size, 0);
  for (std::uint64_t i = 1; i <= limit; ++i) {
    prefix_[i] = prefix_[i - 1] + lambda(i);
  }
}

LiouvilleSieve build_liouville_sieve(std::uint64_t limit, std::uint64_t budget) {
  return LiouvilleSieve(limit, budget);
}

unsigned big_omega(std::uint64_t n) {
  if (n == 0) {
    throw DomainError("big_omega: n must be positive");
  }
  unsigned count = 0;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    while (n % p == 0) {
      n /= p;
      ++count;
    }
  }
  if (n > 1) {
    ++count;
  }
  return count;
}

namespace {

constexpr std::uint64_t kTrialDivisionBound = 10'000;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<Natural>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1u) {
      result = mul_mod(result, base, m);
    }
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// True when `a` proves n composite. n odd, n - 1 = d * 2^s with d odd.
bool is_witness(std::uint64_t a, std::uint64_t n, std::uint64_t d, unsigned s) {
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) {
    return false;
  }
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t p = 2; p * p <= n && p < kTrialDivisionBound; ++p) {
    if (n % p == 0) {
      return false;
    }
  }
  if (n < kTrialDivisionBound * kTrialDivisionBound) {
    return true;
  }

  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  // The first twelve primes are a deterministic witness set below 3.18e23.
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (const auto a : kBases) {
    if (is_witness(a, n, d, s)) {
      return false;
    }
  }
  return true;
}

std::int64_t liouville_divisor_sum(const LiouvilleSieve& sieve, std::uint64_t k) {
  std::int64_t total = 0;
  for (std::uint64_t d = 1; d <= k;) {
    const std::uint64_t q = k / d;
    const std::uint64_t last = k / q;
    total += static_cast<std::int64_t>(q) * (sieve.summatory(last) - sieve.summatory(d - 1));
    d = last + 1;
  }
  return total;
}

std::vector<LiouvilleRow> liouville_inversion_check(std::uint64_t k_max, std::uint64_t budget) {
  const LiouvilleSieve sieve(k_max, budget);
  std::vector<LiouvilleRow> rows;
  rows.reserve(static_cast<std::size_t>(k_max));
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    LiouvilleRow row;
    row.k = k;
    row.lhs = isqrt(k);
    row.rhs = liouville_divisor_sum(sieve, k);
    row.holds = row.rhs == static_cast<std::int64_t>(row.lhs);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace floorsum
