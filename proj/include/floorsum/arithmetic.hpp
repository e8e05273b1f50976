#pragma once

// Liouville function, prime-factor counting and primality.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "floorsum/natural.hpp"

namespace floorsum {

/// Default cap on sieve entries.
inline constexpr std::uint64_t kDefaultSieveBudget = 100'000'000;

/// lambda(n) = (-1)^Omega(n) and Omega(n) for 1 <= n <= limit, built by a
/// linear sieve in which every composite is reached once, from its smallest
/// prime factor: Omega(p * i) = Omega(i) + 1. Immutable once built.
class LiouvilleSieve {
 public:
  /// Throws DomainError for limit == 0 and CapacityError when limit exceeds
  /// `budget` entries.
  explicit LiouvilleSieve(std::uint64_t limit, std::uint64_t budget = kDefaultSieveBudget);

  [[nodiscard]] std::uint64_t limit() const noexcept { return limit_; }

  /// lambda(n) in {-1, +1}. Precondition: 1 <= n <= limit().
  [[nodiscard]] int lambda(std::uint64_t n) const noexcept { return (omega_[n] & 1u) ? -1 : 1; }

  /// Omega(n), prime factors counted with multiplicity.
  [[nodiscard]] unsigned omega(std::uint64_t n) const noexcept { return omega_[n]; }

  /// L(x) = sum_{d <= x} lambda(d), for 0 <= x <= limit().
  [[nodiscard]] std::int64_t summatory(std::uint64_t x) const noexcept { return prefix_[x]; }

 private:
  std::uint64_t limit_;
  std::vector<std::uint8_t> omega_;
  std::vector<std::int32_t> prefix_;  // |L(x)| <= x fits while limit < 2^31
};

[[nodiscard]] LiouvilleSieve build_liouville_sieve(std::uint64_t limit,
                                                   std::uint64_t budget = kDefaultSieveBudget);

/// Omega(n) by trial division. Throws DomainError for n == 0.
[[nodiscard]] unsigned big_omega(std::uint64_t n);

/// Deterministic primality test for every 64-bit input: trial division below
/// 10^4, Miller-Rabin with the first twelve prime bases above.
[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

struct LiouvilleRow {
  std::uint64_t k = 0;
  std::uint64_t lhs = 0;   // floor(sqrt(k))
  std::int64_t rhs = 0;    // sum_{d=1}^{k} lambda(d) floor(k / d)
  bool holds = false;

  friend bool operator==(const LiouvilleRow&, const LiouvilleRow&) = default;
};

/// sum_{d=1}^{k} lambda(d) floor(k / d), grouped over the O(sqrt k) distinct
/// quotients. Precondition: k <= sieve.limit().
[[nodiscard]] std::int64_t liouville_divisor_sum(const LiouvilleSieve& sieve, std::uint64_t k);

/// Compares floor(sqrt(k)) with the Liouville divisor sum for k = 1..k_max,
/// sharing a single sieve across all rows.
[[nodiscard]] std::vector<LiouvilleRow> liouville_inversion_check(
    std::uint64_t k_max, std::uint64_t budget = kDefaultSieveBudget);

}  // namespace floorsum
