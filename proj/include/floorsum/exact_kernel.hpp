#pragma once

// Exact integer kernel for the floor/ceiling sums of square roots.
//
// Every quantity here is computed in integer arithmetic. Floating point is
// only ever used to seed isqrt, and its estimate is corrected and re-verified
// exactly before being returned.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "floorsum/natural.hpp"

namespace floorsum {

/// floor(sqrt(x)), exact for the full 128-bit range.
[[nodiscard]] Natural isqrt(Natural x) noexcept;

/// 64-bit overload; same contract.
[[nodiscard]] std::uint64_t isqrt(std::uint64_t x) noexcept;

/// ceil(a / b). Throws DomainError when b == 0.
[[nodiscard]] Natural ceil_div(Natural a, Natural b);

/// One row of a range verification of sum_{j=1}^{n} (-1)^{j+1} floor(sqrt(jn)) = (n+1)/2.
struct AltSumRecord {
  std::uint64_t n = 0;
  Wide lhs = 0;
  Natural rhs = 0;
  bool holds = false;

  friend bool operator==(const AltSumRecord&, const AltSumRecord&) = default;
};

/// sum_{j=1}^{n} (-1)^{j+1} floor(sqrt(j n)).
///
/// Accepts even n as well; only odd n carry the closed form (n+1)/2.
/// Throws DomainError for n == 0 and OverflowError when n^2 does not fit in
/// a Natural (n >= 2^64).
[[nodiscard]] Wide alt_floor_sum(Natural n);

/// Evaluates alt_floor_sum(n) and compares it against (n+1)/2. n must be odd.
[[nodiscard]] AltSumRecord verify_alt_sum(std::uint64_t n);

/// sum_{j=1}^{(p-1)/4} floor(sqrt(j p)) for p = 1 (mod 4).
///
/// Only the residue class is checked here; primality is the caller's concern.
[[nodiscard]] Natural polya_sum(Natural p);

/// #{1 <= k <= n : ceil(k^2 / n) is odd}.
[[nodiscard]] Natural odd_ceil_count(Natural n);

/// A maximal block of consecutive zero differences. `start` is the 1-based ell.
struct ZeroRun {
  std::size_t start = 0;
  std::size_t length = 0;

  friend bool operator==(const ZeroRun&, const ZeroRun&) = default;
};

/// An entry d >= 2 of the difference table; `length` is its surplus d - 1.
struct SurplusBlock {
  std::size_t ell = 0;
  std::uint64_t length = 0;

  friend bool operator==(const SurplusBlock&, const SurplusBlock&) = default;
};

/// d_n(ell) = floor(sqrt(2 ell n)) - floor(sqrt((2 ell - 1) n)) for ell = 1..(n-1)/2,
/// together with its zero runs and surplus blocks.
struct DifferenceTable {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> values;     // values[ell - 1] = d_n(ell)
  std::vector<ZeroRun> zero_runs;        // sorted by start
  std::vector<SurplusBlock> surplus;     // sorted by ell

  [[nodiscard]] std::uint64_t zero_count() const noexcept;
  [[nodiscard]] std::uint64_t surplus_total() const noexcept;
  /// Surplus lengths as a multiset, largest first.
  [[nodiscard]] std::vector<std::uint64_t> surplus_multiset() const;
  [[nodiscard]] std::vector<std::uint64_t> run_lengths() const;
};

/// Builds the difference table for odd n >= 3. Throws DomainError otherwise.
[[nodiscard]] DifferenceTable difference_table(std::uint64_t n);

}  // namespace floorsum
