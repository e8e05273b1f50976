#include "floorsum/exact_kernel.hpp"

#include <algorithm>
#include <cmath>

#include "floorsum/detail/sweep.hpp"

namespace floorsum {

using detail::alternating_sweep;
using detail::odd_ceil_sweep;
using detail::sqrt_sweep;

namespace {

constexpr std::uint64_t kU32Max = 0xFFFF'FFFFu;
constexpr Natural kU64Max = std::numeric_limits<std::uint64_t>::max();

// Below this bound the sweeps run entirely in 64-bit arithmetic:
// (n + 1)^2 < 2^64.
constexpr Natural kNarrowSweepLimit = Natural{1} << 31;

}  // namespace

std::uint64_t isqrt(std::uint64_t x) noexcept {
  if (x == 0) {
    return 0;
  }
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  r = std::min(r, kU32Max);
  while (r * r > x) {
    --r;
  }
  while (r < kU32Max && (r + 1) * (r + 1) <= x) {
    ++r;
  }
  return r;
}

Natural isqrt(Natural x) noexcept {
  if (x <= kU64Max) {
    return isqrt(static_cast<std::uint64_t>(x));
  }
  // long double carries a 64-bit mantissa on x86; elsewhere it may be no wider
  // than double. Integer Newton steps absorb either error.
  auto r = static_cast<Natural>(std::sqrt(static_cast<long double>(x)));
  r = std::clamp<Natural>(r, 1, kU64Max);
  // One step lands on or above floor(sqrt(x)); further steps descend to it.
  r = (r + x / r) / 2;
  for (;;) {
    const Natural next = (r + x / r) / 2;
    if (next >= r) {
      break;
    }
    r = next;
  }
  r = std::min(r, kU64Max);
  // Exact re-verification of r^2 <= x < (r+1)^2. r < 2^64 so r^2 fits, and
  // (r+1)^2 > x is tested as r+1 > x / (r+1).
  while (r * r > x) {
    --r;
  }
  while (r < kU64Max && (r + 1) <= x / (r + 1)) {
    ++r;
  }
  return r;
}

Natural ceil_div(Natural a, Natural b) {
  if (b == 0) {
    throw DomainError("ceil_div: division by zero");
  }
  return a == 0 ? 0 : (a - 1) / b + 1;
}

Wide alt_floor_sum(Natural n) {
  if (n == 0) {
    throw DomainError("alt_floor_sum: n must be positive");
  }
  // The sweep tracks (root + 1)^2 up to (n + 1)^2, which must fit.
  if (n >= kU64Max) {
    throw OverflowError("alt_floor_sum: n * n exceeds kernel capacity");
  }
  if (n < kNarrowSweepLimit) {
    return alternating_sweep<std::uint64_t>(static_cast<std::uint64_t>(n));
  }
  return alternating_sweep<Natural>(n);
}

AltSumRecord verify_alt_sum(std::uint64_t n) {
  if (n % 2 == 0) {
    throw DomainError("verify_alt_sum: n must be odd");
  }
  AltSumRecord record;
  record.n = n;
  record.lhs = alt_floor_sum(n);
  record.rhs = (Natural{n} + 1) / 2;
  record.holds = record.lhs == static_cast<Wide>(record.rhs);
  return record;
}

Natural polya_sum(Natural p) {
  if (p % 4 != 1) {
    throw DomainError("polya_sum: p must be congruent to 1 mod 4");
  }
  const Natural count = (p - 1) / 4;
  (void)checked_mul(checked_add(count, 1), p);
  if (p < kNarrowSweepLimit) {
    std::uint64_t total = 0;
    sqrt_sweep<std::uint64_t>(static_cast<std::uint64_t>(count), static_cast<std::uint64_t>(p),
                              [&](std::uint64_t, std::uint64_t root) { total += root; });
    return total;
  }
  Natural total = 0;
  sqrt_sweep<Natural>(count, p, [&](Natural, Natural root) { total += root; });
  return total;
}

Natural odd_ceil_count(Natural n) {
  if (n == 0) {
    throw DomainError("odd_ceil_count: n must be positive");
  }
  (void)checked_mul(n, n);
  if (n <= kU32Max) {
    return odd_ceil_sweep<std::uint64_t>(static_cast<std::uint64_t>(n));
  }
  return odd_ceil_sweep<Natural>(n);
}

std::uint64_t DifferenceTable::zero_count() const noexcept {
  std::uint64_t total = 0;
  for (const auto& run : zero_runs) {
    total += run.length;
  }
  return total;
}

std::uint64_t DifferenceTable::surplus_total() const noexcept {
  std::uint64_t total = 0;
  for (const auto& block : surplus) {
    total += block.length;
  }
  return total;
}

std::vector<std::uint64_t> DifferenceTable::surplus_multiset() const {
  std::vector<std::uint64_t> out;
  out.reserve(surplus.size());
  for (const auto& block : surplus) {
    out.push_back(block.length);
  }
  std::sort(out.begin(), out.end(), std::greater<>{});
  return out;
}

std::vector<std::uint64_t> DifferenceTable::run_lengths() const {
  std::vector<std::uint64_t> out;
  out.reserve(zero_runs.size());
  for (const auto& run : zero_runs) {
    out.push_back(run.length);
  }
  return out;
}

DifferenceTable difference_table(std::uint64_t n) {
  if (n < 3 || n % 2 == 0) {
    throw DomainError("difference_table: n must be odd and at least 3");
  }
  const Natural wide_n = n;
  const std::size_t half = static_cast<std::size_t>((n - 1) / 2);
  (void)checked_mul(wide_n, wide_n);

  DifferenceTable table;
  table.n = n;
  table.values.reserve(half);
  for (std::size_t ell = 1; ell <= half; ++ell) {
    const Natural upper = isqrt(Natural{2 * ell} * wide_n);
    const Natural lower = isqrt(Natural{2 * ell - 1} * wide_n);
    const auto d = static_cast<std::uint64_t>(upper - lower);
    table.values.push_back(d);
    if (d >= 2) {
      table.surplus.push_back({ell, d - 1});
    }
  }

  for (std::size_t i = 0; i < half;) {
    if (table.values[i] != 0) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < half && table.values[end] == 0) {
      ++end;
    }
    table.zero_runs.push_back({i + 1, end - i});
    i = end;
  }
  return table;
}

}  // namespace floorsum
