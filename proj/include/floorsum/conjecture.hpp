#pragma once

// Zero-run / surplus matching in the difference table.
//
// For odd n, every entry d >= 2 of the difference table carries a surplus of
// d - 1. The checker decides whether the surplus blocks can be laid out as
// disjoint consecutive blocks that exactly tile the zero runs. Blocks sharing
// a run can always be laid end to end, so the question reduces to splitting
// the surplus multiset into one group per run with each group summing to the
// run length.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "floorsum/exact_kernel.hpp"

namespace floorsum {

/// A surplus block placed inside a zero run.
struct BlockPlacement {
  std::size_t source_ell = 0;  // ell with d_n(ell) = length + 1
  std::uint64_t length = 0;
  std::size_t run_index = 0;   // index into the table's zero_runs
  std::uint64_t offset = 0;    // first covered ell is run.start + offset

  friend bool operator==(const BlockPlacement&, const BlockPlacement&) = default;
};

struct ConjectureReport {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> surplus;      // largest first
  std::vector<std::uint64_t> run_lengths;  // in table order
  bool feasible = false;
  bool counts_balance = false;             // sum(surplus) == sum(run_lengths)
  std::optional<std::vector<BlockPlacement>> witness;

  friend bool operator==(const ConjectureReport&, const ConjectureReport&) = default;
};

/// Decides the tiling for one table. Placement is deterministic: largest
/// blocks first (ties by smaller ell), each into the leftmost run that still
/// admits a solution, laid out left to right inside the run.
[[nodiscard]] ConjectureReport check_conjecture(const DifferenceTable& table);

/// Reports for every odd n in [n_start, n_end] with n >= 3. Throws DomainError
/// when n_start > n_end.
[[nodiscard]] std::vector<ConjectureReport> scan_conjecture(std::uint64_t n_start,
                                                            std::uint64_t n_end);

}  // namespace floorsum
