#pragma once

// Independent check of a conjecture witness against the raw table values.
// Rebuilds zero runs and surplus from `values` itself and marks every covered
// cell, so it shares nothing with the packing search.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "floorsum/conjecture.hpp"

namespace floorsum::testing {

/// Empty string when the witness is valid, otherwise the first problem found.
inline std::string validate_witness(const std::vector<std::uint64_t>& values,
                                    const std::vector<BlockPlacement>& witness) {
  struct Run {
    std::size_t first;  // 0-based
    std::size_t length;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0 && (i == 0 || values[i - 1] != 0)) {
      std::size_t j = i;
      while (j < values.size() && values[j] == 0) {
        ++j;
      }
      runs.push_back({i, j - i});
    }
  }

  std::vector<std::uint64_t> expected_blocks;
  std::vector<std::size_t> sources;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= 2) {
      expected_blocks.push_back(values[i] - 1);
      sources.push_back(i + 1);
    }
  }

  std::vector<int> covered(values.size(), 0);
  std::vector<std::size_t> used_sources;
  std::vector<std::uint64_t> placed_blocks;
  for (const auto& p : witness) {
    if (p.length == 0) {
      return "empty block";
    }
    if (p.source_ell == 0 || p.source_ell > values.size() || values[p.source_ell - 1] != p.length + 1) {
      return "block from ell " + std::to_string(p.source_ell) + " does not match its table entry";
    }
    if (p.run_index >= runs.size()) {
      return "run index out of range";
    }
    const Run& run = runs[p.run_index];
    if (p.offset + p.length > run.length) {
      return "block overruns its zero run";
    }
    for (std::size_t c = run.first + p.offset; c < run.first + p.offset + p.length; ++c) {
      if (values[c] != 0) {
        return "block covers a non-zero entry";
      }
      if (++covered[c] > 1) {
        return "blocks overlap at ell " + std::to_string(c + 1);
      }
    }
    used_sources.push_back(p.source_ell);
    placed_blocks.push_back(p.length);
  }

  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0 && covered[i] != 1) {
      return "zero at ell " + std::to_string(i + 1) + " is not covered";
    }
  }

  std::sort(used_sources.begin(), used_sources.end());
  if (std::adjacent_find(used_sources.begin(), used_sources.end()) != used_sources.end()) {
    return "a surplus entry is used twice";
  }
  if (used_sources != sources) {
    return "witness does not use every surplus entry exactly once";
  }
  std::sort(placed_blocks.begin(), placed_blocks.end());
  std::sort(expected_blocks.begin(), expected_blocks.end());
  if (placed_blocks != expected_blocks) {
    return "block lengths differ from the surplus multiset";
  }
  return {};
}

}  // namespace floorsum::testing
