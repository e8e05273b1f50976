#include "floorsum/conjecture.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace floorsum {

namespace {

// Depth-first multiway subset-sum: assigns blocks (largest first) to runs,
// remembering capacity profiles already shown to be dead ends.
class RunPacker {
 public:
  RunPacker(std::vector<SurplusBlock> blocks, std::vector<std::uint64_t> capacities)
      : blocks_(std::move(blocks)), capacities_(std::move(capacities)), assignment_(blocks_.size()) {}

  bool solve() { return place(0); }

  [[nodiscard]] const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }

 private:
  bool place(std::size_t index) {
    if (index == blocks_.size()) {
      return std::all_of(capacities_.begin(), capacities_.end(), [](auto c) { return c == 0; });
    }
    const std::uint64_t length = blocks_[index].length;
    if (length == 1) {
      // Only unit blocks remain and the totals balance, so any filling works.
      return fill_with_units(index);
    }

    auto key = state_key(index);
    if (dead_states_.contains(key)) {
      return false;
    }

    const std::uint64_t smallest = blocks_.back().length;
    std::vector<std::uint64_t> tried;
    for (std::size_t run = 0; run < capacities_.size(); ++run) {
      const std::uint64_t cap = capacities_[run];
      if (cap < length) {
        continue;
      }
      // Runs with equal remaining capacity are interchangeable for the rest
      // of the search.
      if (std::find(tried.begin(), tried.end(), cap) != tried.end()) {
        continue;
      }
      tried.push_back(cap);
      const std::uint64_t left = cap - length;
      if (left != 0 && left < smallest) {
        continue;
      }
      capacities_[run] = left;
      assignment_[index] = run;
      if (place(index + 1)) {
        return true;
      }
      capacities_[run] = cap;
    }
    dead_states_.insert(std::move(key));
    return false;
  }

  bool fill_with_units(std::size_t index) {
    std::size_t run = 0;
    for (; index < blocks_.size(); ++index) {
      while (run < capacities_.size() && capacities_[run] == 0) {
        ++run;
      }
      if (run == capacities_.size()) {
        return false;
      }
      --capacities_[run];
      assignment_[index] = run;
    }
    return std::all_of(capacities_.begin(), capacities_.end(), [](auto c) { return c == 0; });
  }

  [[nodiscard]] std::vector<std::uint64_t> state_key(std::size_t index) const {
    std::vector<std::uint64_t> key(capacities_);
    std::sort(key.begin(), key.end());
    key.push_back(index);
    return key;
  }

  std::vector<SurplusBlock> blocks_;
  std::vector<std::uint64_t> capacities_;
  std::vector<std::size_t> assignment_;
  std::set<std::vector<std::uint64_t>> dead_states_;
};

}  // namespace

ConjectureReport check_conjecture(const DifferenceTable& table) {
  ConjectureReport report;
  report.n = table.n;
  report.surplus = table.surplus_multiset();
  report.run_lengths = table.run_lengths();
  report.counts_balance = table.surplus_total() == table.zero_count();
  if (!report.counts_balance) {
    return report;
  }

  std::vector<SurplusBlock> blocks = table.surplus;
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const SurplusBlock& a, const SurplusBlock& b) { return a.length > b.length; });

  RunPacker packer(blocks, report.run_lengths);
  if (!packer.solve()) {
    return report;
  }

  report.feasible = true;
  std::vector<std::uint64_t> fill(report.run_lengths.size(), 0);
  std::vector<BlockPlacement> witness;
  witness.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::size_t run = packer.assignment()[i];
    witness.push_back({blocks[i].ell, blocks[i].length, run, fill[run]});
    fill[run] += blocks[i].length;
  }
  report.witness = std::move(witness);
  return report;
}

std::vector<ConjectureReport> scan_conjecture(std::uint64_t n_start, std::uint64_t n_end) {
  if (n_start > n_end) {
    throw DomainError("scan_conjecture: empty range");
  }
  std::vector<ConjectureReport> reports;
  std::uint64_t n = std::max<std::uint64_t>(n_start, 3);
  if (n % 2 == 0) {
    ++n;
  }
  while (n <= n_end) {
    reports.push_back(check_conjecture(difference_table(n)));
    if (n_end - n < 2) {
      break;
    }
    n += 2;
  }
  return reports;
}

}  // namespace floorsum
