#include <doctest.h>

#include "floorsum/conjecture.hpp"
#include "witness_validator.hpp"

using namespace floorsum;
using floorsum::testing::validate_witness;

namespace {

// Hand-made tables for packing cases that no real n is known to produce.
DifferenceTable table_from_values(std::vector<std::uint64_t> values) {
  DifferenceTable t;
  t.n = 2 * values.size() + 1;
  t.values = std::move(values);
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    if (t.values[i] >= 2) {
      t.surplus.push_back({i + 1, t.values[i] - 1});
    }
    if (t.values[i] == 0) {
      if (i > 0 && t.values[i - 1] == 0) {
        ++t.zero_runs.back().length;
      } else {
        t.zero_runs.push_back({i + 1, 1});
      }
    }
  }
  return t;
}

}  // namespace

TEST_CASE("n = 33 packing witness") {
  const ConjectureReport r = check_conjecture(difference_table(33));
  CHECK(r.n == 33);
  CHECK(r.surplus == std::vector<std::uint64_t>{2, 1, 1});
  CHECK(r.run_lengths == std::vector<std::uint64_t>{1, 1, 2});
  CHECK(r.counts_balance);
  REQUIRE(r.feasible);
  REQUIRE(r.witness);
  // d(1) = 3 fills ell = 10..11; the unit blocks from d(2), d(3) take ell = 6 and 8.
  const std::vector<BlockPlacement> expected = {
      {1, 2, 2, 0},
      {2, 1, 0, 0},
      {3, 1, 1, 0},
  };
  CHECK(*r.witness == expected);
  CHECK(validate_witness(difference_table(33).values, *r.witness).empty());
}

TEST_CASE("vacuous instances") {
  for (const std::uint64_t n : {3, 5, 7, 9, 11}) {
    const ConjectureReport r = check_conjecture(difference_table(n));
    CHECK(r.surplus.empty());
    CHECK(r.run_lengths.empty());
    CHECK(r.feasible);
    CHECK(r.counts_balance);
    REQUIRE(r.witness);
    CHECK(r.witness->empty());
  }
}

TEST_CASE("scan [3, 33] and [35, 101]") {
  const auto first = scan_conjecture(3, 33);
  CHECK(first.size() == 16);
  const auto second = scan_conjecture(35, 101);
  CHECK(second.size() == 34);
  for (const auto* reports : {&first, &second}) {
    for (const auto& r : *reports) {
      CAPTURE(r.n);
      REQUIRE(r.feasible);
      REQUIRE(r.counts_balance);
      REQUIRE(validate_witness(difference_table(r.n).values, *r.witness).empty());
    }
  }
}

TEST_CASE("scan edge ranges") {
  const auto single = scan_conjecture(3, 3);
  REQUIRE(single.size() == 1);
  CHECK(single.front().feasible);
  CHECK(scan_conjecture(1, 2).empty());
  CHECK(scan_conjecture(4, 6).size() == 1);
  CHECK_THROWS_AS((void)scan_conjecture(9, 7), DomainError);
}

TEST_CASE("deterministic reports") {
  for (std::uint64_t n = 101; n <= 601; n += 50) {
    const auto table = difference_table(n);
    CHECK(check_conjecture(table) == check_conjecture(table));
  }
}

TEST_CASE("balanced but infeasible instance") {
  // surplus {2}, zero runs of length 1 and 1
  const DifferenceTable t = table_from_values({3, 0, 1, 0});
  const ConjectureReport r = check_conjecture(t);
  CHECK(r.counts_balance);
  CHECK_FALSE(r.feasible);
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("unbalanced instance") {
  const DifferenceTable t = table_from_values({2, 2, 0, 0, 0});
  const ConjectureReport r = check_conjecture(t);
  CHECK_FALSE(r.counts_balance);
  CHECK_FALSE(r.feasible);
}

TEST_CASE("packing that needs to skip the leftmost run") {
  // surplus {3, 3, 2, 2}, runs [4, 6]: a 3 cannot go into the run of 4
  // because the leftover 1 is smaller than every remaining block.
  const DifferenceTable t = table_from_values({4, 4, 3, 3, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0});
  const ConjectureReport r = check_conjecture(t);
  REQUIRE(r.feasible);
  CHECK(validate_witness(t.values, *r.witness).empty());
  CHECK((*r.witness)[0].run_index == 1);
  CHECK((*r.witness)[1].run_index == 1);
  CHECK((*r.witness)[2].run_index == 0);
  CHECK((*r.witness)[3].run_index == 0);
}

TEST_CASE("packing with many mixed blocks") {
  // runs [5, 3, 7, 2], surplus {4, 3, 3, 2, 2, 1, 1, 1}
  const DifferenceTable t = table_from_values(
      {5, 4, 4, 3, 3, 2, 2, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0});
  const ConjectureReport r = check_conjecture(t);
  REQUIRE(r.counts_balance);
  REQUIRE(r.feasible);
  CHECK(validate_witness(t.values, *r.witness).empty());
}

TEST_CASE("validator catches broken witnesses") {
  const auto values = difference_table(33).values;
  std::vector<BlockPlacement> w = *check_conjecture(difference_table(33)).witness;
  CHECK(validate_witness(values, w).empty());

  auto overlap = w;
  overlap[2].run_index = 0;
  CHECK_FALSE(validate_witness(values, overlap).empty());

  auto missing = w;
  missing.pop_back();
  CHECK_FALSE(validate_witness(values, missing).empty());

  auto wrong_source = w;
  wrong_source[0].source_ell = 4;
  CHECK_FALSE(validate_witness(values, wrong_source).empty());

  auto overrun = w;
  overrun[1].offset = 1;
  CHECK_FALSE(validate_witness(values, overrun).empty());
}
