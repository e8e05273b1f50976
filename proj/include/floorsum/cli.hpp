#pragma once

// Command-line driver. Data goes to `out`, diagnostics to `err`.
//
// Exit codes: 0 when every check passes, 1 when a check fails (a
// counterexample), 2 on usage or capacity errors.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "floorsum/arithmetic.hpp"
#include "floorsum/conjecture.hpp"
#include "floorsum/exact_kernel.hpp"

namespace floorsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Largest n the range drivers accept; alternating sums stay within int64.
inline constexpr std::uint64_t kMaxRangeEnd = std::uint64_t{1} << 62;

enum class Subcommand {
  kVerifyAlt,
  kVerifyPolya,
  kVerifyLiouville,
  kTable,
  kConjecture,
  kConstant,
  kResiduals,
  kZetaCheck,
};

enum class OutputFormat { kCsv, kJson };

struct RunConfig {
  Subcommand subcommand = Subcommand::kVerifyAlt;
  std::uint64_t start = 1;
  std::uint64_t end = 1;
  std::uint64_t n = 33;
  std::uint64_t k_max = 1000;
  double tol = 1e-12;
  std::vector<std::uint64_t> grid = {1'001, 10'001, 100'001};
  std::optional<double> c_value;  // residuals: computed when absent
  std::vector<double> s_values = {0.5, 1.5, 2.5};
  std::vector<std::uint64_t> n_list = {100, 1'000, 10'000};
  double bound = 1.0;             // zeta-check: limit on |scaled_defect|
  std::uint64_t sieve_budget = kDefaultSieveBudget;
  unsigned jobs = 1;
  OutputFormat format = OutputFormat::kCsv;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

/// The checks run() delegates to. Tests swap in failing stubs to exercise
/// the exit-code contract.
struct Checkers {
  std::function<AltSumRecord(std::uint64_t)> alt_sum = verify_alt_sum;
  std::function<Natural(Natural)> polya = polya_sum;
  std::function<bool(std::uint64_t)> prime = is_prime;
  std::function<ConjectureReport(const DifferenceTable&)> conjecture = check_conjecture;
  std::function<std::vector<LiouvilleRow>(std::uint64_t, std::uint64_t)> liouville =
      [](std::uint64_t k_max, std::uint64_t budget) { return liouville_inversion_check(k_max, budget); };
};

[[nodiscard]] int run(const RunConfig& cfg, std::ostream& out, std::ostream& err,
                      const Checkers& checkers = {});

/// Parses arguments (program name excluded) and runs. FLOORSUM_JOBS supplies
/// the default for --jobs.
[[nodiscard]] int main_entry(const std::vector<std::string>& args, std::ostream& out,
                             std::ostream& err, const Checkers& checkers = {});

}  // namespace floorsum::cli
