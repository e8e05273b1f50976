#pragma once

// Real-argument zeta, the constant C in
//   sum_{j=1}^{n} (-1)^{j+1} sqrt(jn) = n/2 + C sqrt(n) + 1/8 + O(1/n),
// and the numerical checks around that expansion. Double precision throughout.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "floorsum/compensated.hpp"
#include "floorsum/natural.hpp"

namespace floorsum {

/// Thrown when zeta is asked for its value at s = 1.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Exact Bernoulli number B_{2k} as num / den.
struct BernoulliRational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

inline constexpr int kMaxBernoulliCount = 30;
inline constexpr int kExactBernoulliCount = 12;

/// B_2, B_4, ..., B_{2 count} as correctly rounded doubles. count in [1, 30];
/// throws std::out_of_range otherwise.
[[nodiscard]] std::vector<double> bernoulli_numbers(int count);

/// Exact B_{2k} for 1 <= k <= 12; throws std::out_of_range otherwise.
[[nodiscard]] BernoulliRational bernoulli_rational(int k);

/// Euler-Maclaurin truncation for zeta: direct sum over m < cutoff_m, the
/// integral and half-term at cutoff_m, then correction_j Bernoulli terms.
struct ZetaConfig {
  int cutoff_m = 32;
  int correction_j = 12;
  double target_tol = 1e-13;

  /// Throws std::invalid_argument when cutoff_m < 10, correction_j is not in
  /// [1, 30], or target_tol is not positive.
  void validate() const;

  /// Same tolerance with twice the cutoff and twice the correction terms
  /// (the latter capped at 30).
  [[nodiscard]] ZetaConfig doubled() const noexcept;
};

/// Lowest argument for which the continuation is supported.
inline constexpr double kZetaMinArgument = -0.5;

/// zeta(s) for real s >= -1/2, s != 1. Throws PoleError at s = 1 and
/// std::out_of_range below -1/2.
[[nodiscard]] double zeta_real(double s, const ZetaConfig& cfg = {});

/// sqrt(1 - x) from its binomial series sum_k C(2k,k) x^k / ((1 - 2k) 4^k).
/// Stops once a geometric bound on the remaining tail drops below tol.
/// Throws DomainError when |x| >= 1.
[[nodiscard]] double sqrt_binomial_series(double x, double tol = 1e-16);

struct ConstantEstimate {
  double value = 0.0;
  int terms_used = 0;
  double error_bound = 0.0;  // bound on the truncated tail
};

/// C = 1 + sqrt(2) sum_{k>=1} (-1)^{k+1} C(2k,k) zeta(k - 1/2) / ((2k-1) 8^k).
/// Terms shrink by at least half from k = 2 on, so the series is cut at the
/// first k >= 2 with |term| < tol/2 and that |term| is reported as the tail
/// bound. Throws std::invalid_argument when tol < 1e-13.
[[nodiscard]] ConstantEstimate constant_c(double tol, const ZetaConfig& cfg = {});

/// C summed until the omitted tail is far below double resolution. This is
/// the value to subtract when residuals of size ~1e-12 times sqrt(n) matter.
[[nodiscard]] ConstantEstimate constant_c_converged(const ZetaConfig& cfg = {});

/// sum_{j=1}^{n} (-1)^{j+1} sqrt(jn), evaluated as
/// sqrt(n) * (1 + sum_{m=1}^{(n-1)/2} (sqrt(2m+1) - sqrt(2m))) with every
/// pair difference rewritten as 1 / (sqrt(2m+1) + sqrt(2m)). `chunks` splits
/// the pair range into independently compensated partial sums. n must be odd.
[[nodiscard]] double alt_sqrt_sum(std::uint64_t n, unsigned chunks = 1);

/// Same sum in double-double.
[[nodiscard]] DoubleDouble alt_sqrt_sum_wide(std::uint64_t n, unsigned chunks = 1);

struct ResidualRecord {
  std::uint64_t n = 0;
  double s_float = 0.0;    // alt_sqrt_sum(n)
  double predicted = 0.0;  // n/2 + C sqrt(n) + 1/8
  double residual = 0.0;   // s_float - predicted, formed in double-double
  double scaled = 0.0;     // n * residual

  friend bool operator==(const ResidualRecord&, const ResidualRecord&) = default;
};

/// Residuals of the expansion at each grid point. The grid must be non-empty
/// with odd, strictly increasing entries; throws DomainError otherwise.
[[nodiscard]] std::vector<ResidualRecord> residual_analysis(std::span<const std::uint64_t> grid,
                                                            double c_value);

struct PartialZetaRow {
  std::uint64_t n_terms = 0;
  double defect = 0.0;
  double scaled_defect = 0.0;

  friend bool operator==(const PartialZetaRow&, const PartialZetaRow&) = default;
};

/// defect(N) = sum_{m<=N} m^-s - [zeta(s) + N^(1-s)/(1-s) + 1/(2 N^s)] and
/// N^(s+1) * defect(N). Requires s > 0; throws PoleError at s = 1.
[[nodiscard]] std::vector<PartialZetaRow> partial_zeta_check(
    double s, std::span<const std::uint64_t> n_list, const ZetaConfig& cfg = {});

}  // namespace floorsum
