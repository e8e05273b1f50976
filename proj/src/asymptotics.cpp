#include "floorsum/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace floorsum {

void ZetaConfig::validate() const {
  if (cutoff_m < 10) {
    throw std::invalid_argument("ZetaConfig: cutoff_m must be at least 10");
  }
  if (correction_j < 1 || correction_j > kMaxBernoulliCount) {
    throw std::invalid_argument("ZetaConfig: correction_j must be in [1, 30]");
  }
  if (!(target_tol > 0.0)) {
    throw std::invalid_argument("ZetaConfig: target_tol must be positive");
  }
}

ZetaConfig ZetaConfig::doubled() const noexcept {
  ZetaConfig out = *this;
  out.cutoff_m = 2 * cutoff_m;
  out.correction_j = std::min(2 * correction_j, kMaxBernoulliCount);
  return out;
}

namespace {

struct ZetaTail {
  double value = 0.0;
  double next_term = 0.0;  // magnitude of the first omitted correction
};

// sum_{m >= M} m^-s by Euler-Maclaurin at M.
ZetaTail euler_maclaurin_tail(double s, double M, int corrections) {
  const std::vector<double> bernoulli = bernoulli_numbers(std::min(corrections + 1, kMaxBernoulliCount));
  const double m_pow = std::pow(M, -s);
  CompensatedSum sum;
  sum += M * m_pow / (s - 1.0);
  sum += 0.5 * m_pow;

  // factor_j = s (s+1) ... (s+2j-2) / (2j)! * M^(-s-2j+1)
  double factor = s * m_pow / (2.0 * M);
  double next = 0.0;
  for (int j = 1; j <= corrections + 1 && j <= kMaxBernoulliCount; ++j) {
    const double term = bernoulli[static_cast<std::size_t>(j - 1)] * factor;
    if (j > corrections) {
      next = std::abs(term);
      break;
    }
    sum += term;
    const double a = s + 2.0 * j - 1.0;
    const double b = s + 2.0 * j;
    factor *= a * b / ((2.0 * j + 1.0) * (2.0 * j + 2.0) * M * M);
  }
  return {sum.value(), next};
}

}  // namespace

double zeta_real(double s, const ZetaConfig& cfg) {
  cfg.validate();
  if (s == 1.0) {
    throw PoleError("zeta_real: pole at s = 1");
  }
  if (!(s >= kZetaMinArgument)) {
    throw std::out_of_range("zeta_real: s = " + std::to_string(s) + " is below -1/2");
  }

  int cutoff = cfg.cutoff_m;
  for (;;) {
    const ZetaTail tail = euler_maclaurin_tail(s, cutoff, cfg.correction_j);
    // Widen the cutoff until the first omitted correction is below the goal;
    // 2^16 terms is far past anything the supported range needs.
    if (tail.next_term <= cfg.target_tol || cutoff >= (1 << 16)) {
      CompensatedSum sum;
      for (int m = cutoff - 1; m >= 1; --m) {
        sum += std::pow(static_cast<double>(m), -s);
      }
      sum += tail.value;
      return sum.value();
    }
    cutoff *= 2;
  }
}

double sqrt_binomial_series(double x, double tol) {
  if (!(std::abs(x) < 1.0)) {
    throw DomainError("sqrt_binomial_series: requires |x| < 1");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("sqrt_binomial_series: tol must be positive");
  }
  const double ratio_bound = std::abs(x) / (1.0 - std::abs(x));
  CompensatedSum sum;
  sum += 1.0;
  double central = 1.0;  // C(2k, k) / 4^k
  double power = 1.0;    // x^k
  for (int k = 1; k < 1'000'000; ++k) {
    central *= (2.0 * k - 1.0) / (2.0 * k);
    power *= x;
    const double term = central * power / (1.0 - 2.0 * k);
    sum += term;
    // |t_{k+1} / t_k| = |x| (2k-1) / (2k+2) < |x|
    if (std::abs(term) * ratio_bound < tol) {
      break;
    }
  }
  return sum.value();
}

namespace {

// Sums the series for C until the first k >= 2 whose term is below `stop`.
ConstantEstimate sum_constant_series(double stop, const ZetaConfig& cfg) {
  CompensatedSum series;
  double central = 1.0;  // C(2k, k) / 8^k
  ConstantEstimate estimate;
  for (int k = 1; k <= 400; ++k) {
    central *= (2.0 * k - 1.0) * (2.0 * k) / (static_cast<double>(k) * k * 8.0);
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    const double term =
        std::numbers::sqrt2 * sign * central * zeta_real(k - 0.5, cfg) / (2.0 * k - 1.0);
    series += term;
    estimate.terms_used = k;
    // zeta(k - 1/2) only starts decreasing at k = 2.
    if (k >= 2 && std::abs(term) < stop) {
      estimate.error_bound = std::abs(term);
      break;
    }
  }
  estimate.value = 1.0 + series.value();
  return estimate;
}

}  // namespace

ConstantEstimate constant_c(double tol, const ZetaConfig& cfg) {
  if (!(tol >= 1e-13)) {
    throw std::invalid_argument("constant_c: tol must be at least 1e-13");
  }
  cfg.validate();
  return sum_constant_series(tol / 2.0, cfg);
}

ConstantEstimate constant_c_converged(const ZetaConfig& cfg) {
  cfg.validate();
  return sum_constant_series(1e-20, cfg);
}

DoubleDouble alt_sqrt_sum_wide(std::uint64_t n, unsigned chunks) {
  if (n % 2 == 0) {
    throw DomainError("alt_sqrt_sum: n must be odd");
  }
  chunks = std::max(chunks, 1u);
  const std::uint64_t pairs = (n - 1) / 2;
  CompensatedSum total;
  for (unsigned c = 0; c < chunks; ++c) {
    const std::uint64_t first = pairs * c / chunks + 1;
    const std::uint64_t last = pairs * (c + 1) / chunks;
    CompensatedSum part;
    for (std::uint64_t m = first; m <= last; ++m) {
      const double even = std::sqrt(2.0 * static_cast<double>(m));
      const double odd = std::sqrt(2.0 * static_cast<double>(m) + 1.0);
      part += 1.0 / (odd + even);
    }
    total.merge(part);
  }
  return dd_sqrt(static_cast<double>(n)) * (total.wide() + 1.0);
}

double alt_sqrt_sum(std::uint64_t n, unsigned chunks) {
  return alt_sqrt_sum_wide(n, chunks).value();
}

std::vector<ResidualRecord> residual_analysis(std::span<const std::uint64_t> grid, double c_value) {
  if (grid.empty()) {
    throw DomainError("residual_analysis: empty grid");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] % 2 == 0 || (i > 0 && grid[i] <= grid[i - 1])) {
      throw DomainError("residual_analysis: grid must be odd and strictly increasing");
    }
  }

  std::vector<ResidualRecord> out;
  out.reserve(grid.size());
  for (const std::uint64_t n : grid) {
    const auto nd = static_cast<double>(n);
    const DoubleDouble sum = alt_sqrt_sum_wide(n);
    const DoubleDouble root = dd_sqrt(nd);
    const DoubleDouble predicted = root * DoubleDouble{c_value, 0.0} + 0.5 * nd + 0.125;
    ResidualRecord record;
    record.n = n;
    record.s_float = sum.value();
    record.predicted = predicted.value();
    record.residual = (sum - predicted).value();
    record.scaled = nd * record.residual;
    out.push_back(record);
  }
  return out;
}

std::vector<PartialZetaRow> partial_zeta_check(double s, std::span<const std::uint64_t> n_list,
                                               const ZetaConfig& cfg) {
  if (s == 1.0) {
    throw PoleError("partial_zeta_check: pole at s = 1");
  }
  if (!(s > 0.0)) {
    throw DomainError("partial_zeta_check: requires s > 0");
  }
  const double zeta = zeta_real(s, cfg);

  std::vector<PartialZetaRow> out;
  out.reserve(n_list.size());
  for (const std::uint64_t count : n_list) {
    if (count == 0) {
      throw DomainError("partial_zeta_check: N must be positive");
    }
    CompensatedSum partial;
    for (std::uint64_t m = count; m >= 1; --m) {
      partial += std::pow(static_cast<double>(m), -s);
    }
    const auto nd = static_cast<double>(count);
    const double n_pow = std::pow(nd, -s);
    const DoubleDouble defect =
        partial.wide() - zeta - nd * n_pow / (1.0 - s) - 0.5 * n_pow;
    PartialZetaRow row;
    row.n_terms = count;
    row.defect = defect.value();
    row.scaled_defect = row.defect * std::pow(nd, s + 1.0);
    out.push_back(row);
  }
  return out;
}

}  // namespace floorsum
