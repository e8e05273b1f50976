#pragma once

// Compensated accumulation and a minimal double-double type for the places
// where a residual is many orders of magnitude below the sum it comes from.

#include <cmath>

namespace floorsum {

/// Unevaluated sum hi + lo with |lo| <= ulp(hi) / 2.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  [[nodiscard]] constexpr double value() const noexcept { return hi + lo; }
};

/// Error-free transformation: a + b == s + e exactly.
[[nodiscard]] inline DoubleDouble two_sum(double a, double b) noexcept {
  const double s = a + b;
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

/// Error-free product via fused multiply-add: a * b == p + e exactly.
[[nodiscard]] inline DoubleDouble two_prod(double a, double b) noexcept {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

[[nodiscard]] inline DoubleDouble operator+(DoubleDouble a, DoubleDouble b) noexcept {
  DoubleDouble s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return two_sum(s.hi, s.lo);
}

[[nodiscard]] inline DoubleDouble operator+(DoubleDouble a, double b) noexcept {
  return a + DoubleDouble{b, 0.0};
}

[[nodiscard]] inline DoubleDouble operator-(DoubleDouble a) noexcept { return {-a.hi, -a.lo}; }

[[nodiscard]] inline DoubleDouble operator-(DoubleDouble a, DoubleDouble b) noexcept {
  return a + (-b);
}

[[nodiscard]] inline DoubleDouble operator-(DoubleDouble a, double b) noexcept {
  return a + DoubleDouble{-b, 0.0};
}

[[nodiscard]] inline DoubleDouble operator*(DoubleDouble a, DoubleDouble b) noexcept {
  DoubleDouble p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return two_sum(p.hi, p.lo);
}

/// sqrt(x) to roughly twice double precision (one Newton correction).
[[nodiscard]] inline DoubleDouble dd_sqrt(double x) noexcept {
  const double root = std::sqrt(x);
  if (root == 0.0) {
    return {};
  }
  const double correction = -std::fma(root, root, -x) / (2.0 * root);
  return two_sum(root, correction);
}

/// Neumaier's variant of Kahan summation: also exact when the incoming term
/// is larger than the running sum.
class CompensatedSum {
 public:
  void add(double term) noexcept {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double term) noexcept {
    add(term);
    return *this;
  }

  /// Merges another partial sum, keeping both compensation terms.
  void merge(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.compensation_);
  }

  [[nodiscard]] double value() const noexcept { return sum_ + compensation_; }
  [[nodiscard]] DoubleDouble wide() const noexcept { return two_sum(sum_, compensation_); }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace floorsum
