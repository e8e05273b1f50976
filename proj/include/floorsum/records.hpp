#pragma once

// CSV and newline-delimited JSON encodings of every record the CLI emits,
// with parsers for the CSV side.
//
//   verify-alt        n,lhs,rhs,ok
//   verify-polya      p,lhs,rhs,ok
//   verify-liouville  k,lhs,rhs,ok
//   table             n,ell,d
//   conjecture        n,feasible,surplus,runs   (lists joined with ';')
//   constant          value,terms,error_bound
//   residuals         n,sum,residual,scaled
//   zeta-check        s,N,defect,scaled_defect
//
// Booleans are written as 1/0 in CSV and true/false in JSON. Doubles use the
// shortest representation that reads back to the same value.

#include <cstdint>
#include <string>
#include <string_view>

#include "floorsum/arithmetic.hpp"
#include "floorsum/asymptotics.hpp"
#include "floorsum/conjecture.hpp"
#include "floorsum/exact_kernel.hpp"

namespace floorsum {

struct PolyaRecord {
  std::uint64_t p = 0;
  Natural lhs = 0;
  Natural rhs = 0;  // (p^2 - 1) / 12
  bool holds = false;

  friend bool operator==(const PolyaRecord&, const PolyaRecord&) = default;
};

struct TableRow {
  std::uint64_t n = 0;
  std::size_t ell = 0;
  std::uint64_t d = 0;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct ZetaCheckRow {
  double s = 0.0;
  PartialZetaRow row;

  friend bool operator==(const ZetaCheckRow&, const ZetaCheckRow&) = default;
};

/// Thrown by the CSV parsers on malformed lines.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

[[nodiscard]] std::string format_double(double value);

[[nodiscard]] std::string to_csv(const AltSumRecord& r);
[[nodiscard]] std::string to_csv(const PolyaRecord& r);
[[nodiscard]] std::string to_csv(const LiouvilleRow& r);
[[nodiscard]] std::string to_csv(const TableRow& r);
[[nodiscard]] std::string to_csv(const ConjectureReport& r);
[[nodiscard]] std::string to_csv(const ConstantEstimate& r);
[[nodiscard]] std::string to_csv(const ResidualRecord& r);
[[nodiscard]] std::string to_csv(const ZetaCheckRow& r);

[[nodiscard]] std::string to_json(const AltSumRecord& r);
[[nodiscard]] std::string to_json(const PolyaRecord& r);
[[nodiscard]] std::string to_json(const LiouvilleRow& r);
[[nodiscard]] std::string to_json(const TableRow& r);
[[nodiscard]] std::string to_json(const ConjectureReport& r);
[[nodiscard]] std::string to_json(const ConstantEstimate& r);
[[nodiscard]] std::string to_json(const ResidualRecord& r);
[[nodiscard]] std::string to_json(const ZetaCheckRow& r);

[[nodiscard]] AltSumRecord parse_alt_sum_csv(std::string_view line);
[[nodiscard]] PolyaRecord parse_polya_csv(std::string_view line);
[[nodiscard]] LiouvilleRow parse_liouville_csv(std::string_view line);
[[nodiscard]] TableRow parse_table_csv(std::string_view line);
/// The witness is not part of the CSV row; it comes back empty. counts_balance
/// is recomputed from the two lists.
[[nodiscard]] ConjectureReport parse_conjecture_csv(std::string_view line);
[[nodiscard]] ConstantEstimate parse_constant_csv(std::string_view line);
/// `predicted` is not emitted; it is recovered as sum - residual.
[[nodiscard]] ResidualRecord parse_residual_csv(std::string_view line);
[[nodiscard]] ZetaCheckRow parse_zeta_check_csv(std::string_view line);

}  // namespace floorsum
