#include "floorsum/records.hpp"

#include <array>
#include <charconv>
#include <limits>
#include <vector>

#include <json.hpp>

namespace floorsum {

namespace {

using nlohmann::json;

json natural_json(Natural value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(value);
  }
  return to_string(value);
}

json wide_json(Wide value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return to_string(value);
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) {
      out.push_back(';');
    }
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t begin = 0;
  for (;;) {
    const std::size_t end = line.find(sep, begin);
    if (end == std::string_view::npos) {
      fields.push_back(line.substr(begin));
      return fields;
    }
    fields.push_back(line.substr(begin, end - begin));
    begin = end + 1;
  }
}

std::vector<std::string_view> fields_of(std::string_view line, std::size_t expected) {
  if (!line.empty() && line.back() == '\n') {
    line.remove_suffix(1);
  }
  auto fields = split(line, ',');
  if (fields.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) + " fields in CSV row: " +
                     std::string(line));
  }
  return fields;
}

template <typename T>
T parse_number(std::string_view text) {
  T value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("malformed number: " + std::string(text));
  }
  return value;
}

Natural parse_natural_field(std::string_view text) {
  try {
    return parse_natural(text);
  } catch (const std::exception&) {
    throw ParseError("malformed integer: " + std::string(text));
  }
}

Wide parse_wide_field(std::string_view text) {
  if (!text.empty() && text.front() == '-') {
    return -static_cast<Wide>(parse_natural_field(text.substr(1)));
  }
  return static_cast<Wide>(parse_natural_field(text));
}

bool parse_flag(std::string_view text) {
  if (text == "1") {
    return true;
  }
  if (text == "0") {
    return false;
  }
  throw ParseError("malformed flag: " + std::string(text));
}

std::vector<std::uint64_t> parse_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  if (text.empty()) {
    return out;
  }
  for (const auto item : split(text, ';')) {
    out.push_back(parse_number<std::uint64_t>(item));
  }
  return out;
}

const char* flag(bool value) { return value ? "1" : "0"; }

}  // namespace

std::string format_double(double value) {
  std::array<char, 64> buffer{};
  const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return {buffer.data(), ptr};
}

std::string to_csv(const AltSumRecord& r) {
  return std::to_string(r.n) + "," + to_string(r.lhs) + "," + to_string(r.rhs) + "," + flag(r.holds);
}

std::string to_csv(const PolyaRecord& r) {
  return std::to_string(r.p) + "," + to_string(r.lhs) + "," + to_string(r.rhs) + "," + flag(r.holds);
}

std::string to_csv(const LiouvilleRow& r) {
  return std::to_string(r.k) + "," + std::to_string(r.lhs) + "," + std::to_string(r.rhs) + "," +
         flag(r.holds);
}

std::string to_csv(const TableRow& r) {
  return std::to_string(r.n) + "," + std::to_string(r.ell) + "," + std::to_string(r.d);
}

std::string to_csv(const ConjectureReport& r) {
  return std::to_string(r.n) + "," + flag(r.feasible) + "," + join(r.surplus) + "," +
         join(r.run_lengths);
}

std::string to_csv(const ConstantEstimate& r) {
  return format_double(r.value) + "," + std::to_string(r.terms_used) + "," +
         format_double(r.error_bound);
}

std::string to_csv(const ResidualRecord& r) {
  return std::to_string(r.n) + "," + format_double(r.s_float) + "," + format_double(r.residual) +
         "," + format_double(r.scaled);
}

std::string to_csv(const ZetaCheckRow& r) {
  return format_double(r.s) + "," + std::to_string(r.row.n_terms) + "," +
         format_double(r.row.defect) + "," + format_double(r.row.scaled_defect);
}

std::string to_json(const AltSumRecord& r) {
  return json{{"n", r.n}, {"lhs", wide_json(r.lhs)}, {"rhs", natural_json(r.rhs)}, {"ok", r.holds}}
      .dump();
}

std::string to_json(const PolyaRecord& r) {
  return json{{"p", r.p}, {"lhs", natural_json(r.lhs)}, {"rhs", natural_json(r.rhs)}, {"ok", r.holds}}
      .dump();
}

std::string to_json(const LiouvilleRow& r) {
  return json{{"k", r.k}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"ok", r.holds}}.dump();
}

std::string to_json(const TableRow& r) {
  return json{{"n", r.n}, {"ell", r.ell}, {"d", r.d}}.dump();
}

std::string to_json(const ConjectureReport& r) {
  return json{{"n", r.n}, {"feasible", r.feasible}, {"surplus", r.surplus}, {"runs", r.run_lengths}}
      .dump();
}

std::string to_json(const ConstantEstimate& r) {
  return json{{"value", r.value}, {"terms", r.terms_used}, {"error_bound", r.error_bound}}.dump();
}

std::string to_json(const ResidualRecord& r) {
  return json{{"n", r.n}, {"sum", r.s_float}, {"residual", r.residual}, {"scaled", r.scaled}}.dump();
}

std::string to_json(const ZetaCheckRow& r) {
  return json{{"s", r.s},
              {"N", r.row.n_terms},
              {"defect", r.row.defect},
              {"scaled_defect", r.row.scaled_defect}}
      .dump();
}

AltSumRecord parse_alt_sum_csv(std::string_view line) {
  const auto f = fields_of(line, 4);
  return {parse_number<std::uint64_t>(f[0]), parse_wide_field(f[1]), parse_natural_field(f[2]),
          parse_flag(f[3])};
}

PolyaRecord parse_polya_csv(std::string_view line) {
  const auto f = fields_of(line, 4);
  return {parse_number<std::uint64_t>(f[0]), parse_natural_field(f[1]), parse_natural_field(f[2]),
          parse_flag(f[3])};
}

LiouvilleRow parse_liouville_csv(std::string_view line) {
  const auto f = fields_of(line, 4);
  return {parse_number<std::uint64_t>(f[0]), parse_number<std::uint64_t>(f[1]),
          parse_number<std::int64_t>(f[2]), parse_flag(f[3])};
}

TableRow parse_table_csv(std::string_view line) {
  const auto f = fields_of(line, 3);
  return {parse_number<std::uint64_t>(f[0]), parse_number<std::size_t>(f[1]),
          parse_number<std::uint64_t>(f[2])};
}

ConjectureReport parse_conjecture_csv(std::string_view line) {
  const auto f = fields_of(line, 4);
  ConjectureReport r;
  r.n = parse_number<std::uint64_t>(f[0]);
  r.feasible = parse_flag(f[1]);
  r.surplus = parse_list(f[2]);
  r.run_lengths = parse_list(f[3]);
  std::uint64_t surplus = 0;
  std::uint64_t zeros = 0;
  for (const auto v : r.surplus) {
    surplus += v;
  }
  for (const auto v : r.run_lengths) {
    zeros += v;
  }
  r.counts_balance = surplus == zeros;
  return r;
}

ConstantEstimate parse_constant_csv(std::string_view line) {
  const auto f = fields_of(line, 3);
  return {parse_number<double>(f[0]), parse_number<int>(f[1]), parse_number<double>(f[2])};
}

ResidualRecord parse_residual_csv(std::string_view line) {
  const auto f = fields_of(line, 4);
  ResidualRecord r;
  r.n = parse_number<std::uint64_t>(f[0]);
  r.s_float = parse_number<double>(f[1]);
  r.residual = parse_number<double>(f[2]);
  r.scaled = parse_number<double>(f[3]);
  r.predicted = r.s_float - r.residual;
  return r;
}

ZetaCheckRow parse_zeta_check_csv(std::string_view line) {
  const auto f = fields_of(line, 4);
  ZetaCheckRow r;
  r.s = parse_number<double>(f[0]);
  r.row.n_terms = parse_number<std::uint64_t>(f[1]);
  r.row.defect = parse_number<double>(f[2]);
  r.row.scaled_defect = parse_number<double>(f[3]);
  return r;
}

}  // namespace floorsum
