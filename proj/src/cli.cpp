#include "floorsum/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>

#include "floorsum/asymptotics.hpp"
#include "floorsum/parallel.hpp"
#include "floorsum/records.hpp"

namespace floorsum::cli {

void RunConfig::validate() const {
  if (jobs < 1) {
    throw std::invalid_argument("--jobs must be at least 1");
  }
  switch (subcommand) {
    case Subcommand::kVerifyAlt:
    case Subcommand::kVerifyPolya:
    case Subcommand::kConjecture:
      if (start > end) {
        throw std::invalid_argument("--start must not exceed --end");
      }
      if (end > kMaxRangeEnd) {
        throw std::invalid_argument("--end exceeds the supported range (2^62)");
      }
      break;
    case Subcommand::kVerifyLiouville:
      if (k_max < 1) {
        throw std::invalid_argument("--kmax must be at least 1");
      }
      break;
    case Subcommand::kTable:
      if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("--n must be odd and at least 3");
      }
      break;
    case Subcommand::kConstant:
      if (!(tol >= 1e-13)) {
        throw std::invalid_argument("--tol must be at least 1e-13");
      }
      break;
    case Subcommand::kResiduals:
      if (grid.empty()) {
        throw std::invalid_argument("--grid must not be empty");
      }
      break;
    case Subcommand::kZetaCheck:
      if (s_values.empty() || n_list.empty()) {
        throw std::invalid_argument("--s and --N must not be empty");
      }
      break;
  }
}

namespace {

class Emitter {
 public:
  Emitter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

  void header(const char* columns) {
    if (format_ == OutputFormat::kCsv) {
      out_ << columns << '\n';
    }
  }

  template <typename Record>
  void emit(const Record& record) {
    out_ << (format_ == OutputFormat::kCsv ? to_csv(record) : to_json(record)) << '\n';
  }

 private:
  std::ostream& out_;
  OutputFormat format_;
};

ParallelOptions parallel_options(const RunConfig& cfg, std::size_t block_size) {
  ParallelOptions options;
  options.jobs = cfg.jobs;
  options.block_size = block_size;
  return options;
}

std::uint64_t first_in_class(std::uint64_t start, std::uint64_t modulus, std::uint64_t residue) {
  const std::uint64_t r = start % modulus;
  return start + (residue + modulus - r) % modulus;
}

int run_verify_alt(const RunConfig& cfg, Emitter& emitter, const Checkers& checkers) {
  const std::uint64_t first = first_in_class(cfg.start, 2, 1);
  if (first > cfg.end) {
    throw std::invalid_argument("range contains no odd n");
  }
  const std::uint64_t count = (cfg.end - first) / 2 + 1;
  emitter.header("n,lhs,rhs,ok");
  bool all_hold = true;
  ordered_parallel_map(
      count, parallel_options(cfg, 64),
      [&](std::uint64_t i) { return checkers.alt_sum(first + 2 * i); },
      [&](std::uint64_t, const AltSumRecord& record) {
        all_hold = all_hold && record.holds;
        emitter.emit(record);
        return true;
      });
  return all_hold ? kExitOk : kExitCheckFailed;
}

int run_verify_polya(const RunConfig& cfg, Emitter& emitter, const Checkers& checkers) {
  const std::uint64_t first = first_in_class(cfg.start, 4, 1);
  emitter.header("p,lhs,rhs,ok");
  if (first > cfg.end) {
    return kExitOk;
  }
  const std::uint64_t count = (cfg.end - first) / 4 + 1;
  bool all_hold = true;
  ordered_parallel_map(
      count, parallel_options(cfg, 256),
      [&](std::uint64_t i) -> std::optional<PolyaRecord> {
        const std::uint64_t p = first + 4 * i;
        if (!checkers.prime(p)) {
          return std::nullopt;
        }
        PolyaRecord record;
        record.p = p;
        record.lhs = checkers.polya(p);
        const Natural numerator = Natural{p} * p - 1;
        record.rhs = numerator / 12;
        record.holds = numerator % 12 == 0 && record.lhs == record.rhs;
        return record;
      },
      [&](std::uint64_t, const std::optional<PolyaRecord>& record) {
        if (record) {
          all_hold = all_hold && record->holds;
          emitter.emit(*record);
        }
        return true;
      });
  return all_hold ? kExitOk : kExitCheckFailed;
}

int run_verify_liouville(const RunConfig& cfg, Emitter& emitter, const Checkers& checkers) {
  const auto rows = checkers.liouville(cfg.k_max, cfg.sieve_budget);
  emitter.header("k,lhs,rhs,ok");
  bool all_hold = true;
  for (const auto& row : rows) {
    all_hold = all_hold && row.holds;
    emitter.emit(row);
  }
  return all_hold ? kExitOk : kExitCheckFailed;
}

int run_table(const RunConfig& cfg, Emitter& emitter) {
  const DifferenceTable table = difference_table(cfg.n);
  emitter.header("n,ell,d");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    total += table.values[i];
    emitter.emit(TableRow{table.n, i + 1, table.values[i]});
  }
  return total == (cfg.n - 1) / 2 ? kExitOk : kExitCheckFailed;
}

void dump_table(const DifferenceTable& table, std::ostream& err) {
  err << "counterexample n=" << table.n << "\nell,d\n";
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    err << (i + 1) << ',' << table.values[i] << '\n';
  }
}

int run_conjecture(const RunConfig& cfg, Emitter& emitter, std::ostream& err,
                   const Checkers& checkers) {
  const std::uint64_t first = first_in_class(std::max<std::uint64_t>(cfg.start, 3), 2, 1);
  emitter.header("n,feasible,surplus,runs");
  if (first > cfg.end) {
    return kExitOk;
  }
  const std::uint64_t count = (cfg.end - first) / 2 + 1;
  bool all_feasible = true;
  ordered_parallel_map(
      count, parallel_options(cfg, 8),
      [&](std::uint64_t i) { return checkers.conjecture(difference_table(first + 2 * i)); },
      [&](std::uint64_t, const ConjectureReport& report) {
        emitter.emit(report);
        if (!report.feasible) {
          all_feasible = false;
          dump_table(difference_table(report.n), err);
          return false;
        }
        return true;
      });
  return all_feasible ? kExitOk : kExitCheckFailed;
}

int run_constant(const RunConfig& cfg, Emitter& emitter) {
  emitter.header("value,terms,error_bound");
  emitter.emit(constant_c(cfg.tol));
  return kExitOk;
}

int run_residuals(const RunConfig& cfg, Emitter& emitter) {
  const double c_value = cfg.c_value ? *cfg.c_value : constant_c_converged().value;
  for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
    if (cfg.grid[i] % 2 == 0 || (i > 0 && cfg.grid[i] <= cfg.grid[i - 1])) {
      throw DomainError("residuals: grid must be odd and strictly increasing");
    }
  }
  emitter.header("n,sum,residual,scaled");
  bool all_finite = true;
  ordered_parallel_map(
      cfg.grid.size(), parallel_options(cfg, 1),
      [&](std::uint64_t i) {
        return residual_analysis(std::span<const std::uint64_t>(&cfg.grid[i], 1), c_value).front();
      },
      [&](std::uint64_t, const ResidualRecord& record) {
        all_finite = all_finite && std::isfinite(record.residual) && std::isfinite(record.scaled);
        emitter.emit(record);
        return true;
      });
  return all_finite ? kExitOk : kExitCheckFailed;
}

int run_zeta_check(const RunConfig& cfg, Emitter& emitter) {
  emitter.header("s,N,defect,scaled_defect");
  bool bounded = true;
  for (const double s : cfg.s_values) {
    for (const auto& row : partial_zeta_check(s, cfg.n_list)) {
      bounded = bounded && std::isfinite(row.scaled_defect) && std::abs(row.scaled_defect) <= cfg.bound;
      emitter.emit(ZetaCheckRow{s, row});
    }
  }
  return bounded ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err, const Checkers& checkers) {
  try {
    cfg.validate();
    Emitter emitter(out, cfg.format);
    switch (cfg.subcommand) {
      case Subcommand::kVerifyAlt:
        return run_verify_alt(cfg, emitter, checkers);
      case Subcommand::kVerifyPolya:
        return run_verify_polya(cfg, emitter, checkers);
      case Subcommand::kVerifyLiouville:
        return run_verify_liouville(cfg, emitter, checkers);
      case Subcommand::kTable:
        return run_table(cfg, emitter);
      case Subcommand::kConjecture:
        return run_conjecture(cfg, emitter, err, checkers);
      case Subcommand::kConstant:
        return run_constant(cfg, emitter);
      case Subcommand::kResiduals:
        return run_residuals(cfg, emitter);
      case Subcommand::kZetaCheck:
        return run_zeta_check(cfg, emitter);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const Checkers& checkers) {
  CLI::App app{"Exact and high-precision checks for alternating floor-sqrt sums"};
  app.name("floorsum");
  app.require_subcommand(1);

  RunConfig cfg;
  unsigned jobs = 1;
  std::string format = "csv";
  auto* jobs_option = app.add_option("--jobs,-j", jobs, "worker threads (default: $FLOORSUM_JOBS or 1)")
                          ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));

  auto* verify_alt = app.add_subcommand("verify-alt", "check the alternating floor-sqrt identity for odd n");
  verify_alt->add_option("--start", cfg.start)->required();
  verify_alt->add_option("--end", cfg.end)->required();

  auto* verify_polya = app.add_subcommand("verify-polya", "check the prime p = 1 (mod 4) floor-sqrt identity");
  verify_polya->add_option("--start", cfg.start)->required();
  verify_polya->add_option("--end", cfg.end)->required();

  auto* verify_liouville = app.add_subcommand("verify-liouville", "check floor(sqrt k) against the Liouville divisor sum");
  verify_liouville->add_option("--kmax", cfg.k_max)->required();
  verify_liouville->add_option("--sieve-budget", cfg.sieve_budget);

  auto* table = app.add_subcommand("table", "print the difference table d_n(ell)");
  table->add_option("--n", cfg.n)->required();

  auto* conjecture = app.add_subcommand("conjecture", "match surplus blocks against zero runs for odd n");
  conjecture->add_option("--start", cfg.start)->required();
  conjecture->add_option("--end", cfg.end)->required();

  auto* constant = app.add_subcommand("constant", "evaluate the constant C");
  constant->add_option("--tol", cfg.tol);

  auto* residuals = app.add_subcommand("residuals", "residuals of the sqrt(jn) expansion on a grid");
  residuals->add_option("--grid", cfg.grid)->delimiter(',');
  residuals->add_option("--c", cfg.c_value, "override the value of C");

  auto* zeta_check = app.add_subcommand("zeta-check", "partial zeta sums against their asymptotic expansion");
  zeta_check->add_option("--s", cfg.s_values)->delimiter(',');
  zeta_check->add_option("--N", cfg.n_list)->delimiter(',');
  zeta_check->add_option("--bound", cfg.bound);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  // Read by hand: CLI11 does not validate values taken from the environment.
  if (jobs_option->count() == 0) {
    if (const char* env = std::getenv("FLOORSUM_JOBS"); env != nullptr && *env != '\0') {
      const std::string_view text(env);
      const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), jobs);
      if (ec != std::errc{} || end != text.data() + text.size() || jobs == 0) {
        err << "error: FLOORSUM_JOBS must be a positive integer, got '" << text << "'\n";
        return kExitUsage;
      }
    }
  }
  cfg.jobs = jobs;
  cfg.format = format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
  const CLI::App* chosen = app.get_subcommands().front();
  if (chosen == verify_alt) {
    cfg.subcommand = Subcommand::kVerifyAlt;
  } else if (chosen == verify_polya) {
    cfg.subcommand = Subcommand::kVerifyPolya;
  } else if (chosen == verify_liouville) {
    cfg.subcommand = Subcommand::kVerifyLiouville;
  } else if (chosen == table) {
    cfg.subcommand = Subcommand::kTable;
  } else if (chosen == conjecture) {
    cfg.subcommand = Subcommand::kConjecture;
  } else if (chosen == constant) {
    cfg.subcommand = Subcommand::kConstant;
  } else if (chosen == residuals) {
    cfg.subcommand = Subcommand::kResiduals;
  } else {
    cfg.subcommand = Subcommand::kZetaCheck;
  }
  return run(cfg, out, err, checkers);
}

}  // namespace floorsum::cli
