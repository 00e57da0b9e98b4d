#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error.

#include "powersumkit/powersums.hpp"
#include "powersumkit/tables.hpp"
#include "powersumkit/verify.hpp"
#include "powersumkit/zeta.hpp"

#include <CLI11.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace powersumkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Presentation only: the library never evaluates pi.
inline constexpr const char* kPi50 = "3.14159265358979323846264338327950288419716939937511";

/// coeff * pi^{2e} to `digits` significant digits.
inline std::string decimal_rendering(const PiPowerValue& v, int digits = 40) {
  using Decimal = boost::multiprecision::cpp_dec_float_50;
  const Decimal pi(kPi50);
  Decimal value = Decimal(numerator(v.coeff)) / Decimal(denominator(v.coeff));
  for (unsigned i = 0; i < 2 * v.half_exponent; ++i) value *= pi;
  std::ostringstream os;
  os << std::setprecision(digits) << value;
  return os.str();
}

inline void print_report(const VerifyReport& r, std::ostream& out) {
  out << "suite " << r.suite << ": " << r.cells << " cells, " << r.failures.size() << " failures, "
      << std::fixed << std::setprecision(3) << r.elapsed.count() << " s\n";
  out.unsetf(std::ios::floatfield);
  for (const auto& f : r.failures)
    out << "  FAIL " << f.cell << ": expected " << f.expected << ", got " << f.actual << '\n';
}

struct TableOptions {
  std::string family;
  long rows = 0;
  std::string format = "plain";
};

inline int cmd_table(const TableOptions& opt, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(opt.family);
  if (!family) {
    err << "error: unknown family '" << opt.family << "'\n";
    return kExitUsage;
  }
  const auto format = parse_format(opt.format);
  if (!format) {
    err << "error: unknown format '" << opt.format << "'\n";
    return kExitUsage;
  }
  if (opt.rows < 0 || opt.rows > rows_cap()) {
    err << "error: rows must be in [0, " << rows_cap() << "] (set POWERSUMKIT_ROWS_CAP to raise the cap)\n";
    return kExitUsage;
  }
  out << render_table(make_table(*family, opt.rows), *format);
  return kExitOk;
}

struct PowerSumOptions {
  long k = 0;
  long n = 1;
  long r = 1;
  std::string method = "all";
};

inline int cmd_powersum(const PowerSumOptions& opt, std::ostream& out, std::ostream& err) {
  const PowerSumQuery q{opt.k, opt.n, opt.r};
  try {
    q.validate();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (opt.method != "all") {
    const auto method = parse_method(opt.method);
    if (!method) {
      err << "error: unknown method '" << opt.method << "'\n";
      return kExitUsage;
    }
    try {
      out << method_name(*method) << ' ' << to_string(evaluate_method(*method, q)) << '\n';
    } catch (const DomainError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    return kExitOk;
  }
  std::optional<Integer> first;
  bool agree = true;
  for (auto method : kAllMethods) {
    if (method_mismatch(method, q)) continue;
    const Integer value = evaluate_method(method, q);
    out << method_name(method) << ' ' << to_string(value) << '\n';
    if (!first) first = value;
    agree = agree && value == *first;
  }
  out << "concordance " << (agree ? "OK" : "MISMATCH") << '\n';
  return agree ? kExitOk : kExitVerifyFailed;
}

struct VerifyOptions {
  std::string suite = "all";
  std::optional<long> k_max;
  std::optional<long> n_max;
  unsigned threads = 0;
};

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  const VerifyLimits limits{opt.k_max, opt.n_max};
  if ((limits.k_max && *limits.k_max < 1) || (limits.n_max && *limits.n_max < 1)) {
    err << "error: --k-max and --n-max must be >= 1\n";
    return kExitUsage;
  }
  std::vector<std::string> names;
  if (opt.suite == "all") {
    for (const auto& [name, builder] : suite_registry()) names.push_back(name);
  } else if (find_suite(opt.suite)) {
    names.push_back(opt.suite);
  } else {
    err << "error: unknown suite '" << opt.suite << "'\n";
    return kExitUsage;
  }
  std::size_t cells = 0, failures = 0;
  double seconds = 0;
  for (const auto& name : names) {
    const auto report = run_suite(name, limits, opt.threads);
    print_report(report, out);
    cells += report.cells;
    failures += report.failures.size();
    seconds += report.elapsed.count();
  }
  if (names.size() > 1) {
    out << "total: " << cells << " cells, " << failures << " failures, " << std::fixed << std::setprecision(3)
        << seconds << " s\n";
    out.unsetf(std::ios::floatfield);
  }
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

inline int cmd_zeta(long k, std::ostream& out, std::ostream& err) {
  if (k < 1) {
    err << "error: k must be >= 1\n";
    return kExitUsage;
  }
  const auto z = zeta_even_exact(k);
  out << "zeta(" << 2 * k << ") = " << to_string(z.value) << '\n';
  out << "zeta(" << 2 * k << ") ~ " << decimal_rendering(z.value) << '\n';
  return kExitOk;
}

/// Full command line, args[0] being the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact power sums, Stirling-family tables and zeta(2k)", "powersumkit"};
  app.require_subcommand(1);

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "Print a number triangle");
  table_cmd->add_option("--family", table.family,
                        "stirling1|stirling2|ls1|ls2|central_u|central_U|central_v|central_V|bernoulli")
      ->required();
  table_cmd->add_option("--rows", table.rows, "Last row index")->required();
  table_cmd->add_option("--format", table.format, "plain|csv|json");

  PowerSumOptions ps;
  auto* ps_cmd = app.add_subcommand("powersum", "Compute r^k + ... + n^k");
  ps_cmd->add_option("--k", ps.k, "Exponent")->required();
  ps_cmd->add_option("--n", ps.n, "Last base")->required();
  ps_cmd->add_option("--r", ps.r, "First base (default 1)");
  ps_cmd->add_option("--method", ps.method, "Method name or 'all'");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run an identity sweep");
  verify_cmd->add_option("--suite", verify.suite, "Suite name or 'all'");
  verify_cmd->add_option("--k-max", verify.k_max, "Override the suite's k bound");
  verify_cmd->add_option("--n-max", verify.n_max, "Override the suite's n bound");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = all cores)");

  long zeta_k = 0;
  auto* zeta_cmd = app.add_subcommand("zeta", "Print zeta(2k) exactly");
  zeta_cmd->add_option("--k", zeta_k, "Half the argument")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table_cmd) return cmd_table(table, out, err);
    if (*ps_cmd) return cmd_powersum(ps, out, err);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*zeta_cmd) return cmd_zeta(zeta_k, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace powersumkit::cli
