#pragma once

// Invariant sweeps behind `verify`. Each suite expands into independent
// cells; a cell computes an expected and an actual value as strings and
// fails when they differ or when it throws.

#include "powersumkit/combinatorics.hpp"
#include "powersumkit/oracles.hpp"
#include "powersumkit/powersums.hpp"
#include "powersumkit/symfuncs.hpp"
#include "powersumkit/zeta.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace powersumkit {

struct VerifyFailure {
  std::string cell;
  std::string expected;
  std::string actual;

  friend bool operator<(const VerifyFailure& a, const VerifyFailure& b) { return a.cell < b.cell; }
};

struct VerifyReport {
  std::string suite;
  std::size_t cells = 0;
  std::vector<VerifyFailure> failures;  // sorted by cell id
  std::chrono::duration<double> elapsed{0};

  [[nodiscard]] bool ok() const { return failures.empty(); }
  [[nodiscard]] int exit_code() const { return ok() ? 0 : 1; }
};

/// Optional overrides of a suite's default sweep bounds.
struct VerifyLimits {
  std::optional<long> k_max;
  std::optional<long> n_max;

  [[nodiscard]] long k(long fallback) const { return k_max.value_or(fallback); }
  [[nodiscard]] long n(long fallback) const { return n_max.value_or(fallback); }
};

struct VerifyCell {
  std::string id;
  std::function<std::pair<std::string, std::string>()> run;  // {expected, actual}
};

template <typename Expected, typename Actual>
VerifyCell make_cell(std::string id, Expected expected, Actual actual) {
  return {std::move(id), [expected = std::move(expected), actual = std::move(actual)] {
            return std::pair{to_string(expected()), to_string(actual())};
          }};
}

/// Runs cells on up to `threads` workers (0 = hardware concurrency).
inline VerifyReport run_cells(std::string suite, const std::vector<VerifyCell>& cells, unsigned threads = 0) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report{std::move(suite), cells.size(), {}, {}};
  std::mutex failures_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      VerifyFailure failure{cells[i].id, {}, {}};
      try {
        auto [expected, actual] = cells[i].run();
        if (expected == actual) continue;
        failure.expected = std::move(expected);
        failure.actual = std::move(actual);
      } catch (const std::exception& e) {
        failure.expected = "no exception";
        failure.actual = std::string("exception: ") + e.what();
      }
      std::lock_guard lock(failures_mutex);
      report.failures.push_back(std::move(failure));
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cells.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  std::sort(report.failures.begin(), report.failures.end());
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

namespace suites {

inline std::string cell_id(std::string_view prefix, std::initializer_list<std::pair<const char*, long>> params) {
  std::string id(prefix);
  for (const auto& [name, value] : params) {
    id += ' ';
    id += name;
    id += '=';
    // Zero-pad so lexicographic order follows numeric order.
    auto digits = std::to_string(value);
    if (value >= 0 && digits.size() < 3) digits.insert(0, 3 - digits.size(), '0');
    id += digits;
  }
  return id;
}

/// Every S_k(n) route against s_brute, plus the k = 0 Lang forms.
inline std::vector<VerifyCell> concordance(const VerifyLimits& lim) {
  const long k_max = lim.k(12), n_max = lim.n(25);
  std::vector<VerifyCell> cells;
  using Fn = Integer (*)(long, long);
  const std::pair<const char*, Fn> routes[] = {
      {"lang_original", &s_lang_original},
      {"lang_refined", &s_lang_refined},
      {"newton_recurrence", &s_newton_recurrence},
      {"binomial_recurrence", &s_binomial_recurrence},
  };
  for (long n = 1; n <= n_max; ++n) {
    for (const auto& [name, fn] : routes) {
      if (name == std::string_view("lang_original") || name == std::string_view("lang_refined"))
        cells.push_back(make_cell(cell_id(name, {{"k", 0}, {"n", n}}), [n] { return Integer(n); },
                                  [fn = fn, n] { return fn(0, n); }));
    }
    for (long k = 1; k <= k_max; ++k)
      for (const auto& [name, fn] : routes)
        cells.push_back(make_cell(cell_id(name, {{"k", k}, {"n", n}}), [k, n] { return s_brute(k, n); },
                                  [fn = fn, k, n] { return fn(k, n); }));
  }
  return cells;
}

inline std::vector<std::pair<std::string, std::function<SequenceSpec(long)>>> sweep_sequences() {
  return {
      {"naturals", [](long n) { return SequenceSpec::naturals(n); }},
      {"ones", [](long n) { return SequenceSpec::ones(n); }},
      {"squares", [](long n) { return SequenceSpec::squares(n); }},
      {"odd_squares", [](long n) { return SequenceSpec::odd_squares(n); }},
      {"doubled_triangulars", [](long n) { return SequenceSpec::doubled_triangulars(n); }},
      {"inverse_squares", [](long n) { return SequenceSpec::inverse_squares(n); }},
  };
}

/// sum_i (-1)^i sigma_i h_{k-i} = delta_{k,0}.
inline std::vector<VerifyCell> orthogonality(const VerifyLimits& lim) {
  const long k_max = lim.k(15), n_max = lim.n(12);
  std::vector<VerifyCell> cells;
  for (const auto& [name, make] : sweep_sequences())
    for (long n = 1; n <= n_max; ++n)
      for (long k = 0; k <= k_max; ++k)
        cells.push_back(make_cell(cell_id("orthogonality " + name, {{"n", n}, {"k", k}}),
                                  [k] { return Rational(k == 0 ? 1 : 0); },
                                  [make = make, n, k] { return orthogonality_residual(make(n), k); }));
  return cells;
}

/// p_k through sigma/h and through Newton-Girard, both against direct sums.
inline std::vector<VerifyCell> symfuncs(const VerifyLimits& lim) {
  const long k_max = lim.k(10), n_max = lim.n(12);
  std::vector<VerifyCell> cells;
  for (const auto& [name, make] : sweep_sequences()) {
    for (long n = 1; n <= n_max; ++n) {
      for (long k = 1; k <= k_max; ++k)
        cells.push_back(make_cell(
            cell_id("power_sum_via_lang " + name, {{"n", n}, {"k", k}}),
            [make = make, n, k] { return power_sums_direct(make(n), k).back(); },
            [make = make, n, k] { return power_sum_via_lang(make(n), k); }));
      cells.push_back({cell_id("newton_girard " + name, {{"n", n}, {"K", k_max}}), [make = make, n, k_max] {
                         const auto xs = make(n);
                         const auto direct = power_sums_direct(xs, k_max);
                         const auto ng = newton_girard_power_sums(elementary_prefix(xs, k_max), k_max);
                         std::string expected, actual;
                         for (std::size_t i = 0; i < direct.size(); ++i) {
                           expected += to_string(direct[i]) + ' ';
                           actual += to_string(ng[i]) + ' ';
                         }
                         return std::pair{expected, actual};
                       }});
    }
  }
  return cells;
}

inline std::vector<VerifyCell> ones(const VerifyLimits& lim) {
  const long k_max = lim.k(15), n_max = lim.n(15);
  std::vector<VerifyCell> cells;
  for (long n = 1; n <= n_max; ++n)
    for (long k = 1; k <= k_max; ++k)
      cells.push_back(make_cell(cell_id("ones_identity", {{"k", k}, {"n", n}}), [] { return Integer(0); },
                                [k, n] { return ones_identity_residual(k, n); }));
  return cells;
}

/// r-Stirling range sums: r = 1 reduction and telescoping for every r.
inline std::vector<VerifyCell> range(const VerifyLimits& lim) {
  const long k_max = lim.k(8), n_max = lim.n(10);
  std::vector<VerifyCell> cells;
  for (long n = 1; n <= n_max; ++n)
    for (long k = 1; k <= k_max; ++k) {
      cells.push_back(make_cell(cell_id("range_r1_vs_refined", {{"k", k}, {"n", n}}),
                                [k, n] { return s_lang_refined(k, n); }, [k, n] { return s_range(k, n, 1); }));
      for (long r = 1; r <= n; ++r)
        cells.push_back(make_cell(
            cell_id("range_telescoping", {{"k", k}, {"n", n}, {"r", r}}),
            [k, n, r] { return s_brute(k, n) - (r >= 2 ? s_brute(k, r - 1) : Integer(0)); },
            [k, n, r] { return s_range(k, n, r); }));
    }
  return cells;
}

/// Even powers via u/U, odd-base even powers via v/V and via B_k(1/2).
inline std::vector<VerifyCell> central(const VerifyLimits& lim) {
  const long k_max = lim.k(6), n_even = lim.n(15), n_odd = lim.n(12);
  std::vector<VerifyCell> cells;
  for (long k = 1; k <= k_max; ++k) {
    for (long n = 1; n <= n_even; ++n)
      cells.push_back(make_cell(cell_id("even_powers", {{"k", k}, {"n", n}}),
                                [k, n] { return s_brute(2 * k, n); }, [k, n] { return s_even_powers(k, n); }));
    for (long n = 1; n <= n_odd; ++n) {
      cells.push_back(make_cell(cell_id("odd_even_powers", {{"k", k}, {"n", n}}),
                                [k, n] { return oracle::odd_even_power_sum(k, n); },
                                [k, n] { return s_odd_even_powers(k, n); }));
      cells.push_back(make_cell(cell_id("odd_even_powers_poly", {{"k", k}, {"n", n}}),
                                [k, n] { return s_odd_even_powers(k, n); },
                                [k, n] { return s_odd_even_powers_poly(k, n); }));
    }
  }
  return cells;
}

inline std::vector<VerifyCell> triangular(const VerifyLimits& lim) {
  const long k_max = lim.k(6), n_max = lim.n(12);
  std::vector<VerifyCell> cells;
  for (long k = 1; k <= k_max; ++k)
    for (long n = 1; n <= n_max; ++n) {
      cells.push_back(make_cell(cell_id("triangular_ls", {{"k", k}, {"n", n}}),
                                [k, n] { return oracle::triangular_power_sum(k, n); },
                                [k, n] { return triangular_sum_ls(k, n); }));
      cells.push_back(make_cell(cell_id("triangular_binomial", {{"k", k}, {"n", n}}),
                                [k, n] { return oracle::triangular_power_sum(k, n); },
                                [k, n] { return triangular_sum_binomial(k, n); }));
    }
  return cells;
}

/// Both Legendre-Stirling triangles against the embedded golden tables.
inline std::vector<VerifyCell> ls_tables(const VerifyLimits&) {
  std::vector<VerifyCell> cells;
  for (long n = 0; n <= oracle::kGoldenTableRows; ++n)
    for (long j = 0; j <= n; ++j) {
      const auto un = static_cast<std::size_t>(n), uj = static_cast<std::size_t>(j);
      cells.push_back(make_cell(cell_id("ls1", {{"n", n}, {"j", j}}),
                                [=] { return Integer(oracle::kLegendreStirlingFirst[un][uj]); },
                                [n, j] { return legendre_stirling_first(n, j); }));
      cells.push_back(make_cell(cell_id("ls2", {{"n", n}, {"j", j}}),
                                [=] { return Integer(oracle::kLegendreStirlingSecond[un][uj]); },
                                [n, j] { return legendre_stirling_second(n, j); }));
    }
  return cells;
}

inline std::vector<VerifyCell> zeta(const VerifyLimits& lim) {
  const long k_max = lim.k(15);
  std::vector<VerifyCell> cells;
  for (long k = 1; k <= k_max; ++k) {
    cells.push_back(make_cell(cell_id("zeta_vs_bernoulli", {{"k", k}}),
                              [k] { return PiPowerValue{oracle::zeta_even_coefficient(k), static_cast<unsigned>(k)}; },
                              [k] { return zeta_even_exact(k).value; }));
    cells.push_back(make_cell(cell_id("zeta_h_check", {{"k", k}}), [] { return Rational(0); },
                              [k] { return h_inverse_squares_check(k); }));
    cells.push_back({cell_id("zeta_positive", {{"k", k}}), [k] {
                       return std::pair<std::string, std::string>{
                           "positive", zeta_even_exact(k).value.coeff > 0 ? "positive" : "not positive"};
                     }});
  }
  return cells;
}

inline std::vector<VerifyCell> bernoulli(const VerifyLimits& lim) {
  const long k_binomial = lim.k(25), k_recursion = lim.k(15), k_merca = lim.k(6), n_merca = lim.n(8);
  std::vector<VerifyCell> cells;
  for (long k = 1; k <= k_binomial; ++k)
    cells.push_back(make_cell(cell_id("bernoulli_binomial_identity", {{"k", k}}), [] { return Rational(0); },
                              [k] { return bernoulli_binomial_identity(k); }));
  for (long k = 1; k <= k_recursion; ++k)
    cells.push_back(make_cell(cell_id("bernoulli_even_recursion", {{"k", k}}),
                              [k] { return bernoulli_number(2 * k); }, [k] { return bernoulli_even_recursion(k); }));
  for (long k = 1; k <= k_merca; ++k)
    for (long n = 1; n <= n_merca; ++n)
      cells.push_back(make_cell(cell_id("merca_ls_bernoulli", {{"k", k}, {"n", n}}), [] { return Rational(0); },
                                [k, n] { return merca_ls_bernoulli_identity(k, n); }));
  return cells;
}

/// Coefficient of x^m in P_n(x) equals (n-m)(-1)^m sigma_m(1..n).
inline std::vector<VerifyCell> pn_coeffs(const VerifyLimits& lim) {
  const long n_max = lim.n(12);
  std::vector<VerifyCell> cells;
  for (long n = 1; n <= n_max; ++n)
    for (long m = 0; m < n; ++m)
      cells.push_back(make_cell(
          cell_id("pn_coeff", {{"n", n}, {"m", m}}),
          [n, m] {
            return Rational((n - m) * sign_pow(m)) *
                   elementary_prefix(SequenceSpec::naturals(n), m)[static_cast<std::size_t>(m)];
          },
          [n, m] { return pn_polynomial_coeffs(n).coeff(static_cast<std::size_t>(m)); }));
  return cells;
}

}  // namespace suites

using SuiteBuilder = std::function<std::vector<VerifyCell>(const VerifyLimits&)>;

/// Named suites in `verify --suite all` order. Callers may register more.
inline std::vector<std::pair<std::string, SuiteBuilder>>& suite_registry() {
  static std::vector<std::pair<std::string, SuiteBuilder>> registry{
      {"ls_tables", suites::ls_tables},   {"concordance", suites::concordance}, {"orthogonality", suites::orthogonality},
      {"symfuncs", suites::symfuncs},     {"ones", suites::ones},               {"range", suites::range},
      {"central", suites::central},       {"triangular", suites::triangular},   {"zeta", suites::zeta},
      {"bernoulli", suites::bernoulli},   {"pn_coeffs", suites::pn_coeffs},
  };
  return registry;
}

inline const SuiteBuilder* find_suite(std::string_view name) {
  for (const auto& [suite, builder] : suite_registry())
    if (suite == name) return &builder;
  return nullptr;
}

/// Runs one suite by name. "all" is handled by the caller.
inline VerifyReport run_suite(std::string_view name, const VerifyLimits& limits = {}, unsigned threads = 0) {
  const auto* builder = find_suite(name);
  if (!builder) throw DomainError("unknown suite '" + std::string(name) + "'");
  return run_cells(std::string(name), (*builder)(limits), threads);
}

}  // namespace powersumkit
