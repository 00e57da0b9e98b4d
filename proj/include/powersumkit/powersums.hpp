#pragma once

// Power sums of integers, one independent route per formula. Every route
// goes only through the combinatorics / symfuncs layers so that comparing
// routes against s_brute is a real cross-check.

#include "powersumkit/combinatorics.hpp"
#include "powersumkit/exact_core.hpp"
#include "powersumkit/symfuncs.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace powersumkit {

/// r^k + (r+1)^k + ... + n^k.
struct PowerSumQuery {
  long k = 0;
  long n = 1;
  long r = 1;

  void validate() const {
    if (k < 0) throw DomainError("power sum: k must be >= 0, got " + std::to_string(k));
    if (n < 1) throw DomainError("power sum: n must be >= 1, got " + std::to_string(n));
    if (r < 1 || r > n) {
      throw DomainError("power sum: need 1 <= r <= n, got r=" + std::to_string(r) +
                        " n=" + std::to_string(n));
    }
  }
};

enum class MethodTag {
  Brute,
  LangOriginal,
  LangRefined,
  NewtonRecurrence,
  BinomialRecurrence,
  RangeRStirling,
  EvenCentral,
  OddCentral,
  OddBernoulliPoly,
  TriangularLS,
  TriangularBinomial,
};

inline constexpr std::array<MethodTag, 11> kAllMethods{
    MethodTag::Brute,          MethodTag::LangOriginal,       MethodTag::LangRefined,
    MethodTag::NewtonRecurrence, MethodTag::BinomialRecurrence, MethodTag::RangeRStirling,
    MethodTag::EvenCentral,    MethodTag::OddCentral,         MethodTag::OddBernoulliPoly,
    MethodTag::TriangularLS,   MethodTag::TriangularBinomial,
};

inline std::string_view method_name(MethodTag m) {
  switch (m) {
    case MethodTag::Brute: return "Brute";
    case MethodTag::LangOriginal: return "LangOriginal";
    case MethodTag::LangRefined: return "LangRefined";
    case MethodTag::NewtonRecurrence: return "NewtonRecurrence";
    case MethodTag::BinomialRecurrence: return "BinomialRecurrence";
    case MethodTag::RangeRStirling: return "RangeRStirling";
    case MethodTag::EvenCentral: return "EvenCentral";
    case MethodTag::OddCentral: return "OddCentral";
    case MethodTag::OddBernoulliPoly: return "OddBernoulliPoly";
    case MethodTag::TriangularLS: return "TriangularLS";
    case MethodTag::TriangularBinomial: return "TriangularBinomial";
  }
  return "?";
}

/// Accepts "LangRefined", "lang_refined", "lang-refined", any case.
inline std::optional<MethodTag> parse_method(std::string_view text) {
  auto fold = [](std::string_view s) {
    std::string out;
    for (char c : s)
      if (c != '_' && c != '-') out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
  };
  const auto wanted = fold(text);
  for (auto m : kAllMethods)
    if (fold(method_name(m)) == wanted) return m;
  return std::nullopt;
}

inline Integer s_brute(const PowerSumQuery& q) {
  q.validate();
  Integer total = 0;
  for (long i = q.r; i <= q.n; ++i) total += ipow(Integer(i), static_cast<unsigned>(q.k));
  return total;
}

inline Integer s_brute(long k, long n) { return s_brute(PowerSumQuery{k, n, 1}); }

/// Lang's formula:
///   S_k(n) = sum_{m=0}^{min(k,n-1)} (-1)^m (n-m) [n+1, n+1-m] {n+k-m, n}.
/// The loop runs to k; the (n-m) factor and the Stirling zero range cut it off.
inline Integer s_lang_original(long k, long n) {
  PowerSumQuery{k, n, 1}.validate();
  Integer total = 0;
  for (long m = 0; m <= k; ++m) {
    total += sign_pow(m) * (n - m) * stirling_first_unsigned(n + 1, n + 1 - m) *
             stirling_second(n + k - m, n);
  }
  return total;
}

/// Refined form: S_k(n) = n delta_{k,0}
///   + sum_{m=1}^{k} (-1)^{m-1} m [n+1, n+1-m] {n+k-m, n}.
inline Integer s_lang_refined(long k, long n) {
  PowerSumQuery{k, n, 1}.validate();
  Integer total = k == 0 ? Integer(n) : Integer(0);
  for (long m = 1; m <= k; ++m) {
    total += sign_pow(m - 1) * m * stirling_first_unsigned(n + 1, n + 1 - m) *
             stirling_second(n + k - m, n);
  }
  return total;
}

/// S_m = (-1)^{m-1} m sigma_m(n) - sum_{j=1}^{m-1} (-1)^j sigma_j(n) S_{m-j},
/// sigma over 1..n.
inline Integer s_newton_recurrence(long k, long n) {
  if (k < 1) throw DomainError("s_newton_recurrence: k must be >= 1");
  PowerSumQuery{k, n, 1}.validate();
  const auto sigma_q = elementary_prefix(SequenceSpec::naturals(n), k);
  std::vector<Integer> sigma;
  for (const auto& s : sigma_q) sigma.push_back(to_integer(s, "sigma(1..n)"));
  std::vector<Integer> s(static_cast<std::size_t>(k) + 1);
  for (long m = 1; m <= k; ++m) {
    Integer v = sign_pow(m - 1) * m * sigma[static_cast<std::size_t>(m)];
    for (long j = 1; j < m; ++j)
      v -= sign_pow(j) * sigma[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(m - j)];
    s[static_cast<std::size_t>(m)] = v;
  }
  return s[static_cast<std::size_t>(k)];
}

/// S_m = m! C(n+m, m+1) - sum_{j=1}^{m-1} sigma_j(1..m-1) S_{m-j}.
/// The sigma here runs over 1..m-1, not 1..n.
inline Integer s_binomial_recurrence(long k, long n) {
  if (k < 1) throw DomainError("s_binomial_recurrence: k must be >= 1");
  PowerSumQuery{k, n, 1}.validate();
  std::vector<Integer> s(static_cast<std::size_t>(k) + 1);
  for (long m = 1; m <= k; ++m) {
    Integer v = factorial(static_cast<unsigned>(m)) * binomial(n + m, m + 1);
    const auto sigma = elementary_prefix(SequenceSpec::naturals(m - 1), m - 1);
    for (long j = 1; j < m; ++j)
      v -= to_integer(sigma[static_cast<std::size_t>(j)], "sigma(1..m-1)") * s[static_cast<std::size_t>(m - j)];
    s[static_cast<std::size_t>(m)] = v;
  }
  return s[static_cast<std::size_t>(k)];
}

/// r^k + ... + n^k = sum_{m=1}^{k} (-1)^{m-1} m [n+1, n+1-m]_r {n+k-m, n}_r.
inline Integer s_range(long k, long n, long r) {
  if (k < 1) throw DomainError("s_range: k must be >= 1");
  PowerSumQuery{k, n, r}.validate();
  Integer total = 0;
  for (long m = 1; m <= k; ++m) {
    total += sign_pow(m - 1) * m * r_stirling_first(n + 1, n + 1 - m, r) *
             r_stirling_second(n + k - m, n, r);
  }
  return total;
}

/// 1^{2k} + ... + n^{2k} = -sum_{m=1}^{k} m u(n+1, n+1-m) U(n+k-m, n).
inline Integer s_even_powers(long k, long n) {
  if (k < 1 || n < 1) throw DomainError("s_even_powers: need k >= 1 and n >= 1");
  Integer total = 0;
  for (long m = 1; m <= k; ++m) {
    total -= m * central_factorial_first(n + 1, n + 1 - m, Parity::Even) *
             central_factorial_second(n + k - m, n, Parity::Even);
  }
  return total;
}

/// 1^{2k} + 3^{2k} + ... + (2n-1)^{2k} = -sum_{m=1}^{k} m v(n, n-m) V(n-1+k-m, n-1).
inline Integer s_odd_even_powers(long k, long n) {
  if (k < 1 || n < 1) throw DomainError("s_odd_even_powers: need k >= 1 and n >= 1");
  Integer total = 0;
  for (long m = 1; m <= k; ++m) {
    total -= m * central_factorial_first(n, n - m, Parity::Odd) *
             central_factorial_second(n - 1 + k - m, n - 1, Parity::Odd);
  }
  return total;
}

/// Same sum as s_odd_even_powers, as a polynomial in n:
///   (2^{2k} / (2k+1)) sum_{j=0}^{k} C(2k+1, 2j+1) B_{2k-2j}(1/2) n^{2j+1}.
inline Integer s_odd_even_powers_poly(long k, long n) {
  if (k < 1 || n < 1) throw DomainError("s_odd_even_powers_poly: need k >= 1 and n >= 1");
  const Rational half(1, 2);
  Rational total = 0;
  for (long j = 0; j <= k; ++j) {
    total += Rational(binomial(2 * k + 1, 2 * j + 1)) * bernoulli_polynomial(2 * k - 2 * j)(half) *
             Rational(ipow(Integer(n), static_cast<unsigned>(2 * j + 1)));
  }
  total *= Rational(ipow(Integer(2), static_cast<unsigned>(2 * k)), Integer(2 * k + 1));
  return to_integer(total, "s_odd_even_powers_poly");
}

/// T_1^k + ... + T_n^k = -(1/2^k) sum_{m=1}^{k} m Ps_{n+1}^{(n+1-m)} PS_{n+k-m}^{(n)}.
/// Terms with m > n vanish (sigma_m of n values); the loop stops there so the
/// Legendre-Stirling index stays in range.
inline Integer triangular_sum_ls(long k, long n) {
  if (k < 1 || n < 1) throw DomainError("triangular_sum_ls: need k >= 1 and n >= 1");
  Integer total = 0;
  for (long m = 1; m <= std::min(k, n); ++m) {
    total -= m * legendre_stirling_first(n + 1, n + 1 - m) * legendre_stirling_second(n + k - m, n);
  }
  const Integer scale = ipow(Integer(2), static_cast<unsigned>(k));
  if (total % scale != 0) {
    throw InternalError("triangular_sum_ls: inexact division by 2^" + std::to_string(k));
  }
  return total / scale;
}

/// T_1^k + ... + T_n^k through both
///   (1/2^k) sum_j C(k, j) S_{k+j}(n)   and
///   (1/2^k) sum_j C(k, j) (B_{k+j+1}(n+1) - B_{k+j+1}(1)) / (k+j+1),
/// which must agree.
inline Integer triangular_sum_binomial(long k, long n) {
  if (k < 1 || n < 1) throw DomainError("triangular_sum_binomial: need k >= 1 and n >= 1");
  Rational via_power_sums = 0;
  Rational via_bernoulli = 0;
  for (long j = 0; j <= k; ++j) {
    const Rational c(binomial(k, j));
    via_power_sums += c * Rational(s_brute(k + j, n));
    const auto poly = bernoulli_polynomial(k + j + 1);
    via_bernoulli += c * (poly(Rational(n + 1)) - poly(Rational(1))) / (k + j + 1);
  }
  if (via_power_sums != via_bernoulli) {
    throw InternalError("triangular_sum_binomial: power-sum form " + to_string(via_power_sums) +
                        " != Bernoulli form " + to_string(via_bernoulli));
  }
  const Rational scale(ipow(Integer(2), static_cast<unsigned>(k)));
  return to_integer(via_power_sums / scale, "triangular_sum_binomial");
}

/// sum_{m=1}^{k} (-1)^{m-1} m C(n, m) C(n+k-m-1, k-m) - n; always 0.
inline Integer ones_identity_residual(long k, long n) {
  if (k < 1 || n < 1) throw DomainError("ones_identity_residual: need k >= 1 and n >= 1");
  Integer lhs = 0;
  for (long m = 1; m <= k; ++m) lhs += sign_pow(m - 1) * m * binomial(n, m) * binomial(n + k - m - 1, k - m);
  return lhs - n;
}

/// What a method sums, given (k, n, r).
enum class SumFamily { Powers, EvenPowers, OddEvenPowers, TriangularPowers };

inline SumFamily method_family(MethodTag m) {
  switch (m) {
    case MethodTag::EvenCentral: return SumFamily::EvenPowers;
    case MethodTag::OddCentral:
    case MethodTag::OddBernoulliPoly: return SumFamily::OddEvenPowers;
    case MethodTag::TriangularLS:
    case MethodTag::TriangularBinomial: return SumFamily::TriangularPowers;
    default: return SumFamily::Powers;
  }
}

/// Why `method` cannot answer `q` as r^k + ... + n^k, or nullopt if it can.
///
/// Brute and RangeRStirling take any r; the other S_k(n) routes need r = 1.
/// EvenCentral answers S_k(n) for even k >= 2. The odd-base and triangular
/// routes compute other sums and are reached through `evaluate_method`.
inline std::optional<std::string> method_mismatch(MethodTag method, const PowerSumQuery& q) {
  const auto name = std::string(method_name(method));
  switch (method) {
    case MethodTag::Brute: return std::nullopt;
    case MethodTag::RangeRStirling:
      if (q.k < 1) return name + " needs k >= 1";
      return std::nullopt;
    case MethodTag::LangOriginal:
    case MethodTag::LangRefined:
      if (q.r != 1) return name + " only supports r = 1";
      return std::nullopt;
    case MethodTag::NewtonRecurrence:
    case MethodTag::BinomialRecurrence:
      if (q.r != 1) return name + " only supports r = 1";
      if (q.k < 1) return name + " needs k >= 1";
      return std::nullopt;
    case MethodTag::EvenCentral:
      if (q.r != 1) return name + " only supports r = 1";
      if (q.k < 2 || q.k % 2 != 0) return name + " needs an even k >= 2";
      return std::nullopt;
    default:
      return name + " does not compute 1^k + ... + n^k";
  }
}

/// Runs one method on its own sum family:
///   Powers:           r^k + ... + n^k
///   EvenPowers:       1^k + ... + n^k, k even
///   OddEvenPowers:    1^k + 3^k + ... + (2n-1)^k, k even
///   TriangularPowers: T_1^k + ... + T_n^k
inline Integer evaluate_method(MethodTag method, const PowerSumQuery& q) {
  q.validate();
  const auto name = std::string(method_name(method));
  switch (method_family(method)) {
    case SumFamily::Powers:
      if (auto why = method_mismatch(method, q)) throw DomainError(*why);
      break;
    case SumFamily::EvenPowers:
      if (auto why = method_mismatch(method, q)) throw DomainError(*why);
      break;
    case SumFamily::OddEvenPowers:
      if (q.r != 1) throw DomainError(name + " only supports r = 1");
      if (q.k < 2 || q.k % 2 != 0) throw DomainError(name + " needs an even k >= 2");
      break;
    case SumFamily::TriangularPowers:
      if (q.r != 1) throw DomainError(name + " only supports r = 1");
      if (q.k < 1) throw DomainError(name + " needs k >= 1");
      break;
  }
  switch (method) {
    case MethodTag::Brute: return s_brute(q);
    case MethodTag::LangOriginal: return s_lang_original(q.k, q.n);
    case MethodTag::LangRefined: return s_lang_refined(q.k, q.n);
    case MethodTag::NewtonRecurrence: return s_newton_recurrence(q.k, q.n);
    case MethodTag::BinomialRecurrence: return s_binomial_recurrence(q.k, q.n);
    case MethodTag::RangeRStirling: return s_range(q.k, q.n, q.r);
    case MethodTag::EvenCentral: return s_even_powers(q.k / 2, q.n);
    case MethodTag::OddCentral: return s_odd_even_powers(q.k / 2, q.n);
    case MethodTag::OddBernoulliPoly: return s_odd_even_powers_poly(q.k / 2, q.n);
    case MethodTag::TriangularLS: return triangular_sum_ls(q.k, q.n);
    case MethodTag::TriangularBinomial: return triangular_sum_binomial(q.k, q.n);
  }
  throw InternalError("evaluate_method: unhandled method");
}

}  // namespace powersumkit
