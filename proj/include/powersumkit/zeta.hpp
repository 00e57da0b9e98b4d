#pragma once

// zeta(2k) as an exact rational multiple of pi^{2k}, and the Bernoulli
// identities that come out of the power-sum / symmetric-function relation.

#include "powersumkit/combinatorics.hpp"
#include "powersumkit/exact_core.hpp"
#include "powersumkit/memo.hpp"

#include <string>

namespace powersumkit {

struct ZetaEven {
  long k = 1;
  PiPowerValue value;  // half_exponent == k, coeff > 0
};

/// sigma_k(1/1^2, 1/2^2, ...) = pi^{2k} / (2k+1)!.
inline PiPowerValue sigma_inverse_squares(long k) {
  require_nonnegative(k, "sigma_inverse_squares: k");
  return {Rational(Integer(1), factorial(static_cast<unsigned>(2 * k + 1))), static_cast<unsigned>(k)};
}

/// zeta(2k) = (-1)^{k-1} k pi^{2k}/(2k+1)!
///          + sum_{m=1}^{k-1} (-1)^{m-1} (2m pi^{2m}/(2m+1)!) (1 - 2^{2(m-k)+1}) zeta(2k-2m).
inline ZetaEven zeta_even_exact(long k) {
  if (k < 1) throw DomainError("zeta_even_exact: k must be >= 1");
  static MemoTable<long, PiPowerValue> memo;
  auto value = memo.get_or_compute(k, [&] {
    PiPowerValue total = Rational(sign_pow(k - 1) * k) * sigma_inverse_squares(k);
    for (long m = 1; m < k; ++m) {
      // 1 - 2^{2(m-k)+1} = 1 - 2 / 4^{k-m}
      const Rational damping =
          Rational(1) - Rational(Integer(2), ipow(Integer(4), static_cast<unsigned>(k - m)));
      const PiPowerValue term = Rational(sign_pow(m - 1) * 2 * m) * damping * sigma_inverse_squares(m);
      total = total + term * zeta_even_exact(k - m).value;
    }
    return total;
  });
  return {k, value};
}

/// Residual of p_k = sum_{m=1}^{k} (-1)^{m-1} m sigma_m h_{k-m} over the
/// inverse squares, with sigma_m = pi^{2m}/(2m+1)!,
/// h_j = ((2^{2j} - 2) / 2^{2j-1}) zeta(2j) and p_k = zeta(2k), all zeta values
/// taken from zeta_even_exact. Returns the pi^{2k} coefficient of LHS - RHS.
inline Rational h_inverse_squares_check(long k) {
  if (k < 1) throw DomainError("h_inverse_squares_check: k must be >= 1");
  auto h = [](long j) -> PiPowerValue {
    if (j == 0) return {Rational(1), 0};
    const Integer four_j = ipow(Integer(2), static_cast<unsigned>(2 * j));
    const Rational prefactor(four_j - 2, ipow(Integer(2), static_cast<unsigned>(2 * j - 1)));
    return prefactor * zeta_even_exact(j).value;
  };
  PiPowerValue rhs{Rational(0), static_cast<unsigned>(k)};
  for (long m = 1; m <= k; ++m) rhs = rhs + Rational(sign_pow(m - 1) * m) * (sigma_inverse_squares(m) * h(k - m));
  return (zeta_even_exact(k).value - rhs).coeff;
}

/// sum_{j=0}^{k} (-1)^j C(k, j) B_{k+j+1}/(k+j+1) - 1/((k+1) C(2k+2, k+1)); always 0.
inline Rational bernoulli_binomial_identity(long k) {
  if (k < 1) throw DomainError("bernoulli_binomial_identity: k must be >= 1");
  Rational lhs = 0;
  for (long j = 0; j <= k; ++j)
    lhs += sign_pow(j) * Rational(binomial(k, j)) * bernoulli_number(k + j + 1) / (k + j + 1);
  const Rational rhs(Integer(1), (k + 1) * binomial(2 * k + 2, k + 1));
  return lhs - rhs;
}

/// LHS - RHS of
///   -sum_{m=1}^{k} m Ps_{n+1}^{(n+1-m)} PS_{n+k-m}^{(n)}
///     = (-1)^k / ((k+1) C(2k+2, k+1)) + sum_{j=0}^{k} C(k, j) B_{k+j+1}(n+1)/(k+j+1).
inline Rational merca_ls_bernoulli_identity(long k, long n) {
  if (k < 1 || n < 1) throw DomainError("merca_ls_bernoulli_identity: need k >= 1 and n >= 1");
  Integer lhs = 0;
  // Ps_{n+1}^{(n+1-m)} = 0 once m > n.
  for (long m = 1; m <= std::min(k, n); ++m)
    lhs -= m * legendre_stirling_first(n + 1, n + 1 - m) * legendre_stirling_second(n + k - m, n);
  Rational rhs(Integer(sign_pow(k)), (k + 1) * binomial(2 * k + 2, k + 1));
  for (long j = 0; j <= k; ++j)
    rhs += Rational(binomial(k, j)) * bernoulli_polynomial(k + j + 1)(Rational(n + 1)) / (k + j + 1);
  return Rational(lhs) - rhs;
}

/// B_{2k} from its own recursion alone, starting at B_0 = 1:
///   B_{2k} = (2/(2k+1)) sum_{j=1}^{k} j C(2k+1, 2j+1) (1/2^{2k-1} - 1/2^{2j}) B_{2k-2j}.
inline Rational bernoulli_even_recursion(long k) {
  if (k < 0) throw DomainError("bernoulli_even_recursion: k must be >= 0");
  if (k == 0) return 1;
  static MemoTable<long, Rational> memo;
  return memo.get_or_compute(k, [&] {
    const Rational lead(Integer(1), ipow(Integer(2), static_cast<unsigned>(2 * k - 1)));
    Rational acc = 0;
    for (long j = 1; j <= k; ++j) {
      const Rational weight = lead - Rational(Integer(1), ipow(Integer(2), static_cast<unsigned>(2 * j)));
      acc += Rational(j * binomial(2 * k + 1, 2 * j + 1)) * weight * bernoulli_even_recursion(k - j);
    }
    return Rational(2, 2 * k + 1) * acc;
  });
}

}  // namespace powersumkit
