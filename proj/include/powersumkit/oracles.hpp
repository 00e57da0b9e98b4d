#pragma once

// Reference values computed along routes that share nothing with the
// formulas they check: direct summation, the classical Bernoulli closed form
// for zeta(2k), and the Legendre-Stirling tables typed in as fixtures.

#include "powersumkit/combinatorics.hpp"
#include "powersumkit/exact_core.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace powersumkit::oracle {

/// 1^{2k} + 3^{2k} + ... + (2n-1)^{2k}.
inline Integer odd_even_power_sum(long k, long n) {
  Integer total = 0;
  for (long i = 1; i <= n; ++i) total += ipow(Integer(2 * i - 1), static_cast<unsigned>(2 * k));
  return total;
}

/// T_1^k + ... + T_n^k with T_i = i(i+1)/2.
inline Integer triangular_power_sum(long k, long n) {
  Integer total = 0;
  for (long i = 1; i <= n; ++i) total += ipow(Integer(i * (i + 1) / 2), static_cast<unsigned>(k));
  return total;
}

/// zeta(2k) / pi^{2k} = (-1)^{k+1} B_{2k} 2^{2k-1} / (2k)!.
inline Rational zeta_even_coefficient(long k) {
  return Rational(sign_pow(k + 1)) * bernoulli_number(2 * k) *
         Rational(ipow(Integer(2), static_cast<unsigned>(2 * k - 1)), factorial(static_cast<unsigned>(2 * k)));
}

/// Legendre-Stirling numbers of the first kind Ps_n^{(j)}, 0 <= j <= n <= 7.
inline constexpr std::array<std::array<std::int64_t, 8>, 8> kLegendreStirlingFirst{{
    {1, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0},
    {0, -2, 1, 0, 0, 0, 0, 0},
    {0, 12, -8, 1, 0, 0, 0, 0},
    {0, -144, 108, -20, 1, 0, 0, 0},
    {0, 2880, -2304, 508, -40, 1, 0, 0},
    {0, -86400, 72000, -17544, 1708, -70, 1, 0},
    {0, 3628800, -3110400, 808848, -89280, 4648, -112, 1},
}};

/// Legendre-Stirling numbers of the second kind PS_n^{(j)}, 0 <= j <= n <= 7.
inline constexpr std::array<std::array<std::int64_t, 8>, 8> kLegendreStirlingSecond{{
    {1, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0},
    {0, 2, 1, 0, 0, 0, 0, 0},
    {0, 4, 8, 1, 0, 0, 0, 0},
    {0, 8, 52, 20, 1, 0, 0, 0},
    {0, 16, 320, 292, 40, 1, 0, 0},
    {0, 32, 1936, 3824, 1092, 70, 1, 0},
    {0, 64, 11648, 47824, 25664, 3192, 112, 1},
}};

inline constexpr long kGoldenTableRows = 7;

}  // namespace powersumkit::oracle
