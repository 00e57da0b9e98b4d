#include "powersumkit/powersums.hpp"

#include <gtest/gtest.h>

namespace powersumkit {
namespace {

// Direct summation in machine integers, independent of the library's s_brute.
Integer direct(long k, long n, long r = 1) {
  Integer total = 0;
  for (long i = r; i <= n; ++i) {
    Integer p = 1;
    for (long e = 0; e < k; ++e) p *= i;
    total += p;
  }
  return total;
}

TEST(Brute, Examples) {
  EXPECT_EQ(s_brute(0, 7), 7);
  EXPECT_EQ(s_brute(3, 3), 36);
  EXPECT_EQ(s_brute(PowerSumQuery{2, 4, 2}), 29);
  EXPECT_THROW(s_brute(PowerSumQuery{2, 4, 5}), DomainError);
  EXPECT_THROW(s_brute(PowerSumQuery{-1, 4, 1}), DomainError);
  EXPECT_THROW(s_brute(PowerSumQuery{2, 0, 1}), DomainError);
}

TEST(LangOriginal, Examples) {
  EXPECT_EQ(s_lang_original(2, 3), 14);
  EXPECT_EQ(s_lang_original(0, 5), 5);
  EXPECT_EQ(s_lang_original(5, 2), 33);
}

TEST(LangRefined, Examples) {
  EXPECT_EQ(s_lang_refined(2, 2), 5);
  EXPECT_EQ(s_lang_refined(0, 9), 9);
  EXPECT_EQ(s_lang_refined(4, 10), 25333);
}

TEST(NewtonRecurrence, Examples) {
  EXPECT_EQ(s_newton_recurrence(1, 4), 10);
  EXPECT_EQ(s_newton_recurrence(3, 4), 100);
  EXPECT_EQ(s_newton_recurrence(6, 6), 67171);
  EXPECT_THROW(s_newton_recurrence(0, 4), DomainError);
}

TEST(BinomialRecurrence, Examples) {
  EXPECT_EQ(s_binomial_recurrence(1, 5), 15);
  EXPECT_EQ(s_binomial_recurrence(2, 3), 14);
  EXPECT_EQ(s_binomial_recurrence(5, 5), 4425);
  EXPECT_THROW(s_binomial_recurrence(0, 5), DomainError);
}

TEST(Concordance, AllRoutesAgreeWithDirectSummation) {
  for (long n = 1; n <= 25; ++n) {
    EXPECT_EQ(s_lang_original(0, n), n);
    EXPECT_EQ(s_lang_refined(0, n), n);
    for (long k = 1; k <= 12; ++k) {
      const Integer expected = direct(k, n);
      ASSERT_EQ(s_brute(k, n), expected) << "k=" << k << " n=" << n;
      ASSERT_EQ(s_lang_original(k, n), expected) << "k=" << k << " n=" << n;
      ASSERT_EQ(s_lang_refined(k, n), expected) << "k=" << k << " n=" << n;
      ASSERT_EQ(s_newton_recurrence(k, n), expected) << "k=" << k << " n=" << n;
      ASSERT_EQ(s_binomial_recurrence(k, n), expected) << "k=" << k << " n=" << n;
    }
  }
}

TEST(Concordance, LargeExponentStaysExact) {
  // 2^40 + 1 exceeds 32 bits; k = 40 overflows 64-bit power sums for n >= 3.
  EXPECT_EQ(s_lang_refined(40, 3), direct(40, 3));
  EXPECT_EQ(s_newton_recurrence(30, 20), direct(30, 20));
}

TEST(Range, Examples) {
  EXPECT_EQ(s_range(2, 4, 2), 29);
  EXPECT_EQ(s_range(3, 4, 4), 64);
  EXPECT_THROW(s_range(2, 4, 5), DomainError);
  EXPECT_THROW(s_range(2, 4, 0), DomainError);
  EXPECT_THROW(s_range(0, 4, 1), DomainError);
}

TEST(Range, ReductionAndTelescoping) {
  for (long n = 1; n <= 10; ++n)
    for (long k = 1; k <= 8; ++k) {
      ASSERT_EQ(s_range(k, n, 1), s_lang_refined(k, n));
      for (long r = 1; r <= n; ++r) ASSERT_EQ(s_range(k, n, r), direct(k, n, r)) << k << "," << n << "," << r;
    }
}

TEST(EvenPowers, Examples) {
  EXPECT_EQ(s_even_powers(1, 2), 5);
  EXPECT_EQ(s_even_powers(2, 3), 98);
  EXPECT_EQ(s_even_powers(3, 5), 20515);
}

TEST(EvenPowers, MatchDirectSummation) {
  for (long k = 1; k <= 6; ++k)
    for (long n = 1; n <= 15; ++n) ASSERT_EQ(s_even_powers(k, n), direct(2 * k, n)) << k << "," << n;
}

Integer odd_direct(long k, long n) {
  Integer total = 0;
  for (long i = 1; i <= n; ++i) total += direct(2 * k, 2 * i - 1, 2 * i - 1);
  return total;
}

TEST(OddEvenPowers, Examples) {
  EXPECT_EQ(s_odd_even_powers(1, 2), 10);
  EXPECT_EQ(s_odd_even_powers(2, 2), 82);
  EXPECT_EQ(s_odd_even_powers(2, 4), 3108);  // 1 + 81 + 625 + 2401
  EXPECT_EQ(s_odd_even_powers_poly(1, 2), 10);
  EXPECT_EQ(s_odd_even_powers_poly(1, 1), 1);
  EXPECT_EQ(s_odd_even_powers_poly(3, 3), 1 + 729 + 15625);
}

TEST(OddEvenPowers, BothFormsMatchDirectSummation) {
  for (long k = 1; k <= 6; ++k)
    for (long n = 1; n <= 12; ++n) {
      const auto expected = odd_direct(k, n);
      ASSERT_EQ(s_odd_even_powers(k, n), expected) << k << "," << n;
      ASSERT_EQ(s_odd_even_powers_poly(k, n), expected) << k << "," << n;
    }
}

Integer triangular_direct(long k, long n) {
  Integer total = 0;
  for (long i = 1; i <= n; ++i) total += direct(k, i * (i + 1) / 2, i * (i + 1) / 2);
  return total;
}

TEST(Triangular, Examples) {
  EXPECT_EQ(triangular_sum_ls(1, 2), 4);
  EXPECT_EQ(triangular_sum_ls(1, 4), 20);
  EXPECT_EQ(triangular_sum_ls(2, 3), 46);
  EXPECT_EQ(triangular_sum_binomial(1, 3), 10);
  EXPECT_EQ(triangular_sum_binomial(2, 2), 10);
  EXPECT_EQ(triangular_sum_binomial(3, 1), 1);
}

TEST(Triangular, FirstPowersAreTetrahedral) {
  for (long n = 1; n <= 20; ++n) ASSERT_EQ(triangular_sum_ls(1, n), binomial(n + 2, 3));
}

TEST(Triangular, BothFormsMatchDirectSummation) {
  for (long k = 1; k <= 6; ++k)
    for (long n = 1; n <= 12; ++n) {
      const auto expected = triangular_direct(k, n);
      ASSERT_EQ(triangular_sum_ls(k, n), expected) << k << "," << n;
      ASSERT_EQ(triangular_sum_binomial(k, n), expected) << k << "," << n;
    }
}

TEST(OnesIdentity, Examples) {
  EXPECT_EQ(ones_identity_residual(2, 3), 0);
  for (long n = 1; n <= 20; ++n) EXPECT_EQ(ones_identity_residual(1, n), 0);
  EXPECT_EQ(ones_identity_residual(7, 4), 0);
  EXPECT_THROW(ones_identity_residual(0, 3), DomainError);
}

TEST(OnesIdentity, VanishesEverywhere) {
  for (long k = 1; k <= 15; ++k)
    for (long n = 1; n <= 15; ++n) ASSERT_EQ(ones_identity_residual(k, n), 0) << k << "," << n;
}

TEST(Methods, NamesRoundTrip) {
  for (auto m : kAllMethods) EXPECT_EQ(parse_method(method_name(m)), m);
  EXPECT_EQ(parse_method("lang_refined"), MethodTag::LangRefined);
  EXPECT_EQ(parse_method("range-r-stirling"), MethodTag::RangeRStirling);
  EXPECT_FALSE(parse_method("faulhaber").has_value());
}

TEST(Methods, Applicability) {
  const PowerSumQuery shifted{2, 4, 2};
  EXPECT_FALSE(method_mismatch(MethodTag::Brute, shifted));
  EXPECT_FALSE(method_mismatch(MethodTag::RangeRStirling, shifted));
  EXPECT_TRUE(method_mismatch(MethodTag::LangRefined, shifted));
  EXPECT_TRUE(method_mismatch(MethodTag::EvenCentral, PowerSumQuery{3, 4, 1}));
  EXPECT_FALSE(method_mismatch(MethodTag::EvenCentral, PowerSumQuery{4, 4, 1}));
  EXPECT_TRUE(method_mismatch(MethodTag::NewtonRecurrence, PowerSumQuery{0, 4, 1}));
  EXPECT_TRUE(method_mismatch(MethodTag::TriangularLS, PowerSumQuery{2, 4, 1}));
}

TEST(Methods, EvaluateDispatch) {
  EXPECT_EQ(evaluate_method(MethodTag::RangeRStirling, {2, 4, 2}), 29);
  EXPECT_EQ(evaluate_method(MethodTag::LangRefined, {0, 5, 1}), 5);
  EXPECT_EQ(evaluate_method(MethodTag::EvenCentral, {4, 3, 1}), 98);
  EXPECT_EQ(evaluate_method(MethodTag::OddCentral, {4, 2, 1}), 82);
  EXPECT_EQ(evaluate_method(MethodTag::OddBernoulliPoly, {4, 2, 1}), 82);
  EXPECT_EQ(evaluate_method(MethodTag::TriangularLS, {2, 3, 1}), 46);
  EXPECT_EQ(evaluate_method(MethodTag::TriangularBinomial, {2, 3, 1}), 46);
  EXPECT_THROW(evaluate_method(MethodTag::OddCentral, {3, 2, 1}), DomainError);
  EXPECT_THROW(evaluate_method(MethodTag::LangOriginal, {2, 4, 2}), DomainError);
}

}  // namespace
}  // namespace powersumkit
