#include "powersumkit/oracles.hpp"
#include "powersumkit/zeta.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace powersumkit {
namespace {

TEST(SigmaInverseSquares, Examples) {
  EXPECT_EQ(sigma_inverse_squares(0), (PiPowerValue{Rational(1), 0}));
  EXPECT_EQ(sigma_inverse_squares(1), (PiPowerValue{Rational(1, 6), 1}));
  EXPECT_EQ(sigma_inverse_squares(3), (PiPowerValue{Rational(1, 5040), 3}));
}

TEST(ZetaEven, Examples) {
  EXPECT_EQ(zeta_even_exact(1).value, (PiPowerValue{Rational(1, 6), 1}));
  EXPECT_EQ(zeta_even_exact(2).value, (PiPowerValue{Rational(1, 90), 2}));
  EXPECT_EQ(zeta_even_exact(3).value, (PiPowerValue{Rational(1, 945), 3}));
  EXPECT_EQ(zeta_even_exact(5).value.coeff, Rational(1, 93555));
  EXPECT_THROW(zeta_even_exact(0), DomainError);
}

TEST(ZetaEven, MatchesBernoulliClosedForm) {
  for (long k = 1; k <= 15; ++k) {
    const auto z = zeta_even_exact(k);
    ASSERT_EQ(z.k, k);
    ASSERT_EQ(z.value.half_exponent, static_cast<unsigned>(k));
    ASSERT_EQ(z.value.coeff, oracle::zeta_even_coefficient(k)) << "k=" << k;
    ASSERT_GT(z.value.coeff, 0);
  }
}

TEST(ZetaEven, FloatingPointApproachesOne) {
  // Test-only float check: zeta(2k) decreases toward 1.
  double previous = 2.0;
  for (long k = 1; k <= 10; ++k) {
    const auto z = zeta_even_exact(k);
    const double value = z.value.coeff.convert_to<double>() * std::pow(M_PI, 2.0 * static_cast<double>(k));
    double reference = 0;
    for (int i = 200000; i >= 1; --i) reference += std::pow(static_cast<double>(i), -2.0 * static_cast<double>(k));
    // Tail of the k = 1 series beyond 2e5 terms is ~5e-6; bound it analytically.
    const double tail = k == 1 ? 1.0 / 200000.0 : 0.0;
    EXPECT_NEAR(value, reference + tail, 1e-9) << "k=" << k;
    EXPECT_LT(value, previous);
    EXPECT_GT(value, 1.0);
    previous = value;
  }
}

TEST(HInverseSquares, ResidualVanishes) {
  for (long k = 1; k <= 15; ++k) ASSERT_EQ(h_inverse_squares_check(k), 0) << "k=" << k;
  EXPECT_THROW(h_inverse_squares_check(0), DomainError);
}

TEST(BernoulliBinomialIdentity, Examples) {
  EXPECT_EQ(bernoulli_binomial_identity(1), 0);
  EXPECT_EQ(bernoulli_binomial_identity(2), 0);
  EXPECT_EQ(bernoulli_binomial_identity(20), 0);
}

TEST(BernoulliBinomialIdentity, VanishesUpTo25) {
  for (long k = 1; k <= 25; ++k) ASSERT_EQ(bernoulli_binomial_identity(k), 0) << "k=" << k;
}

TEST(MercaLsBernoulli, Examples) {
  EXPECT_EQ(merca_ls_bernoulli_identity(1, 2), 0);
  EXPECT_EQ(merca_ls_bernoulli_identity(2, 3), 0);
  EXPECT_EQ(merca_ls_bernoulli_identity(4, 5), 0);
}

TEST(MercaLsBernoulli, VanishesOnGrid) {
  for (long k = 1; k <= 6; ++k)
    for (long n = 1; n <= 8; ++n) ASSERT_EQ(merca_ls_bernoulli_identity(k, n), 0) << k << "," << n;
}

TEST(BernoulliEvenRecursion, Examples) {
  EXPECT_EQ(bernoulli_even_recursion(1), Rational(1, 6));
  EXPECT_EQ(bernoulli_even_recursion(2), Rational(-1, 30));
  EXPECT_EQ(bernoulli_even_recursion(6), Rational(-691, 2730));
}

TEST(BernoulliEvenRecursion, MatchesStandardRecurrence) {
  for (long k = 1; k <= 15; ++k) ASSERT_EQ(bernoulli_even_recursion(k), bernoulli_number(2 * k)) << "k=" << k;
}

}  // namespace
}  // namespace powersumkit
