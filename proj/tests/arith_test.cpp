#include <spgauge/arith.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace spgauge;

namespace {

TEST(GcdNonneg, Examples) {
  EXPECT_EQ(gcd_nonneg(28, 40), 4);
  EXPECT_EQ(gcd_nonneg(0, 5), 5);
  EXPECT_EQ(gcd_nonneg(-12, 40), 4);
  EXPECT_EQ(gcd_nonneg(0, 0), 0);
}

TEST(GcdNonneg, MatchesDivisorScan) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-500, 500);
  for (int i = 0; i < 500; ++i) {
    const auto a = dist(rng), b = dist(rng);
    EXPECT_EQ(gcd_nonneg(a, b), oracle::gcd_scan(a, b)) << a << " " << b;
  }
}

TEST(PPart, Examples) {
  EXPECT_EQ(p_part(40, 2), 8);
  EXPECT_EQ(p_part(40, 3), 1);
  EXPECT_EQ(p_part(40, 5), 5);
  EXPECT_EQ(p_part(-40, 2), 8);
  EXPECT_EQ(p_exponent(40, 2), 3u);
}

TEST(PPart, Errors) {
  try {
    p_part(0, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroArgument);
  }
  try {
    p_part(40, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPrime);
  }
}

TEST(PPart, DividesAndLeavesCoprimeCofactor) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> val(1, 1'000'000);
  const std::vector<std::int64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  for (int i = 0; i < 1000; ++i) {
    const BigInt a = val(rng) * (i % 2 ? -1 : 1);
    const auto p = primes[pick(rng)];
    const BigInt pp = p_part(a, p);
    ASSERT_EQ(a % pp, 0);
    ASSERT_NE((a / pp) % p, 0);
  }
}

TEST(IsPrime, Small) {
  std::vector<int> got;
  for (int i = -3; i < 30; ++i)
    if (is_prime(i)) got.push_back(i);
  EXPECT_EQ(got, (std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
}

TEST(RationalTest, LowestTermsAndSign) {
  const Rational r(BigInt(4), BigInt(-6));
  EXPECT_EQ(r.num(), -2);
  EXPECT_EQ(r.den(), 3);
  EXPECT_EQ(Rational(BigInt(0), BigInt(-7)).den(), 1);
  EXPECT_EQ(Rational(1, 6) + Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(1, 6) - Rational(1, 3), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_LT(Rational(-1, 6), Rational(1, 7));
}

TEST(RationalTest, DivisionByZero) {
  try {
    (void)(Rational(1) / Rational(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), Error);
  EXPECT_THROW(Rational::parse("3/0"), Error);
}

TEST(RationalTest, Parse) {
  EXPECT_EQ(Rational::parse("-1/6"), Rational(-1, 6));
  EXPECT_EQ(Rational::parse("4/8"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("40"), Rational(40));
  EXPECT_EQ(Rational::parse("3/-6"), Rational(-1, 2));
  for (const char* bad : {"", "/", "1/", "a", "1.5", "--3"})
    EXPECT_THROW(Rational::parse(bad), Error) << bad;
}

TEST(RationalTest, StringRoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> dist(-100000, 100000);
  for (int i = 0; i < 300; ++i) {
    std::int64_t d = dist(rng);
    if (d == 0) d = 1;
    const Rational r(BigInt(dist(rng)), BigInt(d));
    EXPECT_EQ(Rational::parse(r.to_string()), r);
  }
}

TEST(FracGcd, Examples) {
  EXPECT_EQ(frac_gcd({Rational(-1, 6), Rational(2)}), Rational(1, 6));
  EXPECT_EQ(frac_gcd({Rational(1, 3), Rational(1)}), Rational(1, 3));
  EXPECT_EQ(frac_gcd({Rational(1, 2)}), Rational(1, 2));
  EXPECT_EQ(frac_gcd({Rational(0), Rational(-3, 4)}), Rational(3, 4));
}

TEST(FracGcd, AllZero) {
  try {
    frac_gcd({Rational(0), Rational(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AllZero);
  }
}

TEST(FracGcd, InputsAreMultiplesOfResult) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30), len(1, 5);
  for (int i = 0; i < 300; ++i) {
    std::vector<Rational> v;
    for (int j = len(rng); j > 0; --j) v.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
    if (std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); })) continue;
    const Rational g = frac_gcd(v);
    ASSERT_GT(g, Rational(0));
    for (const auto& x : v) ASSERT_TRUE((x / g).is_integer());
  }
}

TEST(FracGcd, IntegerInputsFoldGcd) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> dist(-1000, 1000);
  for (int i = 0; i < 300; ++i) {
    std::vector<Rational> v;
    BigInt g = 0;
    for (int j = 0; j < 4; ++j) {
      const int x = dist(rng);
      v.emplace_back(x);
      g = gcd_nonneg(g, x);
    }
    if (g == 0) continue;
    EXPECT_EQ(frac_gcd(v), Rational(g));
  }
}

TEST(Surjections, Examples) {
  EXPECT_EQ(surjections(3, 2), 6);
  EXPECT_EQ(surjections(5, 2), 30);
  EXPECT_EQ(surjections(5, 3), 150);
  EXPECT_EQ(surjections(4, 5), 0);
  for (unsigned m = 1; m <= 10; ++m) EXPECT_EQ(surjections(m, 1), 1);
}

TEST(Surjections, MatchEnumerationOfMaps) {
  for (unsigned m = 1; m <= 7; ++m)
    for (unsigned k = 1; k <= m; ++k)
      EXPECT_EQ(surjections(m, k), BigInt(oracle::surjections_by_enumeration(m, k))) << m << "," << k;
}

TEST(Surjections, RowAgreesWithSingleValues) {
  for (unsigned m : {1u, 5u, 9u, 21u}) {
    const auto row = surjection_row(m, m + 2);
    for (unsigned k = 0; k <= m + 2; ++k)
      EXPECT_EQ(row[k], k == 0 ? BigInt(0) : surjections(m, k)) << m << "," << k;
  }
}

TEST(Surjections, EvenForOddDomainAndTwoOrMoreBlocks) {
  for (unsigned n = 2; n <= 200; ++n) {
    const auto row = surjection_row(2 * n - 1, n);
    for (unsigned k = 2; k <= n; ++k) ASSERT_EQ(row[k] % 2, 0) << n << "," << k;
  }
}

TEST(Binomial, MatchesFactorialQuotient) {
  std::vector<BigInt> fact{1};
  for (unsigned i = 1; i <= 200; ++i) fact.push_back(fact.back() * i);
  for (unsigned k = 0; k <= 200; ++k) {
    ASSERT_EQ(factorial(k), fact[k]);
    for (unsigned j = 0; j <= k; ++j) ASSERT_EQ(binomial(k, j), fact[k] / (fact[j] * fact[k - j]));
  }
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(9) / 3, 120960);
}

}  // namespace
