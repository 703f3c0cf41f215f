#include <gtest/gtest.h>

#include <random>

#include "gspecht/scalars.hpp"

using namespace gspecht;

TEST(Scalars, FindXiSmallCases) {
  EXPECT_EQ(find_xi(7, 3), 2u);
  EXPECT_EQ(find_xi(5, 2), 4u);
  EXPECT_THROW(find_xi(5, 1), ParameterError);
  EXPECT_THROW(find_xi(7, 4), ParameterError);
}

TEST(Scalars, FindXiHasExactOrder) {
  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 31ull, 97ull, 101ull}) {
    PrimeField f(p);
    for (int e = 2; e <= static_cast<int>(p - 1); ++e) {
      if ((p - 1) % static_cast<std::uint64_t>(e)) continue;
      auto xi = find_xi(p, e);
      // direct exponentiation, not multiplicative_order
      std::uint64_t x = 1;
      for (int k = 1; k <= e; ++k) {
        x = x * xi % p;
        if (k < e) {
          EXPECT_NE(x, 1u) << "p=" << p << " e=" << e << " k=" << k;
        }
      }
      EXPECT_EQ(x, 1u);
      // smallest such element
      for (std::uint64_t y = 2; y < xi; ++y) EXPECT_NE(multiplicative_order(f, static_cast<std::uint32_t>(y)), static_cast<std::uint64_t>(e));
    }
  }
}

TEST(Scalars, ErrorMessageNamesBothValues) {
  try {
    find_xi(11, 3);
    FAIL();
  } catch (const ParameterError& err) {
    std::string msg = err.what();
    EXPECT_NE(msg.find("e=3"), std::string::npos);
    EXPECT_NE(msg.find("p=11"), std::string::npos);
  }
}

TEST(Scalars, FieldOps) {
  PrimeField f5(5), f7(7);
  EXPECT_EQ(f5.add(3, 4), 2u);
  EXPECT_EQ(f7.inv(2), 4u);
  EXPECT_THROW(f7.inv(0), ArithmeticError);
  RationalField q;
  EXPECT_EQ(q.inv(Rational(2)), Rational(1, 2));
  EXPECT_THROW(q.inv(Rational(0)), ArithmeticError);
}

TEST(Scalars, InverseExhaustiveSmallPrimes) {
  for (std::uint64_t p = 2; p <= 101; ++p) {
    if (!is_prime(p)) continue;
    PrimeField f(p);
    for (std::uint32_t a = 1; a < p; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u) << p << " " << a;
  }
}

TEST(Scalars, RationalInverseRandom) {
  RationalField q;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> dist(-1000000, 1000000);
  for (int k = 0; k < 200; ++k) {
    long long n = dist(rng), m = dist(rng);
    if (n == 0 || m == 0) continue;
    Rational a = Rational(n) / Rational(m);
    EXPECT_EQ(q.mul(a, q.inv(a)), Rational(1));
  }
}

TEST(Scalars, PowNegativeExponent) {
  PrimeField f(7);
  EXPECT_EQ(f.pow(2, -1), 4u);
  EXPECT_EQ(f.pow(3, 6), 1u);
}

TEST(Scalars, DefaultPrime) {
  EXPECT_EQ(default_prime(2), 5u);
  EXPECT_EQ(default_prime(3), 7u);
  EXPECT_EQ(default_prime(4), 5u);
  EXPECT_EQ(default_prime(5), 11u);
}

TEST(Scalars, FieldSpecValidation) {
  auto s = FieldSpec::prime_field(7, 3);
  EXPECT_EQ(s.xi, 2u);
  EXPECT_NO_THROW(s.validate());
  EXPECT_THROW(FieldSpec::prime_field(7, 4), ParameterError);
  EXPECT_THROW(FieldSpec::rational_field(Rational(1)), ParameterError);
  EXPECT_THROW(FieldSpec::rational_field(Rational(-1)), ParameterError);
  EXPECT_NO_THROW(FieldSpec::rational_field(Rational(1, 2)));
}
