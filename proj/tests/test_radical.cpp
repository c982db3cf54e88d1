#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gsq/error.hpp"
#include "gsq/radical.hpp"

using namespace gsq;

namespace {

RadicalValue rv(long a, long b, long n) { return RadicalValue(GaussRat(a), GaussRat(b), n); }

double rel_err(std::complex<double> got, std::complex<double> want) {
  double scale = std::max(1.0, std::abs(want));
  return std::abs(got - want) / scale;
}

}  // namespace

TEST(Squarefree, Splits) {
  auto s = squarefree_split(360721);
  EXPECT_EQ(s.square_root, 1);
  EXPECT_EQ(s.squarefree, 360721);
  auto t = squarefree_split(Integer(2 * 3 * 3 * 5 * 5 * 5 * 7));
  EXPECT_EQ(t.square_root, 15);
  EXPECT_EQ(t.squarefree, 2 * 5 * 7);
  // Cofactor above the trial-division bound that is a prime square.
  Integer big = Integer("1000000007") * Integer("1000000007") * 6;
  auto u = squarefree_split(big);
  EXPECT_EQ(u.square_root, Integer("1000000007"));
  EXPECT_EQ(u.squarefree, 6);
}

TEST(RadicalValue, NormalizesOnConstruction) {
  RadicalValue x = rv(1, 3, 12);  // 1 + 3 sqrt(12) = 1 + 6 sqrt(3)
  EXPECT_EQ(x.b(), GaussRat(6));
  EXPECT_EQ(x.radicand(), 3);
  RadicalValue y = rv(2, 3, 0);
  EXPECT_TRUE(y.is_rational());
  EXPECT_EQ(y.radicand(), 1);
  RadicalValue z = rv(2, 3, 49);  // 2 + 21
  EXPECT_EQ(z, RadicalValue(GaussRat(23)));
  EXPECT_THROW(rv(0, 1, -2), Error);
  EXPECT_TRUE(rv(0, 0, 5).is_zero());
  EXPECT_FALSE(rv(0, 1, 5).is_zero());
}

TEST(RadicalMul, Examples) {
  RadicalValue d = radical_mul(RadicalValue(23), RadicalValue::sqrt_of(360721));
  EXPECT_EQ(d, RadicalValue(GaussRat(0), GaussRat(23), 360721));

  EXPECT_EQ(radical_mul(rv(1, 1, 2), rv(1, -1, 2)), RadicalValue(-1));

  try {
    radical_mul(rv(0, 1, 2), rv(0, 1, 3));
    FAIL() << "expected MixedRadicals";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MixedRadicals);
  }
}

TEST(RadicalValue, SameRadicandClosure) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-40, 40);
  for (int k = 0; k < 500; ++k) {
    long n = 2 + static_cast<long>(rng() % 30);
    RadicalValue x(GaussRat(coef(rng), coef(rng)), GaussRat(coef(rng), coef(rng)), n);
    RadicalValue y(GaussRat(coef(rng), coef(rng)), GaussRat(coef(rng), coef(rng)), n);
    RadicalValue p = x * y;
    if (!p.is_rational()) ASSERT_EQ(p.radicand(), x.is_rational() ? y.radicand() : x.radicand());
  }
}

TEST(RadicalValue, AgreesWithFloatingEvaluation) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> coef(-1000, 1000);
  std::uniform_int_distribution<long> rad(1, 1000000);
  for (int k = 0; k < 1000; ++k) {
    long n = rad(rng);
    RadicalValue x(GaussRat(coef(rng), coef(rng)), GaussRat(coef(rng), coef(rng)), n);
    RadicalValue y(GaussRat(Rational(coef(rng), 7), coef(rng)), GaussRat(coef(rng), coef(rng)), n);
    auto fx = to_complex(x), fy = to_complex(y);
    ASSERT_LT(rel_err(to_complex(x * y), fx * fy), 1e-9);
    ASSERT_LT(rel_err(to_complex(x + y), fx + fy), 1e-9);
    ASSERT_LT(rel_err(to_complex(x - y), fx - fy), 1e-9);
  }
}

TEST(SurdSum, MixedRadicalsStayExact) {
  SurdSum a = RadicalValue::sqrt_of(2);
  SurdSum b = RadicalValue::sqrt_of(3);
  SurdSum six = RadicalValue::sqrt_of(6);
  EXPECT_EQ(a * b, six);
  EXPECT_EQ(a * a, SurdSum(2));
  EXPECT_EQ(six * a, SurdSum(RadicalValue(GaussRat(), GaussRat(2), 3)));
  SurdSum s = a + b;
  EXPECT_EQ(s * s, SurdSum(5) + SurdSum(2) * six);
  EXPECT_FALSE(s.as_radical().has_value());
  EXPECT_TRUE((a + a).as_radical().has_value());
  EXPECT_TRUE((s - b - a).is_zero());
}

TEST(SurdSum, AgreesWithFloatingEvaluation) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> coef(-50, 50);
  std::uniform_int_distribution<long> rad(1, 200);
  auto random_sum = [&] {
    SurdSum s;
    for (int t = 0; t < 3; ++t)
      s += SurdSum(RadicalValue(GaussRat(), GaussRat(coef(rng), coef(rng)), rad(rng)));
    return s;
  };
  for (int k = 0; k < 500; ++k) {
    SurdSum x = random_sum(), y = random_sum();
    ASSERT_LT(rel_err(to_complex(x * y), to_complex(x) * to_complex(y)), 1e-9);
    ASSERT_LT(rel_err(to_complex(mul_i(x)), to_complex(x) * std::complex<double>(0, 1)), 1e-9);
  }
}
