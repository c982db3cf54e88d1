#include <gtest/gtest.h>

#include <map>
#include <random>

#include "gsq/correspondence.hpp"
#include "gsq/error.hpp"
#include "support.hpp"

using namespace gsq;
using gsq::testing::half_plane_points;
using gsq::testing::random_gauss;

namespace {

ArithTriplet roots(GaussInt l, GaussInt c, GaussInt r) { return {l, c, r}; }

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::Parse;
}

const ZeroSumTriple kExample(GaussInt(4, -1), GaussInt(4, 8), GaussInt(7, -4));

}  // namespace

TEST(PythToTripletInt, Examples) {
  auto t = pyth_to_triplet_int({3, 4, 5});
  EXPECT_EQ(t, roots(1, 5, 7));
  EXPECT_EQ(t.values(), (std::array<GaussRat, 3>{1, 25, 49}));
  EXPECT_TRUE(t.is_arithmetic());
  EXPECT_EQ(pyth_to_triplet_int({20, 21, 29}), roots(1, 29, 41));
  auto s = pyth_to_triplet_int({6, 8, 10});
  EXPECT_EQ(s.values(), (std::array<GaussRat, 3>{4, 100, 196}));
  EXPECT_EQ(code_of([] { pyth_to_triplet_int({3, 4, 6}); }), Errc::NotPythagorean);
  EXPECT_EQ(code_of([] { pyth_to_triplet_int({GaussInt(8, -4), GaussInt(4, 7), GaussInt(4, -1)}); }),
            Errc::NotPythagorean);
}

TEST(TripletToPythInt, Examples) {
  EXPECT_EQ(triplet_to_pyth_int(1, 25, 49), (LegTriple{4, 3, 5}));
  EXPECT_EQ(triplet_to_pyth_int(1, 841, 1681), (LegTriple{21, 20, 29}));
  EXPECT_EQ(code_of([] { triplet_to_pyth_int(9, 25, 49); }), Errc::NotArithmetic);
  EXPECT_EQ(code_of([] { triplet_to_pyth_int(2, 2, 2); }), Errc::NotSquare);
}

TEST(IntegerCorrespondence, RoundTripsPrimitiveTriples) {
  int count = 0;
  for (long c = 1; c <= 1000; ++c) {
    for (long a = 1; a < c; ++a) {
      long b2 = c * c - a * a;
      long b = static_cast<long>(std::llround(std::sqrt(static_cast<double>(b2))));
      if (b < a || b * b != b2 || std::gcd(a, b) != 1) continue;
      auto t = pyth_to_triplet_int({a, b, c});
      auto v = t.values();
      auto back = triplet_to_pyth_int(v[0].re.get_num(), v[1].re.get_num(), v[2].re.get_num());
      std::array<Integer, 2> legs{back.a.re, back.b.re};
      std::sort(legs.begin(), legs.end());
      ASSERT_EQ(legs[0], a);
      ASSERT_EQ(legs[1], b);
      ASSERT_EQ(back.c, GaussInt(c));
      ++count;
    }
  }
  EXPECT_EQ(count, 158);  // primitive triples with hypotenuse <= 1000
}

TEST(ToZeroSum, Examples) {
  EXPECT_EQ(to_zero_sum({GaussInt(8, -4), GaussInt(4, 7), GaussInt(4, -1)}), kExample);
  auto z = to_zero_sum({3, 4, 5});
  EXPECT_EQ(z.components(), (std::array<GaussInt, 3>{5, GaussInt(0, 3), GaussInt(0, 4)}));
  EXPECT_EQ(code_of([] { to_zero_sum({0, 1, 1}); }), Errc::TrivialTriple);
  EXPECT_EQ(code_of([] { to_zero_sum({1, 1, 1}); }), Errc::NotPythagorean);
}

TEST(TripletsFromTriple, WorkedExample) {
  auto t = triplets_from_triple(kExample);
  EXPECT_EQ(t[0], roots({12, 3}, {4, -1}, {4, -11}));
  EXPECT_TRUE(same_triplet(t[1], roots({5, 11}, {4, 8}, {3, 3})));
  EXPECT_TRUE(same_triplet(t[2], roots(9, {7, -4}, {7, -8})));
  // The conjugate display (9, 7+4i, 7+8i) is the same class.
  EXPECT_TRUE(same_triplet(t[2], roots(9, {7, 4}, {7, 8})));
  EXPECT_FALSE(same_triplet(t[2], roots(9, {7, 4}, {7, 8}), /*fold_conjugates=*/false));
  for (const auto& x : t) EXPECT_TRUE(x.is_arithmetic()) << to_string(x);
}

TEST(TripletsFromTriple, PrintedFivePlusTwelveIFailsTheIdentity) {
  ArithTriplet printed = roots({5, 12}, {4, 8}, {3, 3});
  EXPECT_FALSE(printed.is_arithmetic());
  EXPECT_EQ(printed.defect(), GaussRat(-23, 10));
}

TEST(TripletsFromTriple, IntegerTripleRecoversIntegerTriplet) {
  auto t = triplets_from_triple(to_zero_sum({3, 4, 5}));
  EXPECT_TRUE(same_triplet(t[0], roots(7, 5, 1)));
}

TEST(TripletToTriple, Examples) {
  EXPECT_EQ(triplet_to_triple(roots({12, 3}, {4, -1}, {4, -11})), kExample);
  EXPECT_TRUE(same_class(triplet_to_triple(roots(7, 5, 1)),
                         ZeroSumTriple(5, GaussInt(0, 3), GaussInt(0, 4))));
  EXPECT_EQ(code_of([] { triplet_to_triple(roots(1, 2, 3)); }), Errc::NotArithmetic);
  // (5+4i)^2 + (4-i)^2 = 2 (4+2i)^2 but (L+R)/2 = (9+3i)/2.
  ArithTriplet odd = roots({5, 4}, {4, 2}, {4, -1});
  ASSERT_TRUE(odd.is_arithmetic());
  EXPECT_EQ(code_of([&] { triplet_to_triple(odd); }), Errc::GaussianParity);
  auto rational = triplet_to_rational_triple(odd);
  GaussRat sum;
  for (const auto& c : rational) sum += c * c;
  EXPECT_TRUE(sum.is_zero());
  EXPECT_FALSE(rational[1].is_integral());
}

TEST(ThreeToOne, EachTripletMapsBackToItsTriple) {
  std::mt19937_64 rng(43);
  int checked = 0;
  while (checked < 300) {
    GaussInt p = random_gauss(rng, 30), q = random_gauss(rng, 30), k = random_gauss(rng, 4);
    LegTriple legs{k * (p * p - q * q), k * GaussInt(2) * p * q, k * (p * p + q * q)};
    ZeroSumTriple z = [&] {
      try {
        return to_zero_sum(legs);
      } catch (const Error&) {
        return kExample;
      }
    }();
    auto trips = triplets_from_triple(z);
    for (const auto& t : trips) {
      ASSERT_TRUE(t.is_arithmetic());
      ASSERT_TRUE(same_class(triplet_to_triple(t), z, false)) << to_string(t);
    }
    // Mean of the three squares is zero.
    GaussInt sum = z[0] * z[0] + z[1] * z[1] + z[2] * z[2];
    ASSERT_TRUE(sum.is_zero());
    ++checked;
  }
}

TEST(ThreeToOne, ExhaustiveAtNormTwenty) {
  // Small version of the acceptance check: every defect-0 Gaussian triplet
  // with integral halves groups into classes of exactly three.
  auto pts = half_plane_points(20);
  std::map<std::array<GaussInt, 3>, int, bool (*)(const std::array<GaussInt, 3>&,
                                                  const std::array<GaussInt, 3>&)>
      groups([](const std::array<GaussInt, 3>& a, const std::array<GaussInt, 3>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            canonical_less);
      });
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j)
      for (const auto& z : pts) {
        ArithTriplet t = roots(pts[i], z, pts[j]);
        if (!t.is_arithmetic()) continue;
        try {
          ++groups[class_key(triplet_to_triple(t), false)];
        } catch (const Error& e) {
          ASSERT_TRUE(e.code() == Errc::GaussianParity || e.code() == Errc::TrivialTriple);
        }
      }
  ASSERT_FALSE(groups.empty());
  for (const auto& [key, count] : groups) {
    ZeroSumTriple z(key[0], key[1], key[2]);
    int inside = 0;
    for (const auto& t : triplets_from_triple(z))
      if (norm(t.left.to_gauss_int()) <= 20 && norm(t.right.to_gauss_int()) <= 20 &&
          norm(t.center.to_gauss_int()) <= 20)
        ++inside;
    EXPECT_EQ(count, inside) << to_string(z);
  }
}

TEST(Siblings, IntegerExample) {
  auto s = siblings_of_triplet<GaussRat>(7, 5, 1);
  EXPECT_EQ(s.older, roots({5, 3}, 4, {5, -3}));
  EXPECT_EQ(s.older.values(), (std::array<GaussRat, 3>{GaussRat(16, 30), 16, GaussRat(16, -30)}));
  EXPECT_EQ(s.younger, roots({5, 4}, 3, {5, -4}));
  EXPECT_EQ(s.younger.values(), (std::array<GaussRat, 3>{GaussRat(9, 40), 9, GaussRat(9, -40)}));
  EXPECT_TRUE(s.older.is_arithmetic());
  EXPECT_TRUE(s.younger.is_arithmetic());
  EXPECT_TRUE(s.integral_halves);
}

TEST(Siblings, ParkerDiagonal) {
  auto s = siblings_of_triplet<GaussRat>(29, 37, 29);
  EXPECT_EQ(s.older, roots(37, 29, 37));
  EXPECT_EQ(s.younger.center, GaussRat(0));
  EXPECT_EQ(s.older.defect(), GaussRat(1056));
  EXPECT_EQ(s.younger.defect(), GaussRat(1056));
}

TEST(Siblings, NonIntegralHalvesAreFlagged) {
  auto s = siblings_of_triplet<GaussRat>(2, 1, 1);
  EXPECT_FALSE(s.integral_halves);
  EXPECT_EQ(s.older.center, GaussRat(Rational(3, 2), 0));
  EXPECT_EQ(s.older.defect(), -(ArithTriplet{2, 1, 1}.defect()));
}

TEST(Siblings, DefectNegationOnRandomRoots) {
  std::mt19937_64 rng(47);
  for (int n = 0; n < 1000; ++n) {
    GaussRat x = random_gauss(rng, 1L << 30), z = random_gauss(rng, 1L << 30),
             y = random_gauss(rng, 1L << 30);
    if (n % 3 == 0) x = GaussRat(Rational(x.re / 3), x.im);
    auto s = siblings_of_triplet(x, z, y);
    GaussRat expected = -ArithTriplet{x, z, y}.defect();
    ASSERT_EQ(s.older.defect(), expected);
    ASSERT_EQ(s.younger.defect(), expected);
  }
}

TEST(Siblings, SquareClosureForMatchingParity) {
  std::mt19937_64 rng(53);
  for (int n = 0; n < 500; ++n) {
    GaussInt x = random_gauss(rng, 1000), z = random_gauss(rng, 1000);
    GaussInt y = x + GaussInt(2) * random_gauss(rng, 500);
    auto s = siblings_of_triplet<GaussRat>(x, z, y);
    ASSERT_TRUE(s.integral_halves);
    for (const auto& t : {s.older, s.younger})
      for (const auto& v : t.values()) ASSERT_TRUE(is_perfect_gauss_square(v));
  }
}

TEST(ZeroSumTriple, RejectsNonCancellingSquares) {
  EXPECT_EQ(code_of([] { ZeroSumTriple(1, 1, 1); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([] { ZeroSumTriple(0, 1, GaussInt(0, 1)); }), Errc::TrivialTriple);
}
