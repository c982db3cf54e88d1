#include <gtest/gtest.h>

#include <algorithm>

#include "gsq/error.hpp"
#include "gsq/search.hpp"
#include "support.hpp"

using namespace gsq;

namespace {

SearchConfig config(long bound, Ring ring, int workers = 1, int floor = 5) {
  SearchConfig c;
  c.norm_bound = bound;
  c.ring = ring;
  c.worker_count = workers;
  c.score_floor = floor;
  return c;
}

bool contains_class(const std::vector<ZeroSumTriple>& v, const ZeroSumTriple& z) {
  return std::any_of(v.begin(), v.end(), [&](const ZeroSumTriple& x) { return same_class(x, z); });
}

const GapCandidate* find_basis(const std::vector<GapCandidate>& v, const GapBasis& b) {
  GapBasis want = canonical_basis(b);
  for (const auto& c : v)
    if (c.basis == want) return &c;
  return nullptr;
}

std::vector<std::array<GaussInt, 3>> keys(const std::vector<ZeroSumTriple>& v) {
  std::vector<std::array<GaussInt, 3>> out;
  for (const auto& z : v) out.push_back(class_key(z));
  return out;
}

const ZeroSumTriple kExample(GaussInt(4, -1), GaussInt(4, 8), GaussInt(7, -4));
const ZeroSumTriple kThreeFourFive(5, GaussInt(0, 3), GaussInt(0, 4));

}  // namespace

TEST(EnumTriples, TinyBoundIsEmpty) {
  EXPECT_TRUE(enum_triples(config(2, Ring::Gaussians)).empty());
  EXPECT_TRUE(enum_triples(config(2, Ring::Integers)).empty());
  EXPECT_TRUE(brute_force_triples(2).empty());
}

TEST(EnumTriples, ContainsKnownClasses) {
  EXPECT_TRUE(contains_class(enum_triples(config(25, Ring::Integers)), kThreeFourFive));
  EXPECT_FALSE(contains_class(enum_triples(config(24, Ring::Integers)), kThreeFourFive));
  EXPECT_TRUE(contains_class(enum_triples(config(80, Ring::Gaussians)), kExample));
  EXPECT_FALSE(contains_class(enum_triples(config(79, Ring::Gaussians)), kExample));
  EXPECT_TRUE(contains_class(brute_force_triples(80), kExample));
  EXPECT_TRUE(contains_class(brute_force_triples(25), kThreeFourFive));
}

TEST(EnumTriples, IntegerRingCountsEveryTripleUpToAThousand) {
  // Independent count of a < b < c <= 1000 with a^2 + b^2 = c^2.
  long count = 0;
  for (long c = 1; c <= 1000; ++c)
    for (long a = 1; a < c; ++a) {
      long b2 = c * c - a * a;
      long b = std::lround(std::sqrt(static_cast<double>(b2)));
      if (b > a && b * b == b2) ++count;
    }
  EXPECT_EQ(count, 881);
  EXPECT_EQ(static_cast<long>(enum_triples(config(1000000, Ring::Integers)).size()), count);
}

TEST(EnumTriples, MatchesBruteForceAtSmallBounds) {
  for (long n : {5L, 25L, 50L, 65L}) {
    auto e = enum_triples(config(n, Ring::Gaussians));
    auto b = brute_force_triples(n);
    EXPECT_EQ(keys(e), keys(b)) << "bound " << n;
  }
}

TEST(EnumTriples, BruteForceRegressionCount) {
  EXPECT_EQ(brute_force_triples(25).size(), 5u);  // pinned from the oracle
}

TEST(EnumTriples, IndependentOfWorkerCount) {
  auto one = keys(enum_triples(config(300, Ring::Gaussians, 1)));
  auto three = keys(enum_triples(config(300, Ring::Gaussians, 3)));
  EXPECT_EQ(one, three);
}

TEST(BruteForce, GuardsTheBound) {
  try {
    brute_force_triples(kBruteForceLimit + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BoundTooLarge);
  }
}

TEST(SearchConfig, Validates) {
  EXPECT_THROW(enum_triples(config(1, Ring::Integers)), Error);
  EXPECT_THROW(enum_triples(config(10, Ring::Integers, 0)), Error);
  EXPECT_THROW(gap_candidates(config(10, Ring::Integers, 1, 4)), Error);
  EXPECT_THROW(gap_candidates(config(10, Ring::Integers, 1, 10)), Error);
}

TEST(GapCandidates, FindsTheSixSquareIntegerGrid) {
  auto res = gap_candidates(config(1000000, Ring::Integers));
  const GapCandidate* c = find_basis(res.ranked, {625, 600, 336});
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->square_count, 6);
  EXPECT_EQ(c->basis, (GapBasis{625, 336, 600}));
  EXPECT_TRUE(c->distinct);
  EXPECT_TRUE(res.certificates.empty());
}

TEST(GapCandidates, FindsBremner) {
  auto res = gap_candidates(config(565L * 565L, Ring::Integers));
  const GapCandidate* c = find_basis(res.ranked, {180625, 41496, 138600});
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->square_count, 7);
  ASSERT_FALSE(res.ranked.empty());
  EXPECT_GE(res.ranked.front().square_count, 7);
}

TEST(GapCandidates, EmptyAtTinyBoundAndTopFloor) {
  auto res = gap_candidates(config(10, Ring::Integers, 1, 9));
  EXPECT_TRUE(res.ranked.empty());
}

TEST(GapCandidates, RankingIndependentOfWorkerCount) {
  auto a = gap_candidates(config(1500, Ring::Gaussians, 1));
  auto b = gap_candidates(config(1500, Ring::Gaussians, 4));
  ASSERT_EQ(a.ranked.size(), b.ranked.size());
  for (std::size_t n = 0; n < a.ranked.size(); ++n) {
    EXPECT_EQ(a.ranked[n].basis, b.ranked[n].basis);
    EXPECT_EQ(a.ranked[n].square_count, b.ranked[n].square_count);
  }
}

TEST(GapCandidates, EveryCandidateRechecks) {
  auto res = gap_candidates(config(1500, Ring::Gaussians));
  ASSERT_FALSE(res.ranked.empty());
  // The brute-force root oracle is slow on large values; check the head.
  for (std::size_t n = 0; n < std::min<std::size_t>(res.ranked.size(), 40); ++n) {
    const auto& c = res.ranked[n];
    EXPECT_EQ(gap_recover(magic_from_basis(c.basis)).basis, c.basis);
    int squares = 0;
    for (int j = -1; j <= 1; ++j)
      for (int k = -1; k <= 1; ++k) squares += gsq::testing::brute_force_sqrt(c.basis.value(j, k)).has_value();
    EXPECT_EQ(squares, c.square_count);
    EXPECT_EQ(static_cast<int>(c.square_positions.size()), c.square_count);
    for (const auto& t : c.provenance) EXPECT_TRUE(t.is_arithmetic());
    if (n > 0) EXPECT_GE(res.ranked[n - 1].square_count, c.square_count);
  }
}

TEST(Certificate, TranscriptReportsEachCheck) {
  GapCandidate c;
  c.basis = {1, 0, 0};
  auto text = certificate_transcript(c);
  EXPECT_NE(text.find("cell[0][0] = 1 root 1 ok"), std::string::npos) << text;
  EXPECT_NE(text.find("distinct entries 1 FAIL"), std::string::npos);
  EXPECT_NE(text.find("NOT VERIFIED"), std::string::npos);
}
