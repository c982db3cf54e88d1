#include "gsq/fixtures.hpp"

#include <algorithm>
#include <string>

#include "gsq/error.hpp"

namespace gsq {

namespace {

GaussInt sq(long r) { return GaussInt(r * r); }

void require(bool ok, const char* fixture, const char* claim) {
  if (!ok) throw Error(Errc::InvalidArgument, std::string(fixture) + ": " + claim);
}

int count_sums_equal_to(const NearMissReport& rep, const GaussInt& total) {
  return static_cast<int>(std::count(rep.line_sums.begin(), rep.line_sums.end(), total));
}

}  // namespace

MagicSquare bremner_square() {
  MagicSquare s(Grid3<GaussInt>{{
      {sq(373), sq(289), sq(565)},
      {GaussInt(360721), sq(425), sq(23)},
      {sq(205), sq(527), GaussInt(222121)},
  }});
  auto rep = magic_report(s);
  require(rep.magic_constant == GaussInt(541875), "bremner", "all eight sums 541875");
  require(rep.thrice_center_ok, "bremner", "magic constant is three times the center");
  require(rep.square_count == 7, "bremner", "seven square entries");
  require(rep.distinct_count == 9, "bremner", "nine distinct entries");
  return s;
}

MagicSquare parker_square() {
  MagicSquare s(Grid3<GaussInt>{{
      {sq(29), sq(1), sq(47)},
      {sq(41), sq(37), sq(1)},
      {sq(23), sq(41), sq(29)},
  }});
  auto rep = magic_report(s);
  require(!rep.magic_constant, "parker", "not every sum agrees");
  require(count_sums_equal_to(rep, GaussInt(3051)) == 7, "parker", "seven sums of 3051");
  require(rep.square_count == 9, "parker", "nine square entries");
  require(rep.distinct_count == 6, "parker", "six distinct entries");
  return s;
}

MagicSquare lo_shu_square() {
  MagicSquare s(Grid3<GaussInt>{{{4, 9, 2}, {3, 5, 7}, {8, 1, 6}}});
  auto rep = magic_report(s);
  require(rep.magic_constant == GaussInt(15), "loshu", "all eight sums 15");
  return s;
}

ZeroSumTriple worked_example_triple() {
  return ZeroSumTriple(GaussInt(4, -1), GaussInt(4, 8), GaussInt(7, -4));
}

GapBasis origin_demo_basis() { return {0, GaussInt(2, 1), GaussInt(4, 1)}; }

Fixture load_fixture(std::string_view name) {
  if (name == "bremner") return bremner_square();
  if (name == "parker") return parker_square();
  if (name == "loshu") return lo_shu_square();
  if (name == "worked-example") return worked_example_triple();
  throw Error(Errc::InvalidArgument, "unknown fixture '" + std::string(name) + "'");
}

}  // namespace gsq
