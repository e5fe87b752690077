#include <gtest/gtest.h>

#include "jacobi/siegel.hpp"

using namespace jacobi;

namespace {

Series3 poly(std::initializer_list<std::pair<Key3, long>> terms, std::int64_t qp = kInf, std::int64_t sp = kInf) {
  Series3 s(qp, sp);
  for (auto [k, c] : terms) s.add_term(k, Integer(c));
  return s;
}

const Key3 k1 = Key3::make(0, 0, 0);

} // namespace

TEST(YFactor, NegativeExponentStaysSymbolic) {
  SiegelSeries f = y_factor(-4, 1);
  EXPECT_EQ(f.expanded(), poly({{k1, 1}, {Key3::make(0, -4, 0), -1}}));
  SiegelSeries g = y_factor(-4, -1);
  EXPECT_EQ(g.y_factors.at(-4), -1);
  EXPECT_THROW(g.expanded(), ValidationError);
  EXPECT_TRUE((f * g).agrees_with(SiegelSeries(Series3::one())));
}

TEST(YFactor, PositivePowerIsRewritten) {
  SiegelSeries f = y_factor(8, 1);
  EXPECT_EQ(f.expanded(), poly({{k1, 1}, {Key3::make(0, 8, 0), -1}}));
  EXPECT_TRUE(f.y_factors.count(-8));
}

TEST(Siegel, InverseOfOneMinusQS) {
  SiegelSeries a(poly({{k1, 1}, {Key3::make(24, 0, 24), -1}}, 24 * 4, 24 * 4));
  SiegelSeries b = a.inverse();
  for (int n = 0; n < 4; ++n) EXPECT_EQ(b.series.coefficient(Key3::make(24 * n, 0, 24 * n)), 1) << n;
  EXPECT_TRUE((a * b).agrees_with(SiegelSeries(Series3::one())));
}

TEST(Siegel, PowerAndTruncation) {
  SiegelSeries a(poly({{k1, 1}, {Key3::make(24, 4, 24), 1}}));
  SiegelSeries c = a.pow(3).truncated(24 * 2, 24 * 5);
  EXPECT_EQ(c.qprec(), 48);
  EXPECT_EQ(c.sprec(), 120);
  EXPECT_EQ(c.series.coefficient(Key3::make(24, 4, 24)), 3);
  EXPECT_EQ(c.series.coefficient(Key3::make(48, 8, 48)), 0);
}

TEST(Siegel, FirstDifferenceNamesKey) {
  SiegelSeries a(poly({{k1, 1}, {Key3::make(24, 0, 0), 2}}, 72, 72));
  SiegelSeries b(poly({{k1, 1}, {Key3::make(24, 0, 0), 3}}, 72, 72));
  auto d = a.first_difference(b);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, Key3::make(24, 0, 0));
  EXPECT_FALSE(a.first_difference(a).has_value());
}

TEST(Siegel, SubstituteZW) {
  SiegelSeries a(poly({{Key3::make(24, 4, 24), 5}}, 48, 48));
  SiegelSeries b = substitute_zw(a, 2, 3);
  EXPECT_EQ(b.series.coefficient(Key3::make(24, 8, 72)), 5);
  EXPECT_EQ(b.sprec(), 144);
  EXPECT_EQ(b.qprec(), 48);
}

TEST(Siegel, JsonRoundTrip) {
  SiegelSeries a = y_factor(-4, -2) * SiegelSeries(poly({{k1, 1}, {Key3::make(6, 2, 6), -7}}, 48, 48), 10, 2);
  a.character_order = 4;
  Json j = to_json(a);
  EXPECT_TRUE(j.contains("y_factors"));
  SiegelSeries b = siegel_from_json(j);
  EXPECT_EQ(b.series, a.series);
  EXPECT_EQ(b.y_factors, a.y_factors);
  EXPECT_EQ(b.weight2, a.weight2);
  EXPECT_EQ(b.character_order, 4);
  EXPECT_EQ(b.index_t, a.index_t);
}
