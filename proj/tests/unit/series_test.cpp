#include <gtest/gtest.h>

#include "jacobi/series.hpp"
#include "jacobi/series_io.hpp"
#include "jacobi/series_ops.hpp"

using namespace jacobi;

namespace {

Series2 q_poly(std::initializer_list<long> coeffs, std::int64_t qprec) {
  Series2 s(qprec);
  long n = 0;
  for (long c : coeffs) s.add_term(Key2{24 * n++, 0}, Integer(c));
  return s;
}

} // namespace

TEST(Ring, GeneralizedBinomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(-2, 3), -4);
  EXPECT_EQ(binomial(-1, 7), -1);
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(Ring, FloorDivision) {
  EXPECT_EQ(floor_div(Integer(-7), Integer(2)), -4);
  EXPECT_EQ(floor_mod(Integer(-7), Integer(2)), 1);
}

TEST(Ring, GaussianUnits) {
  EXPECT_EQ(RingTraits<Gaussian>::root_of_unity(4, 1), Gaussian(0, 1));
  EXPECT_EQ(RingTraits<Gaussian>::root_of_unity(48, 36), Gaussian(0, -1));
  EXPECT_THROW(RingTraits<Gaussian>::root_of_unity(3, 1), RingPromotionError);
}

TEST(Ring, CyclotomicThirdRoots) {
  Cyclotomic z = Cyclotomic::root_power(3, 1);
  Cyclotomic sum = z * z + z + Cyclotomic(3, 1);
  EXPECT_EQ(sum, Cyclotomic(3, 0));
}

TEST(Series, PrecisionOfProduct) {
  Series2 a = q_poly({1, 1}, 48);
  Series2 b = q_poly({0, 1, 0}, 72);
  Series2 p = a * b;
  EXPECT_EQ(p.qprec(), 72);
  EXPECT_EQ(p.coefficient(Key2{24, 0}), 1);
  EXPECT_EQ(p.coefficient(Key2{48, 0}), 1);
}

TEST(Series, GeometricInverse) {
  Series2 one_minus_q = q_poly({1, -1}, kInf);
  Series2 inv = one_minus_q.truncated(24 * 6).inverse();
  for (int n = 0; n < 6; ++n) EXPECT_EQ(inv.coefficient(Key2{24 * n, 0}), 1) << n;
  EXPECT_EQ(inv.qprec(), 24 * 6);
}

TEST(Series, InverseNeedsUnitMonomial) {
  Series2 s(48);
  s.add_term(Key2{0, 4}, Integer(1));
  s.add_term(Key2{0, 0}, Integer(-1));
  EXPECT_THROW(s.inverse(), NonInvertibleError);
  EXPECT_THROW(q_poly({2, 1}, 48).inverse(), NonInvertibleError);
}

TEST(Series, ExactDivisionRecoversFactor) {
  Series2 a(kInf);
  a.add_term(Key2{0, 0}, Integer(1));
  a.add_term(Key2{0, 4}, Integer(-1));
  Series2 b = q_poly({1, 1}, kInf);
  Series2 q = (a * b).exact_div(b);
  EXPECT_EQ(q, a);
  Series2 c = q_poly({1, 0, 1}, kInf);
  EXPECT_THROW((a * b).exact_div(c), InexactDivisionError);
}

TEST(Series, PentagonalNumbers) {
  std::vector<ProductFactor<Key2>> f;
  for (int n = 1; n < 20; ++n) f.push_back({Key2{24 * n, 0}, 1});
  Series2 p = product_expand<Key2>(f, 24 * 20);
  std::map<int, int> expect{{0, 1}, {1, -1}, {2, -1}, {5, 1}, {7, 1}, {12, -1}, {15, -1}};
  for (int n = 0; n < 20; ++n) {
    int e = expect.count(n) ? expect[n] : 0;
    EXPECT_EQ(p.coefficient(Key2{24 * n, 0}), e) << "q^" << n;
  }
}

TEST(Series, PureYFactorMustBeFinite) {
  std::vector<ProductFactor<Key2>> f{{Key2{0, -4}, -1}};
  EXPECT_THROW(product_expand<Key2>(f, 48), ValidationError);
}

TEST(Series, SubstitutionScalesPrecision) {
  Series2 a = q_poly({1, 2, 3}, 72);
  ExponentMap m{{{2, 0}, {0, 1}}, {}};
  Series2 b = monomial_substitute<Key2>(a, m);
  EXPECT_EQ(b.qprec(), 144);
  EXPECT_EQ(b.coefficient(Key2{48, 0}), 2);
  EXPECT_EQ(b.coefficient(Key2{24, 0}), 0);
}

TEST(Series, RootTwistOnY) {
  Series<Key2, Gaussian> a(kInf);
  a.add_term(Key2{0, 4}, Gaussian(1));
  auto b = monomial_substitute<Key2>(a, ExponentMap{{{1, 0}, {0, 1}}, {}}, root_twist<Key2, Gaussian>(16, {0, 1}));
  EXPECT_EQ(b.coefficient(Key2{0, 4}), Gaussian(0, 1));
}

TEST(SeriesIo, JsonRoundTrip) {
  Series3 s(48, 72);
  s.add_term(Key3::make(6, 2, 12), Integer(-3));
  s.add_term(Key3::make(30, -6, 12), Integer("123456789012345678901234567890"));
  Json j = to_json(s);
  EXPECT_EQ((series_from_json<Key3, Integer>(j)), s);
  EXPECT_EQ(j["terms"][0][3], "-3");
}

TEST(SeriesIo, RejectsMalformedPayloads) {
  Json j = to_json(q_poly({1, 2}, 48));
  Json bad = j;
  bad["den"] = {12, 4};
  EXPECT_THROW((series_from_json<Key2, Integer>(bad)), ParseError);
  bad = j;
  bad["terms"].push_back(Json::array({0, 0, "5"}));
  EXPECT_THROW((series_from_json<Key2, Integer>(bad)), ParseError);
  bad = j;
  bad["terms"].push_back(Json::array({96, 0, "5"}));
  EXPECT_THROW((series_from_json<Key2, Integer>(bad)), ParseError);
  bad = j;
  bad["ring"] = "gaussian";
  EXPECT_THROW((series_from_json<Key2, Integer>(bad)), RingMismatchError);
}

TEST(SeriesIo, ExponentText) {
  EXPECT_EQ(exponent_string(6, 24), "(1/4)");
  EXPECT_EQ(exponent_string(-48, 24), "-2");
}
