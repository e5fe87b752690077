#include <gtest/gtest.h>

#include "jacobi/generators.hpp"
#include "jacobi/lifts.hpp"

using namespace jacobi;

namespace {

constexpr std::int64_t kQ = 24 * 8;

JacobiForm g(Generator x, std::int64_t qp = kQ) { return generator(x, qp); }

void expect_same(const SiegelSeries &a, const SiegelSeries &b) {
  auto d = a.first_difference(b);
  EXPECT_FALSE(d.has_value()) << "first difference at " << key_string(*d);
}

} // namespace

TEST(Abc, Generators) {
  auto e1 = abc_exponents(g(Generator::Phi01).scaled(2));
  EXPECT_EQ(e1.a, Rational(1));
  EXPECT_EQ(e1.b, Rational(1));
  EXPECT_EQ(e1.c, Rational(1));
  auto e2 = abc_exponents(g(Generator::Phi02));
  EXPECT_EQ(e2.a, Rational(1, 4));
  EXPECT_EQ(e2.b, Rational(1, 2));
  EXPECT_EQ(e2.c, Rational(1, 2));
  auto e3 = abc_exponents(g(Generator::Phi03));
  EXPECT_EQ(e3.a, Rational(1, 6));
}

TEST(ExpLift, LeadingMonomialAndPrecision) {
  SiegelSeries d = exp_lift(g(Generator::Phi02), 3, 3);
  EXPECT_EQ(d.qprec(), 6 + 72);
  EXPECT_EQ(d.sprec(), 12 + 72);
  EXPECT_EQ(d.series.coefficient(Key3::make(6, 2, 12)), 1);
  EXPECT_EQ(d.y_factors.at(-4), 1);
}

TEST(ExpLift, NeedsEnoughForm) {
  JacobiForm short_form = g(Generator::Phi02, 48);
  EXPECT_EQ(exp_lift_needed_order(short_form, 3, 5), 4);
  EXPECT_THROW(exp_lift(short_form, 3, 5), PrecisionError);
  EXPECT_THROW(exp_lift(g(Generator::Phi032), 2, 2), ValidationError);
}

TEST(ExpLift, Delta2Sum) {
  expect_same(exp_lift(g(Generator::Phi02), 3, 3), arithmetic_lift(ArithmeticLift::Delta2, 4, 4));
}

TEST(ExpLift, Delta1Sum) {
  expect_same(exp_lift(g(Generator::Phi03), 3, 3), arithmetic_lift(ArithmeticLift::Delta1, 4, 4));
}

TEST(ExpLift, ThetaProduct) {
  expect_same(exp_lift(g(Generator::Phi01).scaled(2), 3, 3), theta_product(4, 4));
}

TEST(ExpLift, DeltaHalfNeedsSubstitution) {
  auto s = delta_half_substitution(3, 3);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->y_scale, 2);
  EXPECT_EQ(s->s_scale, 4);
}

TEST(ThetaConstant, EvenCharacteristics) {
  SiegelSeries t = siegel_theta_constant(0, 0, 0, 0, 2, 2);
  EXPECT_EQ(t.series.coefficient(Key3::make(0, 0, 0)), 1);
  EXPECT_EQ(t.series.coefficient(Key3::make(12, 0, 0)), 2);
  EXPECT_EQ(t.series.coefficient(Key3::make(12, 4, 12)), 2);
  EXPECT_THROW(siegel_theta_constant(1, 0, 1, 0, 2, 2), ValidationError);
}

TEST(Sqeg, FirstCoefficientIsTheGenus) {
  JacobiForm k3 = g(Generator::Phi01, 24 * 4).scaled(2);
  Series3 s = sqeg(k3, 2, 24 * 2);
  Series2 p1 = symmetric_product_genus(k3, 1, 24 * 2);
  EXPECT_TRUE(p1.agrees_with(k3.series.truncated(48)));
  EXPECT_EQ(s.sprec(), 24 * 3);
  Integer euler2 = 0;
  Series2 p2 = symmetric_product_genus(k3, 2, 24);
  for (const auto &[k, c] : p2.terms())
    if (k.nq == 0) euler2 += c;
  EXPECT_EQ(euler2, 324);
}

TEST(EForm, K3MatchesExpLift) {
  CYInvariants k3(2, {2, -20, 2});
  expect_same(e_form(k3, 3, 3), exp_lift(g(Generator::Phi01).scaled(-2), 3, 3));
}

TEST(EForm, MirrorPairMultipliesToOne) {
  CYInvariants m(3, {0, 1, -1, 0}), w(3, {0, -1, 1, 0});
  EXPECT_TRUE((e_form(m, 3, 3) * e_form(w, 3, 3)).agrees_with(SiegelSeries(Series3::one())));
}

TEST(EForm, FourfoldFactorization) {
  CYInvariants a(4, {1, 4, 6, 4, 1});
  CYInvariants b(4, {0, 3, -12, 3, 0});
  expect_same(e_form(b, 2, 2), exp_lift(g(Generator::Phi02).scaled(3), 2, 2));
  EXPECT_NO_THROW(e_form(a, 2, 2));
}

TEST(Humbert, Phi3Divisor) {
  auto d = humbert_divisor(g(Generator::Phi06, 24 * 4).scaled(-1));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].D, 1);
  EXPECT_EQ(d[0].b, 1);
  EXPECT_EQ(d[0].multiplicity, 1);
  EXPECT_EQ(d[1].b, 5);
  EXPECT_EQ(d[1].multiplicity, -1);
}

TEST(Humbert, K3) {
  auto d = humbert_divisor(g(Generator::Phi01, 24 * 2).scaled(-2));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].multiplicity, 2);
  EXPECT_EQ(humbert_multiplicity(g(Generator::Phi01, 48), 0, 1), -1);
  EXPECT_THROW(humbert_multiplicity(g(Generator::Phi01, 48), 1, 1), PrecisionError);
}

TEST(Delta11, IdentityHoldsUpToUnit) {
  Report r = delta11_identity_check(3, 3);
  for (const auto &f : r) EXPECT_TRUE(f.pass) << f.check << ": " << f.detail;
}
