#include <gtest/gtest.h>

#include <random>

#include "jacobi/generators.hpp"
#include "jacobi/reports.hpp"
#include "jacobi/specialize.hpp"

using namespace jacobi;

namespace {

constexpr std::int64_t kQ4 = 24 * 4;

Series2 constant(long c) {
  Series2 s(kInf);
  s.add_term(Key2{0, 0}, Integer(c));
  return s;
}

} // namespace

TEST(Torsion, ValueAtZeroIsConstant) {
  const std::vector<std::pair<Generator, long>> cases{
      {Generator::Phi01, 12}, {Generator::Phi02, 6}, {Generator::Phi03, 4}, {Generator::Phi04, 3}};
  for (auto [gen, c] : cases) {
    Series2 v = specialize_torsion(generator(gen, kQ4), 1);
    EXPECT_TRUE(v.agrees_with(constant(c).truncated(v.qprec()))) << generator_name(gen);
  }
}

TEST(Torsion, HalfPeriodOfPhi02) {
  Series2 v = specialize_torsion(generator(Generator::Phi02, kQ4), 2);
  EXPECT_EQ(v.coefficient(Key2{0, 0}), 2);
}

TEST(Torsion, RejectsUnsupportedOrder) {
  EXPECT_THROW(specialize_torsion(generator(Generator::Phi01, kQ4), 5), ValidationError);
}

TEST(Center, PrecisionDrops) {
  Series2 c = specialize_center(generator(Generator::Phi01, kQ4));
  EXPECT_LT(c.qprec(), kQ4);
  EXPECT_GT(c.qprec(), 0);
}

TEST(SpecialValues, AllIdentitiesHold) {
  Report r = special_value_suite(24 * 6);
  EXPECT_FALSE(r.empty());
  for (const auto &f : r) EXPECT_TRUE(f.pass) << f.check << ": " << f.detail;
}

TEST(Divisibility, RandomFormsPass) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 24; ++i) {
    JacobiForm f = random_form(1 + i % 6, 24 * 5, rng);
    for (const auto &fd : divisibility_report(f)) EXPECT_TRUE(fd.pass) << i << " " << fd.check << ": " << fd.detail;
  }
}

TEST(Divisibility, ReportSerializes) {
  Report r = divisibility_report(generator(Generator::Phi01, kQ4).scaled(2), true);
  Json j = to_json(r);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), r.size());
  EXPECT_TRUE(all_pass(r));
}
