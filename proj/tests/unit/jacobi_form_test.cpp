#include <gtest/gtest.h>

#include "jacobi/generator_polynomial.hpp"
#include "jacobi/generators.hpp"
#include "jacobi/jacobi_form.hpp"

using namespace jacobi;

namespace {

constexpr std::int64_t kQ3 = 24 * 3;

// y^l coefficient of the q^n row for integral l.
Integer at(const JacobiForm &f, std::int64_t n, std::int64_t l) { return f.coeff(n, 2 * l); }

} // namespace

TEST(Generators, LeadingRows) {
  auto p1 = generator(Generator::Phi01, kQ3);
  EXPECT_EQ(at(p1, 0, 0), 10);
  EXPECT_EQ(at(p1, 0, 1), 1);
  EXPECT_EQ(at(p1, 1, 0), 108);
  EXPECT_EQ(at(p1, 1, 1), -64);
  EXPECT_EQ(at(p1, 1, 2), 10);

  auto p2 = generator(Generator::Phi02, kQ3);
  EXPECT_EQ(at(p2, 0, 0), 4);
  EXPECT_EQ(at(p2, 1, 0), 16);
  EXPECT_EQ(at(p2, 1, 2), -8);
  EXPECT_EQ(at(p2, 1, 3), 1);

  auto p3 = generator(Generator::Phi03, kQ3);
  EXPECT_EQ(at(p3, 0, 0), 2);
  EXPECT_EQ(at(p3, 1, 3), -2);

  auto p4 = generator(Generator::Phi04, kQ3);
  EXPECT_EQ(at(p4, 0, 0), 1);
  EXPECT_EQ(at(p4, 1, 4), -1);
  EXPECT_EQ(at(p4, 1, 2), 0);
}

TEST(Generators, WeightsAndIndices) {
  auto p3 = generator(Generator::Phi03, kQ3);
  EXPECT_EQ(p3.weight2, 0);
  EXPECT_EQ(p3.index(), 3);
  auto h = generator(Generator::Phi032, kQ3);
  EXPECT_EQ(h.index2, 3);
  EXPECT_FALSE(h.integral_index());
  EXPECT_EQ(h.series.coefficient(Key2{0, 2}), 1);
  EXPECT_EQ(h.series.coefficient(Key2{24, 10}), -1);
  auto x = generator(Generator::Xi06, kQ3);
  EXPECT_EQ(x.series.min_nq(), 24);
  EXPECT_EQ(at(x, 1, 0), 924);
  EXPECT_EQ(at(x, 1, 6), 1);
}

TEST(Generators, AllAreSymmetricWeakForms) {
  for (auto g : {Generator::PhiM1Half, Generator::Phi032, Generator::Phi01, Generator::Phi02, Generator::Phi03,
                 Generator::Phi04, Generator::Phi06, Generator::Phi08, Generator::Phi012, Generator::Xi06}) {
    auto f = generator(g, kQ3);
    EXPECT_NO_THROW(f.validate_weak()) << generator_name(g);
  }
  EXPECT_TRUE(generator(Generator::Phi01, kQ3).is_symmetric());
}

TEST(Generators, NameLookup) {
  EXPECT_EQ(generator_from_name("phi02"), Generator::Phi02);
  EXPECT_EQ(generator_from_name("xi06"), Generator::Xi06);
  EXPECT_THROW(generator_from_name("phi99"), ParseError);
}

TEST(Forms, IndexAddsUnderProduct) {
  auto p1 = generator(Generator::Phi01, kQ3), p2 = generator(Generator::Phi02, kQ3);
  auto p = p1 * p2;
  EXPECT_EQ(p.index(), 3);
  EXPECT_EQ(at(p, 0, 0), 42);
  EXPECT_EQ(at(p, 0, 3), 0);
  EXPECT_EQ(at(p, 0, 2), 1);
}

TEST(Forms, TorsionRelation) {
  auto p1 = generator(Generator::Phi01, kQ3), p2 = generator(Generator::Phi02, kQ3),
       p3 = generator(Generator::Phi03, kQ3), p4 = generator(Generator::Phi04, kQ3);
  EXPECT_TRUE(same_form(p1 * p3 - p2 * p2, p4.scaled(4)));
}

TEST(Forms, ScaleZMultipliesIndex) {
  auto p1 = generator(Generator::Phi01, kQ3);
  auto s = scale_z(p1, 2);
  EXPECT_EQ(s.index(), 4);
  EXPECT_EQ(at(s, 0, 2), 1);
  EXPECT_EQ(at(s, 0, 1), 0);
  EXPECT_EQ(at(s, 1, 4), 10);
}

TEST(Forms, JsonRoundTrip) {
  auto f = generator(Generator::Phi03, kQ3).scaled(-7);
  auto g = jacobi_form_from_json(to_json(f));
  EXPECT_TRUE(same_form(f, g));
  EXPECT_EQ(g.index2, f.index2);
  Json bad = to_json(f);
  bad.erase("index2");
  EXPECT_THROW(jacobi_form_from_json(bad), ParseError);
}

TEST(Polynomial, ParseAndRender) {
  auto p = GeneratorPolynomial::parse("Phi1^2 - 24*Phi2");
  EXPECT_EQ(p.index(), 2);
  EXPECT_TRUE(p.is_integral());
  EXPECT_EQ(p.to_string(true), "Phi1^2-24*Phi2");
  EXPECT_THROW(GeneratorPolynomial::parse("Phi5"), ParseError);
  EXPECT_THROW(GeneratorPolynomial::parse("Phi1 +"), ParseError);
}

TEST(Polynomial, ReductionRemovesPhi1Phi3) {
  auto p = GeneratorPolynomial::parse("1/4*Phi1*Phi3 - 1/4*Phi2^2");
  EXPECT_FALSE(p.is_integral());
  auto r = p.integral_form();
  EXPECT_EQ(r, GeneratorPolynomial::symbol(4));
  EXPECT_THROW(GeneratorPolynomial::parse("1/2*Phi2").integral_form(), DivisibilityError);
}

TEST(Polynomial, EvaluateMatchesProducts) {
  auto p = evaluate(GeneratorPolynomial::parse("Phi1*Phi2 - 15*Phi3"), kQ3);
  auto q = generator(Generator::Phi01, kQ3) * generator(Generator::Phi02, kQ3) -
           generator(Generator::Phi03, kQ3).scaled(15);
  EXPECT_TRUE(same_form(p, q));
}
