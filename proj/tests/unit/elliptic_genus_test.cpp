#include <gtest/gtest.h>

#include "jacobi/elliptic_genus.hpp"
#include "jacobi/generators.hpp"
#include "jacobi/reports.hpp"

using namespace jacobi;

namespace {

constexpr std::int64_t kQ3 = 24 * 3;

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

} // namespace

TEST(Invariants, SerreSymmetryEnforced) {
  EXPECT_NO_THROW(CYInvariants(2, ints({2, -20, 2})));
  EXPECT_THROW(CYInvariants(2, ints({2, -20, 3})), ValidationError);
  EXPECT_THROW(CYInvariants(3, ints({0, 1, 1, 0})), ValidationError);
  EXPECT_THROW(CYInvariants(3, ints({0, 1, -1})), ValidationError);
}

TEST(Invariants, FromHodgeK3) {
  std::vector<std::vector<Integer>> h{ints({1, 0, 1}), ints({0, 20, 0}), ints({1, 0, 1})};
  CYInvariants k3 = CYInvariants::from_hodge(2, h);
  EXPECT_EQ(k3.chi, ints({2, -20, 2}));
  EXPECT_EQ(k3.euler(), 24);
}

TEST(Invariants, FromHodgeQuintic) {
  std::vector<std::vector<Integer>> h{ints({1, 0, 0, 1}), ints({0, 1, 101, 0}), ints({0, 101, 1, 0}),
                                      ints({1, 0, 0, 1})};
  CYInvariants q = CYInvariants::from_hodge(3, h);
  EXPECT_EQ(q.euler(), -200);
  EXPECT_EQ(q.chi, ints({0, 100, -100, 0}));
}

TEST(Invariants, JsonForms) {
  Json a = Json::parse(R"({"d": 2, "chi": [2, "-20", 2]})");
  EXPECT_EQ(cy_from_json(a).chi, ints({2, -20, 2}));
  Json b = Json::parse(R"({"d": 2, "hodge": [[1,0,1],[0,20,0],[1,0,1]]})");
  EXPECT_EQ(cy_from_json(b).euler(), 24);
  EXPECT_THROW(cy_from_json(Json::parse(R"({"d": 2})")), ParseError);
  EXPECT_THROW(cy_from_json(Json::parse(R"({"d": 2, "chi": [2, "x", 2]})")), ParseError);
  EXPECT_EQ(cy_from_json(to_json(cy_from_json(a))).chi, ints({2, -20, 2}));
}

TEST(Genus, K3IsTwicePhi01) {
  JacobiForm g = elliptic_genus(CYInvariants(2, ints({2, -20, 2})), kQ3);
  EXPECT_TRUE(same_form(g, generator(Generator::Phi01, kQ3).scaled(2)));
  ASSERT_TRUE(g.poly.has_value());
  EXPECT_EQ(g.poly->to_string(true), "2*Phi1");
}

TEST(Genus, EnriquesIsPhi01) {
  JacobiForm g = elliptic_genus(CYInvariants(2, ints({1, -10, 1})), kQ3);
  EXPECT_TRUE(same_form(g, generator(Generator::Phi01, kQ3)));
}

TEST(Genus, ThreefoldIsMultipleOfPhi032) {
  JacobiForm g = elliptic_genus(CYInvariants(3, ints({0, 100, -100, 0})), kQ3);
  EXPECT_TRUE(same_form(g, generator(Generator::Phi032, kQ3).scaled(-100)));
}

TEST(Genus, FourfoldRow) {
  CYInvariants inv(4, ints({2, -4, 60, -4, 2}));
  JacobiForm g = elliptic_genus(inv, kQ3);
  EXPECT_EQ(g.index(), 2);
  EXPECT_EQ(chi_y_polynomial(g).chi, inv.chi);
}

TEST(Genus, ChiYRoundTrip) {
  CYInvariants inv(6, ints({2, -6, 51, -254, 51, -6, 2}));
  for (const auto &r : relation_check(inv)) EXPECT_TRUE(r.pass) << r.relation;
  EXPECT_EQ(chi_y_polynomial(elliptic_genus(inv, kQ3)).chi, inv.chi);
}

TEST(Genus, InconsistentChiRejected) {
  EXPECT_THROW(elliptic_genus(CYInvariants(4, ints({1, 0, 1, 0, 1})), kQ3), IdentityError);
}

TEST(Genus, DimensionTwelveNeedsXi6) {
  std::vector<Integer> chi(13, Integer(0));
  EXPECT_THROW(elliptic_genus(CYInvariants(12, chi), kQ3), ValidationError);
  EXPECT_THROW(elliptic_genus(CYInvariants(2, ints({2, -20, 2})), kQ3, Integer(1)), ValidationError);
  JacobiForm g = elliptic_genus(CYInvariants(12, chi), kQ3, Integer(1));
  EXPECT_TRUE(same_form(g, generator(Generator::Xi06, kQ3)));
}

TEST(Genus, RangeChecked) {
  EXPECT_THROW(elliptic_genus(CYInvariants(1, ints({0, 0})), kQ3), ValidationError);
  EXPECT_THROW(elliptic_genus(CYInvariants(14, std::vector<Integer>(15, Integer(0))), kQ3), ValidationError);
}

TEST(Relations, K3Passes) {
  for (const auto &r : relation_check(CYInvariants(2, ints({2, -20, 2})))) EXPECT_TRUE(r.pass) << r.relation;
}

TEST(Relations, EulerCongruenceInDimensionFour) {
  bool found = false;
  for (const auto &r : relation_check(CYInvariants(4, ints({1, 0, 1, 0, 1}))))
    if (r.relation.find("mod 6") != std::string::npos) {
      found = true;
      EXPECT_FALSE(r.pass);
    }
  EXPECT_TRUE(found);
}

TEST(Divisibility, CYReportForK3) {
  EXPECT_TRUE(all_pass(divisibility_report(CYInvariants(2, ints({2, -20, 2})), kQ3)));
}
