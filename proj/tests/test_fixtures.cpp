#include <gtest/gtest.h>

#include "planegerm/fixtures.hpp"
#include "planegerm/normalizer.hpp"
#include "test_util.hpp"

using namespace planegerm;
using testutil::G;

TEST(Fixtures, PrintedSubstitutionsTransformAsStated) {
  auto all = reference_fixtures();
  EXPECT_GE(all.size(), 18u);
  for (const auto& fx : all) EXPECT_EQ(transform(fx), fx.rhs) << fx.name << " c=" << fx.params[0].second;
}

TEST(Fixtures, NumericInstances) {
  auto t10 = make_fixture(FixtureKind::KillY8Type10, 6, 0);
  EXPECT_EQ(t10.rhs, G(9, {{1, 1, 1}, {0, 7, 1}, {0, 9, -21}}));
  EXPECT_TRUE(holds(t10));
  auto t11 = make_fixture(FixtureKind::KillY6Type11, 2, 1);
  EXPECT_EQ(t11.rhs, G(7, {{1, 2, 1}, {0, 4, 1}, {0, 7, 1}}));
  EXPECT_TRUE(holds(t11));
  EXPECT_THROW(make_fixture(FixtureKind::KillXY5Type18, 0, Rat(3, 2), 1, 1), DomainError);
}

TEST(Fixtures, ReversedDirectionDoesNotHold) {
  auto fx = make_fixture(FixtureKind::KillY7Type8, 1, 2, -1);
  PlaneGermJet wrong = compose(invert_map(fx.target), compose(fx.lhs, invert_map(fx.substitution)));
  EXPECT_NE(wrong, fx.rhs);
}

TEST(Fixtures, EngineAgreesWithPrintedReductions) {
  ExactJudge j;
  struct Case {
    FixtureKind kind;
    SpecifiedJet cls;
    std::vector<Exponent> keep;
    int max_weight;
  };
  std::vector<Case> cases = {
      {FixtureKind::KillY7Type8, SpecifiedJet::II6, {{0, 8}, {0, 9}}, 9},
      {FixtureKind::KillY8Type10, SpecifiedJet::II7, {{0, 9}}, 9},
      {FixtureKind::KillY6Type11, SpecifiedJet::III, {{0, 7}}, 7},
  };
  for (const auto& cs : cases)
    for (Rat c : {Rat(1), Rat(-3, 2), Rat(2, 5)}) {
      auto fx = make_fixture(cs.kind, c, 3, -2);
      auto n = reduce_to_specified_jet(fx.lhs, cs.cls);
      auto model = model_monomials(cs.cls);
      ASSERT_TRUE(eliminate<Rat>(
          n,
          [&](const Exponent& e) {
            return std::find(cs.keep.begin(), cs.keep.end(), e) == cs.keep.end() &&
                   std::find(model.begin(), model.end(), e) == model.end();
          },
          cs.max_weight, j));
      // Monomials above the weight cut are not targeted; compare the pure y-tail.
      for (int k = 2; k <= fx.order; ++k) EXPECT_EQ(n.a(0, k), fx.rhs.b.coeff(0, k)) << fx.name << " c=" << c << " y^" << k;
    }
}
