#include <gtest/gtest.h>

#include <random>

#include "planegerm/invariants.hpp"
#include "planegerm/normalizer.hpp"
#include "test_util.hpp"

using namespace planegerm;
using testutil::G;
using testutil::J;

TEST(Invariants, LambdaAndEtaPowers) {
  PlaneGermJet f = G(6, {{1, 1, 1}, {0, 5, 1}});
  EXPECT_EQ(lambda_of(f), J(5, {{1, 0, 1}, {0, 4, 5}}));
  EXPECT_EQ(corank_at_origin(f), 1);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(eta_power_lambda(f, k), 0) << k;
  EXPECT_EQ(eta_power_lambda(f, 4), 120);
  EXPECT_THROW(eta_power_lambda(G(4, {{1, 1, 1}}), 4), InsufficientOrder);
  EXPECT_EQ(corank_at_origin(PlaneGermJet{J(3, {{2, 0, 1}}), J(3, {{0, 2, 1}})}), 2);
  EXPECT_EQ(corank_at_origin(PlaneGermJet{Jet2::x(3), Jet2::y(3)}), 0);
}

TEST(Invariants, HessianOfLambda) {
  auto lips = hessian_lambda(G(3, {{0, 3, 1}, {2, 1, 1}}));
  EXPECT_EQ(lips.rank, 2);
  EXPECT_GT(sgn(lips.det), 0);
  auto beaks = hessian_lambda(G(3, {{0, 3, 1}, {2, 1, -1}}));
  EXPECT_LT(sgn(beaks.det), 0);
  EXPECT_EQ(hessian_lambda(G(4, {{0, 3, 1}})).rank, 1);
  EXPECT_EQ(hessian_lambda(G(4, {{0, 4, 1}, {3, 1, 1}})).rank, 0);
}

TEST(Normalizer, ScalesTheSpecifiedJet) {
  PlaneGermJet f = G(5, {{1, 1, 2}, {0, 5, 1}});
  auto n = reduce_to_specified_jet(f, SpecifiedJet::II5);
  EXPECT_EQ(n.germ, G(5, {{1, 1, 1}, {0, 5, 1}}));
  EXPECT_EQ(apply_change(f, n.record.change()), n.germ);
}

TEST(Normalizer, PrenormalizeSwapsAndStraightens) {
  PlaneGermJet f{J(4, {{0, 1, 1}}), J(4, {{1, 1, 1}, {3, 0, 1}})};
  auto [g, ch] = prenormalize(f);
  EXPECT_EQ(g.a, Jet2::x(4));
  EXPECT_EQ(g.b, J(4, {{1, 1, 1}, {0, 3, 1}}));
  EXPECT_EQ(apply_change(f, ch), g);
  PlaneGermJet swapped{J(4, {{1, 1, 1}}), J(4, {{1, 0, 1}, {0, 2, 1}})};
  auto [g2, ch2] = prenormalize(swapped);
  EXPECT_EQ(g2.a, Jet2::x(4));
  EXPECT_EQ(apply_change(swapped, ch2), g2);
}

TEST(Normalizer, IdempotentOnNormalForms) {
  PlaneGermJet f = G(7, {{1, 1, 1}, {0, 5, 1}, {0, 7, 3}});
  auto n = reduce_to_specified_jet(f, SpecifiedJet::II5);
  EXPECT_EQ(n.germ, f);
  EXPECT_EQ(n.record.change().source, PlaneGermJet::identity(7));
  EXPECT_EQ(n.record.change().target, PlaneGermJet::identity(7));
}

TEST(Normalizer, ExtendedReductionExposesTheInvariant) {
  auto n = reduce_to_specified_jet(G(7, {{1, 1, 1}, {0, 5, 1}, {0, 6, 8}}), SpecifiedJet::II5);
  ExactJudge j;
  bool ok = eliminate<Rat>(n, [](const Exponent& e) { return !(e.i == 0 && e.j == 7); }, 7, j);
  ASSERT_TRUE(ok);
  EXPECT_EQ(n.a(0, 6), 0);
  EXPECT_EQ(n.a(0, 7), -40);
}

TEST(Normalizer, ObstructedEliminationReportsFailure) {
  ExactJudge j;
  auto all_low = [](const Exponent& e) { return e.degree() <= 7; };
  auto n = reduce_to_specified_jet(G(7, {{1, 2, 1}, {0, 4, 1}, {0, 6, 1}}), SpecifiedJet::III);
  EXPECT_TRUE(eliminate<Rat>(n, all_low, 14, j));
  EXPECT_EQ(n.germ, G(7, {{1, 2, 1}, {0, 4, 1}}));
  auto m = reduce_to_specified_jet(G(7, {{1, 2, 1}, {0, 4, 1}, {0, 7, 1}}), SpecifiedJet::III);
  EXPECT_FALSE(eliminate<Rat>(m, all_low, 14, j));
}

TEST(Normalizer, RejectsWrongClass) {
  EXPECT_THROW(reduce_to_specified_jet(G(5, {{1, 1, 1}, {0, 3, 1}}), SpecifiedJet::II4), ContractViolation);
  EXPECT_THROW(reduce_to_specified_jet(G(5, {{2, 1, 1}}), SpecifiedJet::V2), NotApplicable);
  EXPECT_THROW(reduce_to_specified_jet(G(3, {{1, 1, 1}, {0, 5, 1}}), SpecifiedJet::II5), InsufficientOrder);
}

namespace {

struct Model {
  SpecifiedJet cls;
  int order;
  std::vector<testutil::T> w;
};

}  // namespace

TEST(Normalizer, RandomChangesReturnToTheSpecifiedJet) {
  std::vector<Model> models = {
      {SpecifiedJet::II4, 6, {{1, 1, 1}, {0, 4, 1}}},
      {SpecifiedJet::II6, 7, {{1, 1, 1}, {0, 6, 1}}},
      {SpecifiedJet::I2, 5, {{0, 3, 1}, {2, 1, -1}}},
      {SpecifiedJet::IStar, 6, {{0, 3, 1}, {2, 2, 1}}},
      {SpecifiedJet::III, 6, {{1, 2, 1}, {0, 4, 1}, {0, 5, 1}}},
      {SpecifiedJet::IV5, 6, {{1, 2, 1}, {0, 5, 1}}},
      {SpecifiedJet::IV6, 7, {{1, 2, 1}, {0, 6, 1}, {0, 7, 1}}},
      {SpecifiedJet::V1, 6, {{2, 1, 1}, {0, 4, 1}, {0, 5, 1}}},
      {SpecifiedJet::V2, 6, {{2, 1, 1}, {1, 3, 1}, {0, 5, 2}}},
      {SpecifiedJet::VI, 5, {{0, 4, 1}, {3, 1, 1}, {2, 2, 3}}},
  };
  std::mt19937_64 rng(11);
  for (const auto& m : models) {
    PlaneGermJet base{Jet2::x(m.order), Jet2(m.order)};
    for (const auto& t : m.w) base.b.add(t.i, t.j, t.c);
    for (int trial = 0; trial < 4; ++trial) {
      auto ch = testutil::random_change(rng, m.order, 3, 2);
      PlaneGermJet f = apply_change(base, ch);
      auto n = reduce_to_specified_jet(f, m.cls);
      EXPECT_EQ(apply_change(f, n.record.change()), n.germ) << to_string(m.cls);
      EXPECT_EQ(n.germ.a, Jet2::x(m.order));
      int M = model_degree(m.cls);
      auto model = model_monomials(m.cls);
      for (const auto& [e, c] : n.germ.b.terms()) {
        if (e.degree() > M) continue;
        bool in_model = std::find(model.begin(), model.end(), e) != model.end();
        EXPECT_TRUE(in_model) << to_string(m.cls) << " x^" << e.i << "y^" << e.j;
      }
    }
  }
}
