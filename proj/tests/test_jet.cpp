#include <gtest/gtest.h>

#include <random>

#include "planegerm/jet.hpp"
#include "planegerm/json_io.hpp"
#include "test_util.hpp"

using namespace planegerm;
using testutil::J;

TEST(Rat, ParseAndPrint) {
  EXPECT_EQ(parse_rat("6/4"), Rat(3, 2));
  EXPECT_EQ(to_string(Rat(3, 2)), "3/2");
  EXPECT_EQ(to_string(Rat(-4)), "-4");
  EXPECT_THROW(parse_rat("1/0"), ParseError);
  EXPECT_THROW(parse_rat("x"), ParseError);
  EXPECT_EQ(*rational_sqrt(Rat(9, 4)), Rat(3, 2));
  EXPECT_FALSE(rational_sqrt(Rat(2)));
  EXPECT_EQ(*rational_cbrt(Rat(-8, 27)), Rat(-2, 3));
}

TEST(Jet, RingOps) {
  Jet2 a = J(3, {{1, 0, 1}, {0, 1, 1}});
  Jet2 b = J(3, {{1, 0, 1}, {0, 1, -1}});
  EXPECT_EQ(a * b, J(3, {{2, 0, 1}, {0, 2, -1}}));
  EXPECT_EQ(a + Jet2(3), a);
  Jet2 u = J(2, {{0, 0, 1}, {1, 0, 1}});
  Jet2 v = J(2, {{0, 0, 1}, {1, 0, -1}, {2, 0, 1}});
  EXPECT_EQ(u * v, J(2, {{0, 0, 1}}));
  EXPECT_EQ((a + J(5, {{4, 1, 7}})).order(), 3);
}

TEST(Jet, PartialDerivative) {
  EXPECT_EQ(J(4, {{1, 1, 1}, {0, 4, 1}}).dy(), J(3, {{1, 0, 1}, {0, 3, 4}}));
  EXPECT_EQ(Jet2(3).dx(), Jet2(2));
  EXPECT_EQ(J(2, {{0, 2, 3}, {2, 0, -1}}).dy(), J(1, {{0, 1, 6}}));
  EXPECT_THROW(Jet2(0).dx(), InsufficientOrder);
}

TEST(Jet, Compose) {
  Jet2 y5 = J(7, {{0, 5, 1}});
  Jet2 s = J(7, {{0, 1, 1}, {0, 2, -1}});
  EXPECT_EQ(compose(y5, Jet2::x(7), s), J(7, {{0, 5, 1}, {0, 6, -5}, {0, 7, 10}}));
  Jet2 a = J(4, {{1, 1, 2}, {0, 3, -1}, {4, 0, 5}});
  EXPECT_EQ(compose(a, Jet2::x(4), Jet2::y(4)), a);
  EXPECT_EQ(compose(J(2, {{2, 0, 1}}), J(2, {{1, 0, 1}, {0, 1, 1}}), Jet2(2)),
            J(2, {{2, 0, 1}, {1, 1, 2}, {0, 2, 1}}));
  EXPECT_THROW(compose(a, J(4, {{0, 0, 1}}), Jet2::y(4)), DomainError);
}

TEST(Jet, InvertUnit) {
  EXPECT_EQ(invert_unit(J(3, {{0, 0, 1}, {1, 0, 1}})), J(3, {{0, 0, 1}, {1, 0, -1}, {2, 0, 1}, {3, 0, -1}}));
  EXPECT_EQ(invert_unit(J(4, {{0, 0, 5}})), J(4, {{0, 0, Rat(1, 5)}}));
  EXPECT_EQ(invert_unit(J(2, {{0, 0, Rat(1, 2)}, {1, 0, 1}})), J(2, {{0, 0, 2}, {1, 0, -4}, {2, 0, 8}}));
  EXPECT_THROW(invert_unit(J(2, {{1, 0, 1}})), NotAUnit);
}

TEST(Jet, TruncateAndCoefficient) {
  Jet2 a = J(7, {{0, 5, 1}, {0, 6, -5}, {0, 7, 10}});
  EXPECT_EQ(a.truncate(6), J(6, {{0, 5, 1}, {0, 6, -5}}));
  EXPECT_THROW(a.truncate(8), InsufficientOrder);
  Jet2 b = J(5, {{1, 1, 1}, {0, 5, 1}});
  EXPECT_EQ(b.coeff(0, 5), 1);
  EXPECT_EQ(b.coeff(2, 2), 0);
  EXPECT_THROW(b.coeff(3, 3), InsufficientOrder);
}

TEST(Jet, InvertChange) {
  CoordChangeJet id = CoordChangeJet::identity(4);
  auto inv = invert_change(id);
  EXPECT_EQ(inv.source, id.source);

  PlaneGermJet m{J(2, {{1, 0, 2}}), J(2, {{0, 1, 1}, {2, 0, 1}})};
  PlaneGermJet expect{J(2, {{1, 0, Rat(1, 2)}}), J(2, {{0, 1, 1}, {2, 0, Rat(-1, 4)}})};
  EXPECT_EQ(invert_map(m), expect);

  Rat c = 3;
  PlaneGermJet s{Jet2::x(2), J(2, {{0, 1, 1}, {0, 2, -c / 5}})};
  PlaneGermJet si{Jet2::x(2), J(2, {{0, 1, 1}, {0, 2, c / 5}})};
  EXPECT_EQ(invert_map(s), si);
  EXPECT_THROW(invert_map(PlaneGermJet{J(2, {{1, 0, 1}}), J(2, {{1, 0, 2}})}), NotInvertible);
}

TEST(Jet, RandomRoundTripsAndRingAxioms) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    CoordChangeJet ch = testutil::random_change(rng, 6, 8);
    auto inv = invert_change(ch);
    EXPECT_EQ(compose(ch.source, inv.source), PlaneGermJet::identity(6));
    EXPECT_EQ(compose(inv.source, ch.source), PlaneGermJet::identity(6));
    EXPECT_EQ(compose(ch.target, inv.target), PlaneGermJet::identity(6));
  }
  for (int trial = 0; trial < 20; ++trial) {
    Jet2 a = testutil::random_jet(rng, 5, 0, 4), b = testutil::random_jet(rng, 5, 0, 4),
         c = testutil::random_jet(rng, 5, 0, 4);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    Jet2 s1 = testutil::random_jet(rng, 5, 1, 3), s2 = testutil::random_jet(rng, 5, 1, 3);
    Jet2 t1 = testutil::random_jet(rng, 5, 1, 3), t2 = testutil::random_jet(rng, 5, 1, 3);
    // a(s(t)) == (a o s) o t
    Jet2 lhs = compose(compose(a, s1, s2), t1, t2);
    Jet2 rhs = compose(a, compose(s1, t1, t2), compose(s2, t1, t2));
    EXPECT_EQ(lhs, rhs);
    Jet2 unit = a;
    unit.set(0, 0, 3);
    Jet2 residual = invert_unit(unit) * unit - Jet2::constant(1, 5);
    EXPECT_TRUE(residual.is_zero());
  }
}

TEST(Jet, JsonRoundTrip) {
  Jet2 a = J(5, {{1, 1, Rat(-3, 7)}, {0, 5, 1}});
  EXPECT_EQ(jet_from_json(to_json(a)), a);
  EXPECT_EQ(to_json(a)["terms"][0]["c"], "1");
  PlaneGermJet f{Jet2::x(5), a};
  EXPECT_EQ(germ_from_json(to_json(f)), f);
  EXPECT_THROW(jet_from_json(json::parse(R"({"order":2,"terms":[{"i":3,"j":0,"c":"1"}]})")), ParseError);
  EXPECT_THROW(germ_from_json(json::parse(R"({"f1":{"order":2,"terms":[{"i":0,"j":0,"c":"1"}]},"f2":{"order":2,"terms":[]}})")),
               ParseError);
}
