#include <gtest/gtest.h>

#include "planegerm/judge.hpp"
#include "planegerm/ratfunc.hpp"
#include "planegerm/upoly.hpp"

using namespace planegerm;

static UPoly P(std::vector<Rat> c) { return UPoly(std::move(c)); }

TEST(UPoly, DivmodAndGcd) {
  UPoly a = P({-1, 0, 1});  // u^2 - 1
  UPoly b = P({1, 1});      // u + 1
  auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, P({-1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(a, P({2, 2})), P({1, 1}));
  EXPECT_EQ(square_free(P({1, 2, 1})), P({1, 1}));
}

TEST(UPoly, IsolatesRationalAndIrrationalRoots) {
  // (u - 1)(5u + 3)(u^2 - 2)
  UPoly p = P({-1, 1}) * P({3, 5}) * P({-2, 0, 1});
  auto roots = isolate_real_roots(p);
  ASSERT_EQ(roots.size(), 4u);
  EXPECT_LT(roots[0].hi, roots[1].lo);
  EXPECT_FALSE(roots[0].exact());
  EXPECT_TRUE(roots[1].exact());
  EXPECT_EQ(roots[1].lo, Rat(-3, 5));
  EXPECT_EQ(roots[2].lo, Rat(1));
  EXPECT_FALSE(roots[3].exact());
  EXPECT_LT(roots[3].lo * roots[3].lo, Rat(2));
  EXPECT_GT(roots[3].hi * roots[3].hi, Rat(2));
}

TEST(UPoly, NoRealRoots) {
  EXPECT_TRUE(isolate_real_roots(P({1, 0, 1})).empty());
  EXPECT_TRUE(isolate_real_roots(P({Rat(3, 8)})).empty());
}

TEST(UPoly, SignAtIrrationalRoot) {
  UPoly p = P({-2, 0, 1});
  auto roots = isolate_real_roots(p);
  ASSERT_EQ(roots.size(), 2u);
  const RealRoot& s2 = roots[1];
  EXPECT_EQ(sign_at_root(P({-2, 0, 1}) * P({1, 1}), p, s2), 0);
  EXPECT_EQ(sign_at_root(P({Rat(-141, 100), 1}), p, s2), 1);   // sqrt2 - 1.41
  EXPECT_EQ(sign_at_root(P({Rat(-1415, 1000), 1}), p, s2), -1);  // sqrt2 - 1.415
  EXPECT_EQ(sign_at_root(P({0, 1}), p, roots[0]), -1);
}

TEST(RatFunc, ArithmeticReduces) {
  RatFunc u = RatFunc::var();
  RatFunc one(1);
  RatFunc f = (u * u - one) / (u - one);
  EXPECT_EQ(f, u + one);
  EXPECT_TRUE((f - u - one).is_zero());
  EXPECT_EQ(f.eval(Rat(1, 2)), Rat(3, 2));
  EXPECT_THROW((one / u).eval(0), std::exception);
}

TEST(Judge, GenericRecordsCriticalAndRootJudgeDecides) {
  RatFunc u = RatFunc::var();
  GenericJudge g(Rat(1, 3));
  EXPECT_FALSE(g.is_zero(u - RatFunc(1)));
  EXPECT_EQ(g.sign(u - RatFunc(1)), -1);
  ASSERT_EQ(g.critical().size(), 1u);
  EXPECT_THROW(g.is_zero(u * RatFunc(3) - RatFunc(1)), SampleHitsRoot);

  UPoly p = P({-2, 0, 1});
  RootJudge r(p, isolate_real_roots(p)[1]);
  EXPECT_TRUE(r.is_zero(u * u - RatFunc(2)));
  EXPECT_EQ(r.sign(u - RatFunc(1)), 1);
  EXPECT_EQ(r.sign(RatFunc(1) / (u - RatFunc(2))), -1);
}
