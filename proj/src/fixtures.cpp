#include "planegerm/fixtures.hpp"

#include <initializer_list>
#include <tuple>

#include "planegerm/errors.hpp"

namespace planegerm {

namespace {

using Term = std::tuple<int, int, Rat>;

Jet2 poly(int r, std::initializer_list<Term> terms) {
  Jet2 p(r);
  for (const auto& [i, j, c] : terms) p.add(i, j, c);
  return p;
}

PlaneGermJet germ(int r, std::initializer_list<Term> f2) { return {Jet2::x(r), poly(r, f2)}; }

Rat pw(const Rat& a, int n) { return rat_pow(a, n); }

Fixture start(std::string name, int r, std::vector<std::pair<std::string, Rat>> params) {
  Fixture fx;
  fx.name = std::move(name);
  fx.order = r;
  fx.params = std::move(params);
  return fx;
}

}  // namespace

Fixture make_fixture(FixtureKind kind, const Rat& c, const Rat& d, const Rat& e, const Rat& g) {
  Fixture fx;
  switch (kind) {
    case FixtureKind::KillY7Type8: {
      int r = 9;
      fx = start("type 8: y^7 removed from (x, xy + y^6 + c y^7 + d y^8 + e y^9)", r, {{"c", c}, {"d", d}, {"e", e}});
      fx.lhs = germ(r, {{1, 1, 1}, {0, 6, 1}, {0, 7, c}, {0, 8, d}, {0, 9, e}});
      fx.rhs = germ(r, {{1, 1, 1}, {0, 6, 1}, {0, 8, d - Rat(3, 5) * c * c},
                        {0, 9, e - Rat(7, 5) * c * d + Rat(14, 25) * pw(c, 3)}});
      fx.substitution = {
          poly(r, {{1, 0, 1}, {1, 1, c / 5}, {0, 6, c / 5}, {0, 8, -Rat(3, 25) * pw(c, 3) + c * d / 5},
                   {0, 9, Rat(14, 125) * pw(c, 4) - Rat(7, 25) * c * c * d + c * e / 5}}),
          poly(r, {{0, 1, 1}, {0, 2, -c / 5}, {0, 3, c * c / 25}, {0, 4, -pw(c, 3) / 125}, {0, 5, pw(c, 4) / 625},
                   {0, 6, -pw(c, 5) / 3125}, {0, 7, pw(c, 6) / 15625}, {0, 8, -pw(c, 7) / 78125},
                   {0, 9, 2 * pw(c, 8) / 390625}})};
      fx.target = {poly(r, {{1, 0, 1}, {0, 1, -c / 5}}), Jet2::y(r)};
      break;
    }
    case FixtureKind::KillY8Type10: {
      int r = 9;
      fx = start("type 10: y^8 removed from (x, xy + y^7 + c y^8 + d y^9)", r, {{"c", c}, {"d", d}});
      fx.lhs = germ(r, {{1, 1, 1}, {0, 7, 1}, {0, 8, c}, {0, 9, d}});
      fx.rhs = germ(r, {{1, 1, 1}, {0, 7, 1}, {0, 9, d - Rat(7, 12) * c * c}});
      fx.substitution = {
          poly(r, {{1, 0, 1}, {1, 1, c / 6}, {0, 7, c / 6}, {0, 9, -Rat(7, 72) * pw(c, 3) + c * d / 6}}),
          poly(r, {{0, 1, 1}, {0, 2, -c / 6}, {0, 3, c * c / 36}, {0, 4, -pw(c, 3) / 216}, {0, 5, pw(c, 4) / 1296},
                   {0, 6, -pw(c, 5) / 7776}, {0, 7, pw(c, 6) / 46656}, {0, 8, -pw(c, 7) / 279936},
                   {0, 9, -5 * pw(c, 8) / 93312}})};
      fx.target = {poly(r, {{1, 0, 1}, {0, 1, -c / 6}}), Jet2::y(r)};
      break;
    }
    case FixtureKind::KillY6Type11: {
      int r = 7;
      fx = start("type 11: y^6 removed from (x, xy^2 + y^4 + c y^6 + d y^7)", r, {{"c", c}, {"d", d}});
      fx.lhs = germ(r, {{1, 2, 1}, {0, 4, 1}, {0, 6, c}, {0, 7, d}});
      fx.rhs = germ(r, {{1, 2, 1}, {0, 4, 1}, {0, 7, d}});
      fx.substitution = {poly(r, {{1, 0, 1}, {1, 2, c}, {0, 4, c}, {0, 7, c * d}}),
                         poly(r, {{0, 1, 1}, {0, 3, -c / 2}, {0, 5, Rat(3, 8) * c * c}, {0, 7, -Rat(9, 16) * pw(c, 3)}})};
      fx.target = {poly(r, {{1, 0, 1}, {0, 1, -c}}), Jet2::y(r)};
      break;
    }
    case FixtureKind::KillY8Type11_9: {
      int r = 9;
      fx = start("type 11_9: y^8 removed from (x, xy^2 + y^4 + c y^8 + d y^9)", r, {{"c", c}, {"d", d}});
      fx.lhs = germ(r, {{1, 2, 1}, {0, 4, 1}, {0, 8, c}, {0, 9, d}});
      fx.rhs = germ(r, {{1, 2, 1}, {0, 4, 1}, {0, 9, d}});
      fx.substitution = {
          poly(r, {{1, 0, 1}, {2, 2, -c / 2}, {1, 4, -c / 2}, {3, 4, c * c / 4}, {2, 6, c * c / 2}, {1, 8, c * c / 4}}),
          poly(r, {{0, 1, 1}, {1, 3, c / 4}, {0, 5, -c / 4}, {2, 5, -c * c / 32}, {1, 7, -c * c / 16},
                   {0, 9, -Rat(5, 8) * c * c}})};
      fx.target = {poly(r, {{1, 0, 1}, {1, 1, c / 2}}), Jet2::y(r)};
      break;
    }
    case FixtureKind::KillXY4Type16: {
      int r = 5;
      fx = start("type 16/17: xy^4 removed from (x, x^2y + y^4 + c xy^4 + d y^5)", r, {{"c", c}, {"d", d}});
      fx.lhs = germ(r, {{2, 1, 1}, {0, 4, 1}, {1, 4, c}, {0, 5, d}});
      fx.rhs = germ(r, {{2, 1, 1}, {0, 4, 1}, {0, 5, d}});
      fx.substitution = {Jet2::x(r), poly(r, {{0, 1, 1}, {1, 1, -c / 3}})};
      fx.target = {Jet2::x(r), poly(r, {{0, 1, 1}, {1, 1, c / 3}, {2, 1, c * c / 9}, {3, 1, pw(c, 3) / 27}})};
      break;
    }
    case FixtureKind::KillXY5Type18: {
      if (d == Rat(3, 2)) throw DomainError("the xy^5 removal needs d != 3/2");
      int r = 6;
      fx = start("type 18: xy^5 removed from (x, x^2y + xy^3 + d y^5 + e xy^5 + g y^6)", r, {{"d", d}, {"e", e}, {"g", g}});
      Rat k = 3 - 2 * d;
      fx.lhs = germ(r, {{2, 1, 1}, {1, 3, 1}, {0, 5, d}, {1, 5, e}, {0, 6, g}});
      fx.rhs = germ(r, {{2, 1, 1}, {1, 3, 1}, {0, 5, d}, {0, 6, g}});
      fx.substitution = {Jet2::x(r), poly(r, {{0, 1, 1}, {1, 1, e / (2 * k)}, {2, 1, e * e / (4 * k * k)},
                                             {3, 1, pw(e, 3) / (8 * pw(k, 3))}, {0, 3, -e / k},
                                             {1, 3, -5 * e * e / (4 * k * k)}})};
      fx.target = {Jet2::x(r), poly(r, {{0, 1, 1}, {1, 1, e / (2 * (2 * d - 3))}})};
      break;
    }
  }
  return fx;
}

std::vector<Fixture> reference_fixtures() {
  std::vector<Fixture> out;
  const std::vector<std::tuple<Rat, Rat, Rat, Rat>> params = {
      {1, 2, -1, 3}, {-2, Rat(1, 2), 3, -1}, {Rat(3, 7), -4, 2, 5}};
  const FixtureKind kinds[] = {FixtureKind::KillY7Type8,    FixtureKind::KillY8Type10,  FixtureKind::KillY6Type11,
                               FixtureKind::KillY8Type11_9, FixtureKind::KillXY4Type16, FixtureKind::KillXY5Type18};
  for (auto k : kinds)
    for (const auto& [c, d, e, g] : params) out.push_back(make_fixture(k, c, d, e, g));
  out.push_back(make_fixture(FixtureKind::KillY8Type10, 6, 0));
  out.push_back(make_fixture(FixtureKind::KillY6Type11, 2, 1));
  return out;
}

PlaneGermJet transform(const Fixture& fx) { return compose(fx.target, compose(fx.lhs, fx.substitution)); }

}  // namespace planegerm
