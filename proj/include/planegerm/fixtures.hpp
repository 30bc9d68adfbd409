#pragma once

#include <string>
#include <utility>
#include <vector>

#include "planegerm/jet.hpp"

namespace planegerm {

// An explicit coordinate change taken from a reduction argument:
// target o lhs o substitution should equal rhs to the given order.
struct Fixture {
  std::string name;
  int order;
  std::vector<std::pair<std::string, Rat>> params;
  PlaneGermJet lhs, rhs;
  PlaneGermJet substitution;  // (x~, y~) as functions of (x, y)
  PlaneGermJet target;        // (X, Y) -> (X', Y')
};

enum class FixtureKind { KillY7Type8, KillY8Type10, KillY6Type11, KillY8Type11_9, KillXY4Type16, KillXY5Type18 };

Fixture make_fixture(FixtureKind kind, const Rat& c, const Rat& d, const Rat& e = 0, const Rat& g = 0);
std::vector<Fixture> reference_fixtures();
PlaneGermJet transform(const Fixture& fx);
inline bool holds(const Fixture& fx) { return transform(fx) == fx.rhs; }

}  // namespace planegerm
