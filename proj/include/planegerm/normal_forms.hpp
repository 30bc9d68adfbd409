#pragma once

#include <string>
#include <vector>

#include "planegerm/jet.hpp"

namespace planegerm {

struct NormalFormRow {
  std::string label;
  std::string name;  // e.g. "butterfly", empty when the type has no name
  int codimension;
  std::string formula;
  PlaneGermJet germ;
};

// The A-classification list up to codimension 6 with the sign variants
// expanded; moduli are instantiated at alpha, beta.
std::vector<NormalFormRow> normal_form_table(const Rat& alpha = 1, const Rat& beta = 2, int order = 12);

}  // namespace planegerm
