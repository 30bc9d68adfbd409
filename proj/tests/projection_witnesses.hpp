#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "planegerm/projection.hpp"

namespace testutil {

using planegerm::MongeForm;
using planegerm::Rat;
using planegerm::Viewpoint;

inline MongeForm M(int order, std::initializer_list<std::tuple<int, int, Rat>> terms) {
  planegerm::Jet2 f(order);
  for (const auto& [i, j, c] : terms) f.add(i, j, c);
  return MongeForm(f);
}

struct ViewCase {
  std::string row;
  MongeForm m;
  Viewpoint p;
};

// One rational witness per row of the viewpoint table with cod G_W <= 3.
inline std::vector<ViewCase> projection_witnesses() {
  const int r = 10;
  return {
      {"1", M(r, {{1, 1, 1}, {3, 0, 1}}), {0, 0, 1}},
      {"2", M(r, {{1, 1, 1}, {3, 0, 1}}), {0, 1, 0}},
      {"3", M(r, {{1, 1, 1}, {3, 0, 1}}), {Rat(1, 2), 0, 0}},
      {"4_2", M(r, {{0, 2, 1}, {3, 0, 1}, {1, 2, 1}}), {0, 0, 0}},
      {"5", M(r, {{1, 1, 1}, {4, 0, 1}}), {Rat(1, 2), 0, 0}},
      {"4_3", M(r, {{0, 2, 1}, {3, 0, 1}, {1, 2, -1}, {0, 3, 1}}), {0, 0, 0}},
      {"6", M(r, {{1, 1, 1}, {5, 0, 1}}), {Rat(1, 3), 0, 0}},
      {"11_5", M(r, {{0, 2, 1}, {2, 1, 1}, {5, 0, 1}, {4, 0, 1}}), {0, 0, 0}},
      {"4_4", M(r, {{0, 2, 1}, {3, 0, 1}, {1, 2, -1}}), {0, 0, 0}},
      {"7", M(r, {{1, 1, 1}, {5, 0, 1}, {6, 0, 1}}), {0, 0, 0}},
      {"7", M(r, {{1, 1, 1}, {5, 0, 1}, {6, 0, 1}}), {Rat(8, 5), 0, 0}},
      {"11_7", M(r, {{0, 2, 1}, {2, 1, 1}, {4, 0, 1}, {3, 1, Rat(3, 2)}}), {0, 0, 0}},
      {"12", M(r, {{0, 2, 1}, {2, 1, 1}, {5, 0, 1}}), {0, 0, 0}},
      {"16", M(r, {{0, 2, 1}, {4, 0, 1}}), {0, 0, 0}},
      {"8", M(r, {{1, 1, 1}, {6, 0, 1}}), {0, 0, 0}},
      {"4_5", M(r, {{0, 2, 1}, {3, 0, 1}, {1, 2, -1}, {0, 4, Rat(1, 9)}, {0, 5, 1}}), {0, 0, 0}},
      {"9", M(r, {{1, 1, 1}, {6, 0, 1}, {7, 0, Rat(-2, 3)}}), {0, 0, 0}},
      {"11_9", M(r, {{0, 2, 1}, {2, 1, 1}, {4, 0, 1}, {3, 1, Rat(3, 2)}, {3, 2, Rat(123, 32)}}), {0, 0, 0}},
      {"13", M(r, {{0, 2, 1}, {2, 1, 1}, {5, 0, 1}, {6, 0, 1}}), {0, 0, 0}},
      {"17", M(r, {{0, 2, 1}, {4, 0, 1}, {5, 0, 1}}), {0, 0, 0}},
      {"19", M(r, {{0, 2, -1}, {1, 2, 1}, {4, 0, 1}, {3, 1, 1}}), {0, 0, 0}},
  };
}

// For each row, data breaking exactly one of its inequations.
inline std::vector<ViewCase> projection_controls() {
  const int r = 10;
  return {
      {"1", M(r, {{1, 1, 1}, {3, 0, 1}}), {0, 0, 0}},                       // c = 0
      {"2", M(r, {{1, 1, 1}, {3, 0, 1}}), {0, 0, 0}},                       // b = 0
      {"3", M(r, {{1, 1, 1}, {4, 0, 1}}), {Rat(1, 2), 0, 0}},               // c30 = 0
      {"4_2", M(r, {{0, 2, 1}, {2, 1, 1}, {4, 0, 1}, {5, 0, 1}}), {0, 0, 0}},  // c30 = 0
      {"5", M(r, {{1, 1, 1}, {5, 0, 1}}), {Rat(1, 2), 0, 0}},               // c40 = 0
      {"4_3", M(r, {{0, 2, 1}, {3, 0, 1}, {1, 2, -1}}), {0, 0, 0}},         // a31 = 0
      {"6", M(r, {{1, 1, 1}, {5, 0, 1}, {6, 0, 1}}), {0, 0, 0}},            // a07 - 5/8 a06^2 = 0
      {"11_5", M(r, {{0, 2, 1}, {2, 1, 1}, {4, 0, 1}, {3, 1, Rat(3, 2)}}), {0, 0, 0}},  // a05 = 0
      {"4_4", M(r, {{0, 2, 1}, {3, 0, 1}, {1, 2, -1}, {0, 4, Rat(1, 9)}, {0, 5, 1}}), {0, 0, 0}},
      {"7", M(r, {{1, 1, 1}, {6, 0, 1}}), {0, 0, 0}},                       // c50 = 0
      {"11_7", M(r, {{0, 2, 1}, {2, 1, 1}, {4, 0, 1}, {3, 1, Rat(3, 2)}, {3, 2, Rat(123, 32)}}), {0, 0, 0}},
      {"12", M(r, {{0, 2, 1}, {2, 1, 1}, {5, 0, 1}, {6, 0, 1}}), {0, 0, 0}},  // a06 = 0
      {"16", M(r, {{0, 2, 1}, {4, 0, 1}, {5, 0, 1}}), {0, 0, 0}},           // a05 = 0
      {"8", M(r, {{1, 1, 1}, {6, 0, 1}, {7, 0, Rat(-2, 3)}}), {0, 0, 0}},   // a08 - 3/5 a07^2 = 0
      {"4_5", M(r, {{0, 2, 1}, {3, 0, 1}, {1, 2, -1}, {0, 4, Rat(1, 9)}}), {0, 0, 0}},
      {"9", M(r, {{1, 1, 1}, {6, 0, 1}, {7, 0, 1}}), {0, 0, 0}},            // a09 - 7/25 a07^3 = 0
      {"11_9", M(r, {{0, 2, 1}, {2, 1, 1}, {3, 1, Rat(3, 2)}, {3, 2, Rat(123, 32)}}), {0, 0, 0}},  // eta^3 = 0
      {"13", M(r, {{0, 2, 1}, {2, 1, 1}, {6, 0, 1}}), {0, 0, 0}},           // eta^4 = 0
      {"17", M(r, {{0, 2, 1}, {5, 0, 1}}), {0, 0, 0}},                      // eta^3 = 0
      {"19", M(r, {{0, 2, -1}, {1, 2, 1}, {4, 0, 1}}), {0, 0, 0}},          // a31 = 0
  };
}

inline bool label_matches(const std::string& label, const std::string& row) {
  return label == row || label == row + "+" || label == row + "-";
}

}  // namespace testutil
