#include "planegerm/normal_forms.hpp"

#include <initializer_list>
#include <tuple>

namespace planegerm {

namespace {

using Term = std::tuple<int, int, Rat>;

PlaneGermJet second(int order, std::initializer_list<Term> terms) {
  PlaneGermJet g{Jet2::x(order), Jet2(order)};
  for (const auto& [i, j, c] : terms) g.b.add(i, j, c);
  return g;
}

}  // namespace

std::vector<NormalFormRow> normal_form_table(const Rat& a, const Rat& b, int r) {
  const Rat one(1), m1(-1);
  return {
      {"1", "regular", 0, "(x, y)", second(r, {{0, 1, one}})},
      {"2", "fold", 1, "(x, y^2)", second(r, {{0, 2, one}})},
      {"3", "cusp", 2, "(x, xy + y^3)", second(r, {{1, 1, one}, {0, 3, one}})},
      {"4_2+", "lips", 3, "(x, y^3 + x^2y)", second(r, {{0, 3, one}, {2, 1, one}})},
      {"4_2-", "beaks", 3, "(x, y^3 - x^2y)", second(r, {{0, 3, one}, {2, 1, m1}})},
      {"5", "swallowtail", 3, "(x, xy + y^4)", second(r, {{1, 1, one}, {0, 4, one}})},
      {"4_3", "goose", 4, "(x, y^3 + x^3y)", second(r, {{0, 3, one}, {3, 1, one}})},
      {"6", "butterfly", 4, "(x, xy + y^5 + y^7)", second(r, {{1, 1, one}, {0, 5, one}, {0, 7, one}})},
      {"6", "butterfly", 4, "(x, xy + y^5 - y^7)", second(r, {{1, 1, one}, {0, 5, one}, {0, 7, m1}})},
      {"11_5", "gulls", 4, "(x, xy^2 + y^4 + y^5)", second(r, {{1, 2, one}, {0, 4, one}, {0, 5, one}})},
      {"4_4+", "ugly goose", 5, "(x, y^3 + x^4y)", second(r, {{0, 3, one}, {4, 1, one}})},
      {"4_4-", "ugly goose", 5, "(x, y^3 - x^4y)", second(r, {{0, 3, one}, {4, 1, m1}})},
      {"7", "elder butterfly", 5, "(x, xy + y^5)", second(r, {{1, 1, one}, {0, 5, one}})},
      {"11_7", "ugly gulls", 5, "(x, xy^2 + y^4 + y^7)", second(r, {{1, 2, one}, {0, 4, one}, {0, 7, one}})},
      {"12", "", 5, "(x, xy^2 + y^5 + y^6)", second(r, {{1, 2, one}, {0, 5, one}, {0, 6, one}})},
      {"16+", "", 5, "(x, x^2y + y^4 + y^5)", second(r, {{2, 1, one}, {0, 4, one}, {0, 5, one}})},
      {"16-", "", 5, "(x, x^2y + y^4 - y^5)", second(r, {{2, 1, one}, {0, 4, one}, {0, 5, m1}})},
      {"8+", "unimodal", 5, "(x, xy + y^6 + y^8 + alpha y^9)",
       second(r, {{1, 1, one}, {0, 6, one}, {0, 8, one}, {0, 9, a}})},
      {"8-", "unimodal", 5, "(x, xy + y^6 - y^8 + alpha y^9)",
       second(r, {{1, 1, one}, {0, 6, one}, {0, 8, m1}, {0, 9, a}})},
      {"4_5", "", 6, "(x, y^3 + x^5y)", second(r, {{0, 3, one}, {5, 1, one}})},
      {"9", "", 6, "(x, xy + y^6 + y^9)", second(r, {{1, 1, one}, {0, 6, one}, {0, 9, one}})},
      {"10+", "bimodal", 6, "(x, xy + y^7 + y^9 + alpha y^10 + beta y^11)",
       second(r, {{1, 1, one}, {0, 7, one}, {0, 9, one}, {0, 10, a}, {0, 11, b}})},
      {"10-", "bimodal", 6, "(x, xy + y^7 - y^9 + alpha y^10 + beta y^11)",
       second(r, {{1, 1, one}, {0, 7, one}, {0, 9, m1}, {0, 10, a}, {0, 11, b}})},
      {"11_9", "", 6, "(x, xy^2 + y^4 + y^9)", second(r, {{1, 2, one}, {0, 4, one}, {0, 9, one}})},
      {"13", "", 6, "(x, xy^2 + y^5 + y^9)", second(r, {{1, 2, one}, {0, 5, one}, {0, 9, one}})},
      {"13", "", 6, "(x, xy^2 + y^5 - y^9)", second(r, {{1, 2, one}, {0, 5, one}, {0, 9, m1}})},
      {"15", "unimodal", 6, "(x, xy^2 + y^6 + y^7 + alpha y^9)",
       second(r, {{1, 2, one}, {0, 6, one}, {0, 7, one}, {0, 9, a}})},
      {"17", "", 6, "(x, x^2y + y^4)", second(r, {{2, 1, one}, {0, 4, one}})},
      {"18", "bimodal", 6, "(x, x^2y + xy^3 + alpha y^5 + y^6 + beta y^7)",
       second(r, {{2, 1, one}, {1, 3, one}, {0, 5, a}, {0, 6, one}, {0, 7, b}})},
      {"19", "unimodal", 6, "(x, x^3y + alpha x^2y^2 + y^4 + x^3y^2)",
       second(r, {{3, 1, one}, {2, 2, a}, {0, 4, one}, {3, 2, one}})},
  };
}

}  // namespace planegerm
