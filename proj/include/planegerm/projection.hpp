#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planegerm/json_io.hpp"
#include "planegerm/recognizer.hpp"

namespace planegerm {

// Surface z = f(x, y) around the base point (1, 0, 0), tangent plane z = 0.
struct MongeForm {
  Jet2 f;

  MongeForm() = default;
  explicit MongeForm(Jet2 f);
  int order() const { return f.order(); }
  Rat c(int i, int j) const { return i + j <= order() ? f.coeff(i, j) : Rat(0); }
};

struct Viewpoint {
  Rat a, b, c;
};

MongeForm monge_from_json(const json& v);
json to_json(const MongeForm& m);
Viewpoint viewpoint_from_json(const json& v);
json to_json(const Viewpoint& p);

// Jet of ((y - b)/(1 + x - a), (f - c)/(1 + x - a)) minus its value at 0.
template <class K>
JetMap<K> central_projection_germ(const Jet<K>& f, const K& a, const K& b, const K& c);
PlaneGermJet central_projection_germ(const MongeForm& m, const Viewpoint& p);

// Projection along the tangent direction (p, q): (-q x + p y, f).
PlaneGermJet parallel_projection_germ(const MongeForm& m, const Rat& p = 1, const Rat& q = 0);

Classification classify_view(const MongeForm& m, const Viewpoint& p);

// Rows of the viewpoint table with cod G_W <= 3, in table order.
const std::vector<std::string>& constraint_rows();
int constraint_case(const std::string& row);

struct Condition {
  std::string name;
  std::string value;        // exact value, or "unavailable"
  std::string requirement;  // "= 0", "!= 0", "> 0", "< 0", "holds", "fails", "= 1", ...
  bool derived = false;     // read off the classification of the projected germ
  bool holds = false;
};

struct ConstraintReport {
  std::string row;
  int case_number = 0;
  std::string branch;  // "hyperbolic", "parabolic", "umbilic" or "none"
  std::vector<Condition> conditions;
  std::vector<std::string> flags;
  std::string label;  // label of the projected germ
  bool satisfied = false;
};

// Throws ContractViolation naming the standing assumption when m is not in
// the coordinates the row's case is written in.
ConstraintReport constraint_check(const MongeForm& m, const Viewpoint& p, const std::string& row);
json to_json(const ConstraintReport& r);

struct FocalRoot {
  RealRoot a;        // isolating interval for a (exact when lo == hi)
  std::string poly;  // squarefree polynomial in a vanishing there
  std::string left, at, right;
};

struct FocalGap {
  std::optional<Rat> lo, hi;  // nullopt: unbounded
  Rat sample;
  std::string label;
};

struct FocalScan {
  std::vector<std::string> critical;  // critical polynomials in a met while classifying
  std::vector<FocalGap> gaps;
  std::vector<FocalRoot> roots;  // only points where the label changes
};

// Classification along the viewpoint line b = c = 0, a in R.
FocalScan focal_scan(const MongeForm& m);
json to_json(const FocalScan& s);

inline const std::string kTangentViewpoint = "tangent_viewpoint";

}  // namespace planegerm
