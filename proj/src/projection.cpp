#include "planegerm/projection.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "planegerm/errors.hpp"

namespace planegerm {

MongeForm::MongeForm(Jet2 f_) : f(std::move(f_)) {
  for (const auto& [e, c] : f.terms())
    if (e.degree() < 2) throw ContractViolation("Monge form has a term of degree < 2");
}

MongeForm monge_from_json(const json& v) {
  if (!v.is_object() || !v.contains("order") || !v["order"].is_number_integer())
    throw ParseError("Monge form needs an integer 'order'");
  int order = v["order"].get<int>();
  if (order < 2) throw ParseError("Monge form order must be >= 2");
  if (!v.contains("c") || !v["c"].is_array()) throw ParseError("Monge form needs a 'c' array");
  Jet2 f(order);
  for (const auto& t : v["c"]) {
    if (!t.is_object() || !t.contains("i") || !t.contains("j") || !t.contains("v"))
      throw ParseError("Monge coefficient needs 'i', 'j', 'v'");
    int i = t["i"].get<int>(), j = t["j"].get<int>();
    if (i < 0 || j < 0 || i + j > order) throw ParseError("Monge coefficient out of range");
    if (i + j < 2) throw ParseError("Monge form has no terms of degree < 2");
    f.add(i, j, rat_from_json(t["v"]));
  }
  return MongeForm(f);
}

json to_json(const MongeForm& m) {
  json c = json::array();
  for (const auto& [e, v] : m.f.terms()) c.push_back({{"i", e.i}, {"j", e.j}, {"v", to_string(v)}});
  return {{"order", m.order()}, {"c", c}};
}

Viewpoint viewpoint_from_json(const json& v) {
  if (!v.is_object()) throw ParseError("viewpoint must be an object");
  Viewpoint p;
  p.a = v.contains("a") ? rat_from_json(v["a"]) : Rat(0);
  p.b = v.contains("b") ? rat_from_json(v["b"]) : Rat(0);
  p.c = v.contains("c") ? rat_from_json(v["c"]) : Rat(0);
  return p;
}

json to_json(const Viewpoint& p) { return {{"a", to_string(p.a)}, {"b", to_string(p.b)}, {"c", to_string(p.c)}}; }

template <class K>
JetMap<K> central_projection_germ(const Jet<K>& f, const K& a, const K& b, const K& c) {
  int r = f.order();
  K u = K(1) - a;
  if (is_structural_zero(u)) throw DomainError("viewpoint with a = 1 lies on the tangent plane");
  Jet<K> inv = invert_unit(Jet<K>::constant(u, r) + Jet<K>::x(r));
  Jet<K> p1 = (Jet<K>::y(r) - Jet<K>::constant(b, r)) * inv;
  Jet<K> p2 = (f - Jet<K>::constant(c, r)) * inv;
  p1.set(0, 0, K(0));
  p2.set(0, 0, K(0));
  return {p1, p2};
}

template JetMap<Rat> central_projection_germ(const Jet<Rat>&, const Rat&, const Rat&, const Rat&);
template JetMap<RatFunc> central_projection_germ(const Jet<RatFunc>&, const RatFunc&, const RatFunc&, const RatFunc&);

PlaneGermJet central_projection_germ(const MongeForm& m, const Viewpoint& p) {
  return central_projection_germ(m.f, p.a, p.b, p.c);
}

PlaneGermJet parallel_projection_germ(const MongeForm& m, const Rat& p, const Rat& q) {
  if (sgn(p) == 0 && sgn(q) == 0) throw DomainError("zero projection direction");
  int r = m.order();
  return {Jet2::x(r) * Rat(-q) + Jet2::y(r) * p, m.f};
}

Classification classify_view(const MongeForm& m, const Viewpoint& p) { return classify(central_projection_germ(m, p)); }

// ---------------------------------------------------------------------------
// constraint sets

namespace {

enum class Need { Zero, Nonzero, Positive, Negative, Holds, Fails, Value };

struct Derived {
  std::string pred;
  Need need;
  std::string value;  // for Need::Value
};

std::string requirement(Need n, const std::string& value) {
  switch (n) {
    case Need::Zero: return "= 0";
    case Need::Nonzero: return "!= 0";
    case Need::Positive: return "> 0";
    case Need::Negative: return "< 0";
    case Need::Holds: return "holds";
    case Need::Fails: return "fails";
    case Need::Value: return "= " + value;
  }
  return "";
}

std::string eta(int k) {
  if (k == 0) return "lambda(0)";
  if (k == 1) return "eta lambda(0)";
  return "eta^" + std::to_string(k) + " lambda(0)";
}

const std::map<std::string, int>& row_cases() {
  static const std::map<std::string, int> m = {
      {"1", 0},  {"2", 0},    {"3", 0},    {"5", 0},    {"6", 0},    {"7", 0},  {"8", 0},
      {"9", 0},  {"4_2", 1},  {"11_5", 1}, {"11_7", 1}, {"11_9", 1}, {"12", 1}, {"13", 1},
      {"4_3", 2}, {"4_4", 2}, {"4_5", 2},  {"16", 2},   {"17", 2},   {"19", 3}};
  return m;
}

// Corank-one route to the specified jet reached after k - 1 vanishing eta
// powers in case 0.
std::vector<Derived> case0_route(int k) {
  std::vector<Derived> d = {{eta(0), Need::Zero, ""}, {eta(1), Need::Zero, ""}, {"d lambda(0)", Need::Holds, ""}};
  for (int i = 2; i < k; ++i) d.push_back({eta(i), Need::Zero, ""});
  d.push_back({eta(k), Need::Nonzero, ""});
  return d;
}

std::vector<Derived> derived_conditions(const std::string& row) {
  std::vector<Derived> d;
  auto add = [&](const std::string& p, Need n) { d.push_back({p, n, ""}); };
  auto route = [&](std::vector<Derived> r) { d.insert(d.end(), r.begin(), r.end()); };
  auto singular = [&] {
    add(eta(0), Need::Zero);
    add("d lambda(0)", Need::Fails);
  };
  if (row == "1") {
    add(eta(0), Need::Nonzero);
  } else if (row == "2") {
    add(eta(0), Need::Zero);
    add(eta(1), Need::Nonzero);
  } else if (row == "3") {
    route(case0_route(2));
  } else if (row == "5") {
    route(case0_route(3));
  } else if (row == "6" || row == "7") {
    route(case0_route(4));
    add("a07 - 5/8 a06^2", row == "6" ? Need::Nonzero : Need::Zero);
  } else if (row == "8" || row == "9") {
    route(case0_route(5));
    add("a08 - 3/5 a07^2", row == "8" ? Need::Nonzero : Need::Zero);
    if (row == "9") add("a09 - 7/25 a07^3", Need::Nonzero);
  } else if (row == "4_2") {
    singular();
    add("det H_lambda(0)", Need::Nonzero);
    add(eta(2), Need::Nonzero);
  } else if (row.rfind("11_", 0) == 0) {
    singular();
    add("det H_lambda(0)", Need::Nonzero);
    add(eta(2), Need::Zero);
    add(eta(3), Need::Nonzero);
    if (row == "11_5") {
      add("a05", Need::Nonzero);
    } else {
      add("a05", Need::Zero);
      add("a07 - 2a15 + 4a23", row == "11_7" ? Need::Nonzero : Need::Zero);
      if (row == "11_9") add("c09 - 2c17", Need::Nonzero);
    }
  } else if (row == "12" || row == "13") {
    singular();
    add("det H_lambda(0)", Need::Nonzero);
    add(eta(2), Need::Zero);
    add(eta(3), Need::Zero);
    add(eta(4), Need::Nonzero);
    add("a06", row == "12" ? Need::Nonzero : Need::Zero);
    if (row == "13") add("a09 - 5/2 a16 - 5/6 a07^2", Need::Nonzero);
  } else if (row == "4_3" || row == "4_4" || row == "4_5") {
    singular();
    add("det H_lambda(0)", Need::Zero);
    d.push_back({"rank H_lambda(0)", Need::Value, "1"});
    add(eta(2), Need::Nonzero);
    add("a31", row == "4_3" ? Need::Nonzero : Need::Zero);
    if (row != "4_3") add("a41 - 1/3 a22^2", row == "4_4" ? Need::Nonzero : Need::Zero);
    if (row == "4_5") add("a51 - 2/3 a32 a22 + 1/3 a13 a22^2", Need::Nonzero);
  } else if (row == "16" || row == "17") {
    singular();
    add("det H_lambda(0)", Need::Zero);
    d.push_back({"rank H_lambda(0)", Need::Value, "1"});
    add(eta(2), Need::Zero);
    add(eta(3), Need::Nonzero);
    add("a05", row == "16" ? Need::Nonzero : Need::Zero);
  } else if (row == "19") {
    singular();
    d.push_back({"rank H_lambda(0)", Need::Value, "0"});
    add(eta(3), Need::Nonzero);
    add("a31", Need::Nonzero);
    add("Delta", Need::Nonzero);
  }
  return d;
}

struct Explicit {
  std::string name;
  Rat value;
  Need need;
};

std::vector<Explicit> explicit_conditions(const std::string& row, int cs, const std::string& branch,
                                          const MongeForm& m, const Viewpoint& p) {
  std::vector<Explicit> e;
  auto c = [&](int i, int j) { return m.c(i, j); };
  auto add = [&](const std::string& n, const Rat& v, Need need) { e.push_back({n, v, need}); };
  auto zero_c = [&](std::initializer_list<std::pair<int, int>> ij) {
    for (auto [i, j] : ij) add("c" + std::to_string(i) + std::to_string(j), c(i, j), Need::Zero);
  };
  Rat u = 1 - p.a;
  if (cs == 0) {
    if (row == "1") return {{"c", p.c, Need::Nonzero}};
    add("c", p.c, Need::Zero);
    if (row == "2") {
      add("b", p.b, Need::Nonzero);
      return e;
    }
    add("b", p.b, Need::Zero);
    static const std::map<std::string, int> depth = {{"3", 3}, {"5", 4}, {"6", 5}, {"7", 5}, {"8", 6}, {"9", 6}};
    int k = depth.at(row);
    for (int i = 3; i < k; ++i) add("c" + std::to_string(i) + "0", c(i, 0), Need::Zero);
    add("c" + std::to_string(k) + "0", c(k, 0), Need::Nonzero);
    return e;
  }
  add("c", p.c, Need::Zero);
  add("c20", c(2, 0), Need::Zero);
  if (branch == "umbilic") {
    // the equations in b and c_ij with i + j = 3 are read off the germ instead
    add("c02", c(0, 2), Need::Zero);
    return e;
  }
  add("b", p.b, Need::Zero);
  Rat C = 3 * c(3, 0) * c(1, 2) - c(2, 1) * c(2, 1), D = 3 * c(0, 2) * c(3, 0);
  Rat goose = C * u + D;
  Rat h22 = u * c(1, 2) + c(0, 2);
  if (row == "4_2") {
    add("c30", c(3, 0), Need::Nonzero);
    add("C(1-a) + D", goose, Need::Nonzero);
  } else if (row.rfind("11_", 0) == 0) {
    zero_c({{3, 0}});
  } else if (row == "12" || row == "13") {
    zero_c({{3, 0}, {4, 0}});
  } else if (row == "4_3" || row == "4_4" || row == "4_5") {
    add("C(1-a) + D", goose, Need::Zero);
  } else if (row == "16" || row == "17") {
    zero_c({{3, 0}, {2, 1}});
    add("(1-a)c12 + c02", h22, Need::Nonzero);
  } else if (row == "19") {
    zero_c({{3, 0}, {2, 1}});
    add("(1-a)c12 + c02", h22, Need::Zero);
  }
  return e;
}

// `holds` is the certificate's outcome: nonzero for a tested value.
bool check(Need n, int sign, bool holds) {
  switch (n) {
    case Need::Zero: return !holds;
    case Need::Nonzero: return holds;
    case Need::Positive: return sign > 0;
    case Need::Negative: return sign < 0;
    case Need::Fails: return !holds;
    default: return holds;
  }
}

bool label_matches(const std::string& label, const std::string& row) {
  return label == row || label == row + "+" || label == row + "-";
}

}  // namespace

const std::vector<std::string>& constraint_rows() {
  static const std::vector<std::string> rows = {"1",  "2",  "3",   "4_2", "5",    "4_3", "6",
                                                "11_5", "4_4", "7", "11_7", "12", "16", "8",
                                                "4_5", "9",  "11_9", "13", "17", "19"};
  return rows;
}

int constraint_case(const std::string& row) {
  auto it = row_cases().find(row);
  if (it == row_cases().end()) throw ContractViolation("no constraint set for row '" + row + "'");
  return it->second;
}

ConstraintReport constraint_check(const MongeForm& m, const Viewpoint& p, const std::string& row) {
  ConstraintReport r;
  r.row = row;
  r.case_number = constraint_case(row);
  if (r.case_number == 0) {
    if (sgn(m.c(2, 0)) != 0 || sgn(m.c(0, 2)) != 0 || sgn(m.c(1, 1)) == 0)
      throw ContractViolation("standing assumption of case 0 fails: c20 = c02 = 0, c11 != 0");
    r.branch = "hyperbolic";
  } else {
    if (sgn(m.c(1, 1)) != 0)
      throw ContractViolation("standing assumption of case " + std::to_string(r.case_number) + " fails: c11 = 0");
    bool c20 = sgn(m.c(2, 0)) == 0;
    if (c20 && sgn(p.b) == 0) r.branch = "parabolic";
    else if (c20 && sgn(m.c(0, 2)) == 0) r.branch = "umbilic";
    else r.branch = "none";
    if (r.branch == "umbilic") r.flags.push_back("umbilic_branch");
  }

  for (const auto& e : explicit_conditions(row, r.case_number, r.branch, m, p)) {
    int s = sgn(e.value);
    r.conditions.push_back({e.name, to_string(e.value), requirement(e.need, ""), false, check(e.need, s, s != 0)});
  }

  Classification cl;
  bool have = false;
  if (sgn(1 - p.a) == 0) {
    r.label = kTangentViewpoint;
  } else {
    cl = classify_view(m, p);
    r.label = cl.label;
    have = true;
  }
  for (const auto& d : derived_conditions(row)) {
    Condition cond{d.pred, "unavailable", requirement(d.need, d.value), true, false};
    const CertEntry* ce = have ? cl.find(d.pred) : nullptr;
    if (ce) {
      cond.value = ce->value;
      cond.holds = d.need == Need::Value ? ce->value == d.value : check(d.need, ce->sign, ce->holds);
    }
    r.conditions.push_back(cond);
  }
  r.satisfied = std::all_of(r.conditions.begin(), r.conditions.end(), [](const Condition& c) { return c.holds; });
  if (r.satisfied && !label_matches(r.label, row)) r.flags.push_back("label_mismatch");
  return r;
}

json to_json(const ConstraintReport& r) {
  json conds = json::array();
  for (const auto& c : r.conditions)
    conds.push_back({{"name", c.name}, {"value", c.value}, {"requirement", c.requirement}, {"derived", c.derived},
                     {"holds", c.holds}});
  return {{"row", r.row},     {"case", r.case_number}, {"branch", r.branch},       {"conditions", conds},
          {"flags", r.flags}, {"label", r.label},      {"satisfied", r.satisfied}};
}

// ---------------------------------------------------------------------------
// focal scan along b = c = 0

namespace {

Jet<RatFunc> lift(const Jet2& f) {
  Jet<RatFunc> g(f.order());
  for (const auto& [e, c] : f.terms()) g.set(e.i, e.j, RatFunc(c));
  return g;
}

std::string label_or_tangent(const MongeForm& m, const Rat& a) {
  if (a == 1) return kTangentViewpoint;
  return classify_view(m, {a, 0, 0}).label;
}

}  // namespace

FocalScan focal_scan(const MongeForm& m) {
  const JetMap<RatFunc> phi =
      central_projection_germ(lift(m.f), RatFunc::var(), RatFunc(0), RatFunc(0));
  std::vector<UPoly> crit = {UPoly(std::vector<Rat>{-1, 1})};  // a - 1
  auto known = [&](const UPoly& q) { return std::find(crit.begin(), crit.end(), q) != crit.end(); };

  UPoly P;
  std::vector<RealRoot> roots;
  std::vector<Rat> samples;
  std::vector<std::string> labels;
  for (bool stable = false; !stable;) {
    P = UPoly(1);
    for (const auto& q : crit) P = P * q;
    P = square_free(P);
    roots = isolate_real_roots(P);
    samples.clear();
    if (roots.empty()) {
      samples.push_back(0);
    } else {
      samples.push_back(roots.front().lo - 1);
      for (size_t i = 0; i + 1 < roots.size(); ++i) samples.push_back((roots[i].hi + roots[i + 1].lo) / 2);
      samples.push_back(roots.back().hi + 1);
    }
    labels.clear();
    stable = true;
    for (const Rat& s : samples) {
      GenericJudge judge(s);
      try {
        labels.push_back(classify(phi, judge).label);
      } catch (const SampleHitsRoot& e) {
        if (!known(e.poly.monic())) crit.push_back(e.poly.monic());
        stable = false;
        break;
      }
      for (const auto& q : judge.critical())
        if (!known(q)) {
          crit.push_back(q);
          stable = false;
        }
      if (!stable) break;
    }
  }

  FocalScan out;
  for (const auto& q : crit) out.critical.push_back(q.str("a"));
  std::vector<std::string> at(roots.size());
  for (size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].exact()) {
      at[i] = label_or_tangent(m, roots[i].lo);
    } else {
      RootJudge judge(P, roots[i]);
      at[i] = classify(phi, judge).label;
    }
  }
  size_t start = 0;
  auto close_gap = [&](size_t first, std::optional<Rat> lo, std::optional<Rat> hi) {
    out.gaps.push_back({std::move(lo), std::move(hi), samples[first], labels[first]});
  };
  std::optional<Rat> lo;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (at[i] == labels[i] && at[i] == labels[i + 1]) continue;
    close_gap(start, lo, roots[i].lo);
    const UPoly* factor = &P;
    for (const auto& q : crit)
      if (q.degree() < factor->degree() && sign_at_root(q, P, roots[i]) == 0) factor = &q;
    out.roots.push_back({roots[i], square_free(*factor).str("a"), labels[i], at[i], labels[i + 1]});
    lo = roots[i].hi;
    start = i + 1;
  }
  close_gap(start, lo, std::nullopt);
  return out;
}

json to_json(const FocalScan& s) {
  auto opt = [](const std::optional<Rat>& r) { return r ? json(to_string(*r)) : json(nullptr); };
  json gaps = json::array(), roots = json::array();
  for (const auto& g : s.gaps)
    gaps.push_back({{"lo", opt(g.lo)}, {"hi", opt(g.hi)}, {"sample", to_string(g.sample)}, {"label", g.label}});
  for (const auto& r : s.roots)
    roots.push_back({{"lo", to_string(r.a.lo)},
                     {"hi", to_string(r.a.hi)},
                     {"exact", r.a.exact()},
                     {"poly", r.poly},
                     {"left", r.left},
                     {"at", r.at},
                     {"right", r.right}});
  return {{"critical", s.critical}, {"intervals", gaps}, {"roots", roots}};
}

}  // namespace planegerm
