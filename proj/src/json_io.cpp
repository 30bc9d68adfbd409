#include "planegerm/json_io.hpp"

namespace planegerm {

Rat rat_from_json(const json& v) {
  if (v.is_string()) return parse_rat(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long>());
  throw ParseError("expected a rational as \"p/q\" string, got " + v.dump());
}

static int int_field(const json& v, const char* key) {
  if (!v.is_object() || !v.contains(key) || !v[key].is_number_integer())
    throw ParseError(std::string("missing integer field '") + key + "'");
  return v[key].get<int>();
}

json to_json(const Jet2& j) {
  json terms = json::array();
  for (const auto& [e, c] : j.terms()) terms.push_back({{"i", e.i}, {"j", e.j}, {"c", to_string(c)}});
  return {{"order", j.order()}, {"terms", terms}};
}

Jet2 jet_from_json(const json& v) {
  int order = int_field(v, "order");
  if (order < 0) throw ParseError("negative order");
  Jet2 j(order);
  if (!v.contains("terms") || !v["terms"].is_array()) throw ParseError("missing 'terms' array");
  for (const auto& t : v["terms"]) {
    int i = int_field(t, "i"), k = int_field(t, "j");
    if (i < 0 || k < 0) throw ParseError("negative exponent");
    if (i + k > order) throw ParseError("term x^" + std::to_string(i) + "y^" + std::to_string(k) + " exceeds order");
    if (!t.contains("c")) throw ParseError("term without coefficient");
    j.add(i, k, rat_from_json(t["c"]));
  }
  return j;
}

json to_json(const PlaneGermJet& f) { return {{"f1", to_json(f.a)}, {"f2", to_json(f.b)}}; }

PlaneGermJet germ_from_json(const json& v) {
  if (!v.is_object() || !v.contains("f1") || !v.contains("f2")) throw ParseError("germ needs 'f1' and 'f2'");
  PlaneGermJet f{jet_from_json(v["f1"]), jet_from_json(v["f2"])};
  if (f.a.order() != f.b.order()) throw ParseError("germ components have different orders");
  if (sgn(f.a.coeff(0, 0)) != 0 || sgn(f.b.coeff(0, 0)) != 0)
    throw ParseError("germ components must vanish at the origin");
  return f;
}

json to_json(const CoordChangeJet& ch) {
  return {{"source", to_json(ch.source)}, {"target", to_json(ch.target)}};
}

CoordChangeJet change_from_json(const json& v) {
  if (!v.is_object() || !v.contains("source") || !v.contains("target"))
    throw ParseError("change needs 'source' and 'target'");
  return {germ_from_json(v["source"]), germ_from_json(v["target"])};
}

}  // namespace planegerm
