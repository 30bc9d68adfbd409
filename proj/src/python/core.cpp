#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "planegerm/errors.hpp"
#include "planegerm/fixtures.hpp"
#include "planegerm/normal_forms.hpp"
#include "planegerm/projection.hpp"
#include "planegerm/recognizer.hpp"

namespace py = pybind11;
using namespace planegerm;

namespace {

json parse(const std::string& s) {
  try {
    return json::parse(s);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string classify_json(const std::string& germ, int order) {
  PlaneGermJet f = germ_from_json(parse(germ));
  return to_json(classify(f.at_most(order))).dump();
}

std::string normalize_json(const std::string& germ, int order) {
  PlaneGermJet f = germ_from_json(parse(germ)).at_most(order);
  SpecifiedJetResult s = classify_specified_jet(f);
  if (!s.in_scope) return json({{"label", kOutOfScope}, {"reason", s.reason}}).dump();
  NormalizedGerm<Rat> n = reduce_to_specified_jet(f, s.cls);
  return json({{"specified_jet", to_string(n.cls)},
               {"germ", to_json(n.germ)},
               {"change", to_json(n.record.change())},
               {"swapped", n.swapped},
               {"stages", n.stages}})
      .dump();
}

std::string central_germ_json(const std::string& monge, const std::string& viewpoint) {
  return to_json(central_projection_germ(monge_from_json(parse(monge)), viewpoint_from_json(parse(viewpoint)))).dump();
}

std::string classify_view_json(const std::string& monge, const std::string& viewpoint) {
  return to_json(classify_view(monge_from_json(parse(monge)), viewpoint_from_json(parse(viewpoint)))).dump();
}

std::string parallel_json(const std::string& monge, const std::string& p, const std::string& q) {
  PlaneGermJet g = parallel_projection_germ(monge_from_json(parse(monge)), parse_rat(p), parse_rat(q));
  return json({{"germ", to_json(g)}, {"classification", to_json(classify(g))}}).dump();
}

std::string constraint_json(const std::string& monge, const std::string& viewpoint, const std::string& row) {
  return to_json(constraint_check(monge_from_json(parse(monge)), viewpoint_from_json(parse(viewpoint)), row)).dump();
}

std::string scan_json(const std::string& monge) { return to_json(focal_scan(monge_from_json(parse(monge)))).dump(); }

std::string table_json(int order) {
  json rows = json::array();
  for (const auto& r : normal_form_table(1, 2, order))
    rows.push_back({{"label", r.label},
                    {"name", r.name},
                    {"codimension", r.codimension},
                    {"normal_form", r.formula},
                    {"germ", to_json(r.germ)},
                    {"classified", classify(r.germ).label}});
  return rows.dump();
}

std::pair<int, int> fixtures_check() {
  int ok = 0, n = 0;
  for (const auto& fx : reference_fixtures()) {
    ok += holds(fx);
    ++n;
  }
  return {ok, n};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact recognizer for plane-to-plane map-germs; JSON in, JSON out";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InsufficientOrder>(m, "InsufficientOrder", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  m.def("classify", &classify_json, py::arg("germ"), py::arg("order") = 12);
  m.def("normalize", &normalize_json, py::arg("germ"), py::arg("order") = 12);
  m.def("central_projection_germ", &central_germ_json, py::arg("monge"), py::arg("viewpoint"));
  m.def("classify_view", &classify_view_json, py::arg("monge"), py::arg("viewpoint"));
  m.def("parallel_projection", &parallel_json, py::arg("monge"), py::arg("p") = "1", py::arg("q") = "0");
  m.def("constraint_check", &constraint_json, py::arg("monge"), py::arg("viewpoint"), py::arg("row"));
  m.def("focal_scan", &scan_json, py::arg("monge"));
  m.def("normal_form_table", &table_json, py::arg("order") = 12);
  m.def("fixtures_check", &fixtures_check);
  m.def("labels", &all_labels);
}
