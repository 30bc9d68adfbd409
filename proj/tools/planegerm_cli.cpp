#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "planegerm/errors.hpp"
#include "planegerm/fixtures.hpp"
#include "planegerm/normal_forms.hpp"
#include "planegerm/projection.hpp"
#include "planegerm/recognizer.hpp"

using namespace planegerm;

namespace {

enum Exit { kLabeled = 0, kInputError = 1, kOutside = 2 };

struct Options {
  std::string command;
  std::string input;
  std::string inline_json;
  int order = 0;  // 0: command default
  std::string format = "json";
  int jobs = 1;
};

struct Result {
  json out;
  std::string text;
  int code = kLabeled;
};

json read_input(const Options& o) {
  if (!o.inline_json.empty()) return json::parse(o.inline_json);
  if (o.input.empty() || o.input == "-") return json::parse(std::cin);
  std::ifstream in(o.input);
  if (!in) throw ParseError("cannot open " + o.input);
  return json::parse(in);
}

PlaneGermJet working_germ(const PlaneGermJet& f, int order) {
  if (order < 2) throw ParseError("working order must be >= 2");
  return f.at_most(order);
}

Result classify_one(const json& in, const Options& o) {
  PlaneGermJet f = working_germ(germ_from_json(in), o.order ? o.order : 12);
  Classification c = classify(f);
  return {to_json(c), to_text(c), c.in_scope() ? kLabeled : kOutside};
}

Result normalize_one(const json& in, const Options& o) {
  PlaneGermJet f = working_germ(germ_from_json(in), o.order ? o.order : 12);
  SpecifiedJetResult s = classify_specified_jet(f);
  if (!s.in_scope) {
    json j = {{"label", kOutOfScope}, {"reason", s.reason}};
    return {j, "out_of_scope: " + s.reason + "\n", kOutside};
  }
  NormalizedGerm<Rat> n = reduce_to_specified_jet(f, s.cls);
  json j = {{"specified_jet", to_string(n.cls)},
            {"germ", to_json(n.germ)},
            {"change", to_json(n.record.change())},
            {"swapped", n.swapped},
            {"stages", n.stages}};
  std::ostringstream t;
  t << "specified jet: " << to_string(n.cls) << "\n" << "germ: " << n.germ << "\n";
  for (const auto& st : n.stages) t << "  " << st << "\n";
  return {j, t.str(), kLabeled};
}

MongeForm monge_of(const json& in, int order) {
  MongeForm m = monge_from_json(in.contains("monge") ? in["monge"] : in);
  if (order) {
    if (order < 2) throw ParseError("working order must be >= 2");
    m = MongeForm(m.f.at_most(order));
  }
  return m;
}

Result project_one(const json& in, const Options& o) {
  if (!in.is_object() || !in.contains("monge")) throw ParseError("project input needs 'monge'");
  MongeForm m = monge_of(in, o.order);
  PlaneGermJet g;
  json j;
  if (in.contains("direction")) {
    const json& d = in["direction"];
    if (!d.is_array() || d.size() != 2) throw ParseError("'direction' must be [p, q]");
    g = parallel_projection_germ(m, rat_from_json(d[0]), rat_from_json(d[1]));
  } else {
    Viewpoint p = viewpoint_from_json(in.value("viewpoint", json::object()));
    if (p.a == 1) throw ParseError("viewpoint with a = 1 lies on the tangent plane");
    g = central_projection_germ(m, p);
    if (in.contains("row")) j["constraints"] = to_json(constraint_check(m, p, in["row"].get<std::string>()));
  }
  Classification c = classify(g);
  j["germ"] = to_json(g);
  j["classification"] = to_json(c);
  std::string text = to_text(c);
  if (j.contains("constraints"))
    text += std::string("constraints ") + (j["constraints"]["satisfied"].get<bool>() ? "satisfied" : "not satisfied") + "\n";
  return {j, text, c.in_scope() ? kLabeled : kOutside};
}

Result scan_one(const json& in, const Options& o) {
  FocalScan s = focal_scan(monge_of(in, o.order));
  std::ostringstream t;
  for (const auto& g : s.gaps)
    t << "(" << (g.lo ? to_string(*g.lo) : "-inf") << ", " << (g.hi ? to_string(*g.hi) : "+inf") << "): " << g.label << "\n";
  for (const auto& r : s.roots)
    t << "a in [" << to_string(r.a.lo) << ", " << to_string(r.a.hi) << "] root of " << r.poly << ": " << r.left
      << " | " << r.at << " | " << r.right << "\n";
  return {to_json(s), t.str(), kLabeled};
}

using Handler = Result (*)(const json&, const Options&);

Result guarded(Handler h, const json& in, const Options& o) {
  try {
    return h(in, o);
  } catch (const json::exception& e) {
    return {{{"error", e.what()}}, std::string("error: ") + e.what() + "\n", kInputError};
  } catch (const ParseError& e) {
    return {{{"error", e.what()}}, std::string("error: ") + e.what() + "\n", kInputError};
  } catch (const InsufficientOrder& e) {
    return {{{"error", e.what()}, {"needed_order", e.needed()}}, std::string("error: ") + e.what() + "\n", kInputError};
  } catch (const std::runtime_error& e) {
    return {{{"error", e.what()}}, std::string("error: ") + e.what() + "\n", kInputError};
  }
}

// Results come back in input order whatever the number of workers.
std::vector<Result> run_batch(Handler h, const std::vector<json>& items, const Options& o) {
  std::vector<Result> out(items.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next++) < items.size();) out[i] = guarded(h, items[i], o);
  };
  int n = std::max(1, std::min<int>(o.jobs, static_cast<int>(items.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

int emit(const std::vector<Result>& rs, bool batch, const Options& o) {
  int code = kLabeled;
  for (const auto& r : rs) {
    if (r.code == kInputError) code = kInputError;
    else if (r.code == kOutside && code == kLabeled) code = kOutside;
  }
  if (o.format == "text") {
    for (const auto& r : rs) std::cout << r.text;
  } else if (batch) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(r.out);
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << rs.front().out.dump(2) << "\n";
  }
  for (const auto& r : rs)
    if (r.code == kInputError) std::cerr << r.out["error"].get<std::string>() << "\n";
  return code;
}

int run_inputs(Handler h, const Options& o) {
  json in;
  try {
    in = read_input(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  bool batch = in.is_array();
  std::vector<json> items = batch ? in.get<std::vector<json>>() : std::vector<json>{in};
  return emit(run_batch(h, items, o), batch, o);
}

int run_table(const Options& o) {
  int order = o.order ? o.order : 12;
  if (order < 2) {
    std::cerr << "error: working order must be >= 2\n";
    return kInputError;
  }
  json rows = json::array();
  int pass = 0, total = 0;
  std::ostringstream t;
  for (const auto& row : normal_form_table(1, 2, order)) {
    std::string got;
    try {
      got = classify(row.germ).label;
    } catch (const InsufficientOrder& e) {
      got = std::string("error: ") + e.what();
    }
    bool ok = got == row.label;
    pass += ok;
    ++total;
    rows.push_back({{"label", row.label}, {"normal_form", row.formula}, {"classified", got}, {"pass", ok}});
    t << (ok ? "PASS " : "FAIL ") << row.label << "\t" << row.formula << "\t-> " << got << "\n";
  }
  t << pass << "/" << total << " pass\n";
  if (o.format == "text") std::cout << t.str();
  else std::cout << json({{"rows", rows}, {"pass", pass}, {"total", total}}).dump(2) << "\n";
  return pass == total ? 0 : 3;
}

int run_fixtures(const Options& o) {
  json rows = json::array();
  int pass = 0, total = 0;
  std::ostringstream t;
  for (const auto& fx : reference_fixtures()) {
    bool ok = holds(fx);
    pass += ok;
    ++total;
    json params = json::object();
    for (const auto& [k, v] : fx.params) params[k] = to_string(v);
    rows.push_back({{"name", fx.name}, {"order", fx.order}, {"params", params}, {"pass", ok}});
    t << (ok ? "PASS " : "FAIL ") << fx.name << " " << params.dump() << "\n";
  }
  t << pass << "/" << total << " pass\n";
  if (o.format == "text") std::cout << t.str();
  else std::cout << json({{"fixtures", rows}, {"pass", pass}, {"total", total}}).dump(2) << "\n";
  return pass == total ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognizer for plane-to-plane map-germs of A-codimension at most 6"};
  Options o;
  app.require_subcommand(1);
  std::vector<std::pair<std::string, std::string>> commands = {
      {"classify", "classify germs given as JSON"},
      {"normalize", "reduce a germ to its specified jet"},
      {"project", "classify the central or parallel projection of a Monge form"},
      {"scan", "focal scan along the viewpoint line b = c = 0"},
      {"fixtures", "check the reference coordinate changes"},
      {"table", "self-classify the built-in normal forms"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&o, n = name] { o.command = n; });
    if (name != "fixtures" && name != "table") {
      auto* in = sub->add_option("--input", o.input, "JSON file ('-' for stdin)");
      sub->add_option("--inline", o.inline_json, "inline JSON")->excludes(in);
      sub->add_option("--jobs", o.jobs, "worker threads for JSON arrays")->check(CLI::PositiveNumber);
    }
    if (name != "fixtures") sub->add_option("--order", o.order, "working jet order");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }
  if (o.command == "classify") return run_inputs(classify_one, o);
  if (o.command == "normalize") return run_inputs(normalize_one, o);
  if (o.command == "project") return run_inputs(project_one, o);
  if (o.command == "scan") return run_inputs(scan_one, o);
  if (o.command == "fixtures") return run_fixtures(o);
  return run_table(o);
}
