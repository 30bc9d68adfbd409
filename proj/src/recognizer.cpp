#include "planegerm/recognizer.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "planegerm/errors.hpp"
#include "planegerm/invariants.hpp"

namespace planegerm {

const std::vector<std::string>& all_labels() {
  static const std::vector<std::string> labels = {
      "1",  "2",  "3",  "4_2+", "4_2-", "5",  "4_3",  "6",    "11_5", "4_4+", "4_4-", "7",  "11_7", "12",
      "16+", "16-", "8+", "8-",   "4_5", "9",  "10+", "10-", "11_9", "13",   "15",   "17", "18",   "19"};
  return labels;
}

int codimension_of(const std::string& label) {
  static const std::map<std::string, int> cod = {
      {"1", 0},    {"2", 1},    {"3", 2},    {"4_2+", 3}, {"4_2-", 3}, {"5", 3},    {"4_3", 4},
      {"6", 4},    {"11_5", 4}, {"4_4+", 5}, {"4_4-", 5}, {"7", 5},    {"11_7", 5}, {"12", 5},
      {"16+", 5},  {"16-", 5},  {"8+", 5},   {"8-", 5},   {"4_5", 6},  {"9", 6},    {"10+", 6},
      {"10-", 6},  {"11_9", 6}, {"13", 6},   {"15", 6},   {"17", 6},   {"18", 6},   {"19", 6}};
  auto it = cod.find(label);
  return it == cod.end() ? -1 : it->second;
}

bool Classification::has_flag(const std::string& f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

const CertEntry* Classification::find(const std::string& predicate) const {
  for (const auto& e : certificate)
    if (e.predicate == predicate) return &e;
  return nullptr;
}

namespace {

template <class K>
struct Recorder {
  Judge<K>& judge;
  std::vector<CertEntry>& out;

  // Records v and returns whether it is nonzero.
  bool test(const std::string& name, const K& v) {
    bool z = judge.is_zero(v);
    out.push_back({name, coeff_str(v), !z, z ? 0 : judge.sign(v)});
    return !z;
  }
  int sign(const std::string& name, const K& v) {
    test(name, v);
    return out.back().sign;
  }
  void note(const std::string& name, const std::string& value, bool holds) { out.push_back({name, value, holds, holds ? 1 : 0}); }
};

std::string eta_name(int k) {
  if (k == 0) return "lambda(0)";
  if (k == 1) return "eta lambda(0)";
  return "eta^" + std::to_string(k) + " lambda(0)";
}

template <class K>
K q(long n, long d = 1) {
  return K(Rat(n, d));
}

}  // namespace

template <class K>
SpecifiedJetResult classify_specified_jet(const JetMap<K>& f0, Judge<K>& judge) {
  SpecifiedJetResult res;
  Recorder<K> rec{judge, res.certificate};
  if (f0.order() < 1) throw InsufficientOrder(1, "lambda(0)");
  JetMap<K> f = f0.truncate(std::min(f0.order(), 7));
  auto done = [&](SpecifiedJet c, const std::string& why) {
    res.cls = c;
    res.trace.push_back(why + " -> " + to_string(c));
    return res;
  };
  auto out_of_scope = [&](const std::string& why) {
    res.in_scope = false;
    res.reason = why;
    res.trace.push_back(why + " -> out of scope");
    return res;
  };

  Jet<K> lam = lambda_of(f);
  if (rec.test(eta_name(0), lam.coeff(0, 0))) return done(SpecifiedJet::Regular, "lambda(0) != 0");
  int cr = corank_at_origin(f, judge);
  rec.note("rank df(0)", std::to_string(2 - cr), cr == 1);
  if (cr == 2) return out_of_scope("corank 2");
  NullField<K> eta = null_field(f, judge);
  res.swapped = eta.swapped;
  if (eta.swapped) res.trace.push_back("components swapped: f1 has zero linear part");

  std::vector<Jet<K>> powers{lam};
  auto etak = [&](int k) {
    while (static_cast<int>(powers.size()) <= k) {
      if (powers.back().order() < 1) throw InsufficientOrder(k + 1, eta_name(k));
      powers.push_back(apply_field(eta, powers.back()));
    }
    return powers[k].coeff(0, 0);
  };
  if (rec.test(eta_name(1), etak(1))) return done(SpecifiedJet::Fold, "eta lambda(0) != 0");

  K lx = lam.coeff(1, 0), ly = lam.coeff(0, 1);
  bool dl = !judge.is_zero(lx) || !judge.is_zero(ly);
  rec.note("d lambda(0)", "(" + coeff_str(lx) + ", " + coeff_str(ly) + ")", dl);
  if (dl) {
    if (rec.test(eta_name(2), etak(2))) return done(SpecifiedJet::Cusp, "d lambda(0) != 0, eta^2 lambda(0) != 0");
    const SpecifiedJet II[] = {SpecifiedJet::II4, SpecifiedJet::II5, SpecifiedJet::II6, SpecifiedJet::II7};
    for (int k = 4; k <= 7; ++k)
      if (rec.test(eta_name(k - 1), etak(k - 1)))
        return done(II[k - 4], "d lambda(0) != 0, first nonzero eta^" + std::to_string(k - 1) + " lambda(0)");
    return out_of_scope("d lambda(0) != 0 and eta^k lambda(0) = 0 for k <= 6");
  }

  HessianData<K> H = hessian_of(lam, judge);
  res.det_sign = rec.sign("det H_lambda(0)", H.det);
  rec.note("rank H_lambda(0)", std::to_string(H.rank), H.rank > 0);
  if (H.rank == 2) {
    if (rec.test(eta_name(2), etak(2))) return done(SpecifiedJet::I2, "d lambda(0) = 0, det H_lambda(0) != 0, eta^2 lambda(0) != 0");
    if (res.det_sign > 0) return out_of_scope("det H_lambda(0) > 0 with eta^2 lambda(0) = 0");
    const SpecifiedJet next[] = {SpecifiedJet::III, SpecifiedJet::IV5, SpecifiedJet::IV6};
    for (int k = 3; k <= 5; ++k)
      if (rec.test(eta_name(k), etak(k)))
        return done(next[k - 3], "d lambda(0) = 0, det H_lambda(0) < 0, first nonzero eta^" + std::to_string(k) + " lambda(0)");
    return out_of_scope("det H_lambda(0) < 0 with eta^k lambda(0) = 0 for k = 2..5");
  }
  if (H.rank == 1) {
    if (rec.test(eta_name(2), etak(2))) return done(SpecifiedJet::IStar, "rank H_lambda(0) = 1, eta^2 lambda(0) != 0");
    if (rec.test(eta_name(3), etak(3))) return done(SpecifiedJet::V1, "rank H_lambda(0) = 1, eta^2 lambda(0) = 0, eta^3 lambda(0) != 0");
    return done(SpecifiedJet::V2, "rank H_lambda(0) = 1, eta^2 lambda(0) = eta^3 lambda(0) = 0");
  }
  if (rec.test(eta_name(3), etak(3))) return done(SpecifiedJet::VI, "rank H_lambda(0) = 0, eta^3 lambda(0) != 0");
  return out_of_scope("rank H_lambda(0) = 0 with eta^3 lambda(0) = 0");
}

namespace {

template <class K>
struct Discriminator {
  const JetMap<K>& f;
  SpecifiedJet cls;
  Judge<K>& judge;
  Classification& c;
  Recorder<K> rec{judge, c.certificate};

  NormalizedGerm<K> norm(int need) {
    int r = std::min(f.order(), need);
    return reduce_to_specified_jet(f.truncate(r), cls, judge, false);
  }
  void label(const std::string& l, const std::string& why) {
    c.label = l;
    c.trace.push_back(why + " -> " + l);
  }
  void out(const std::string& why) {
    c.label = kOutOfScope;
    c.reason = why;
    c.trace.push_back(why + " -> out of scope");
  }
  void modulus(const std::string& name, const K& v) { c.moduli.push_back({name, coeff_str(v)}); }
  void flag(const std::string& f) { c.flags.push_back(f); }
  std::string pm(int s) { return s > 0 ? "+" : "-"; }

  // q / |p|^(3/2) when |p| is a rational square, else its square.
  void alpha_from(const K& p, const K& qv, int sp) {
    K ap = sp > 0 ? p : -p;
    if (auto pr = as_rational(ap))
      if (auto s = rational_sqrt(*pr)) {
        modulus("alpha", qv / (ap * K(*s)));
        return;
      }
    modulus("alpha^2", qv * qv / (ap * ap * ap));
  }

  bool extend(NormalizedGerm<K>& n, std::vector<Exponent> keep, int max_weight) {
    std::vector<Exponent> model = model_monomials(cls);
    return eliminate<K>(
        n,
        [&](const Exponent& e) {
          return std::find(keep.begin(), keep.end(), e) == keep.end() &&
                 std::find(model.begin(), model.end(), e) == model.end();
        },
        max_weight, judge);
  }

  void run() {
    switch (cls) {
      case SpecifiedJet::II4: norm(4); return label("5", "II_4");
      case SpecifiedJet::II5: return ii5();
      case SpecifiedJet::II6: return ii6();
      case SpecifiedJet::II7: return ii7();
      case SpecifiedJet::III: return iii();
      case SpecifiedJet::IV5: return iv5();
      case SpecifiedJet::IV6: return iv6();
      case SpecifiedJet::IStar: return istar();
      case SpecifiedJet::V1: return v1();
      case SpecifiedJet::V2: return v2();
      case SpecifiedJet::VI: return vi();
      default: throw ContractViolation("no discriminants for " + to_string(cls));
    }
  }

  void ii5() {
    auto n = norm(7);
    K d = n.a(0, 7) - q<K>(5, 8) * n.a(0, 6) * n.a(0, 6);
    if (rec.test("a07 - 5/8 a06^2", d)) return label("6", "a07 - 5/8 a06^2 != 0");
    label("7", "a07 - 5/8 a06^2 = 0");
  }

  void ii6() {
    auto n = norm(9);
    K a7 = n.a(0, 7), a8 = n.a(0, 8);
    K p = a8 - q<K>(3, 5) * a7 * a7;
    int sp = rec.sign("a08 - 3/5 a07^2", p);
    if (sp != 0) {
      label("8" + pm(sp), "a08 - 3/5 a07^2 != 0");
      if (n.germ.order() >= 9) {
        K qv = n.a(0, 9) - q<K>(7, 5) * a7 * a8 + q<K>(14, 25) * a7 * a7 * a7;
        rec.test("a09 - 7/5 a07 a08 + 14/25 a07^3", qv);
        alpha_from(p, qv, sp);
      } else {
        flag("moduli_need_order_9");
      }
      return;
    }
    K t = n.a(0, 9) - q<K>(7, 25) * a7 * a7 * a7;
    if (rec.test("a09 - 7/25 a07^3", t)) return label("9", "a08 - 3/5 a07^2 = 0, a09 - 7/25 a07^3 != 0");
    out("II_6 with a08 - 3/5 a07^2 = a09 - 7/25 a07^3 = 0 (codimension above 6)");
  }

  void ii7() {
    auto n = norm(9);
    K p = n.a(0, 9) - q<K>(7, 12) * n.a(0, 8) * n.a(0, 8);
    int sp = rec.sign("a09 - 7/12 a08^2", p);
    if (sp == 0) return out("II_7 with a09 - 7/12 a08^2 = 0 (codimension above 6)");
    label("10" + pm(sp), "a09 - 7/12 a08^2 != 0");
    flag("generic_moduli_assumed");
    if (f.order() < 11) return flag("moduli_need_order_11");
    auto m = norm(11);
    if (!extend(m, {{0, 9}, {0, 10}, {0, 11}}, 11)) throw ContractViolation("type 10 moduli reduction obstructed");
    K p9 = m.a(0, 9);
    alpha_from(p9, m.a(0, 10), sp);
    modulus("beta", m.a(0, 11) / (p9 * p9));
  }

  void iii() {
    auto n = norm(9);
    if (rec.test("a05", n.a(0, 5))) return label("11_5", "a05 != 0");
    K d7 = n.a(0, 7) - q<K>(2) * n.a(1, 5) + q<K>(4) * n.a(2, 3);
    if (rec.test("a07 - 2a15 + 4a23", d7)) return label("11_7", "a05 = 0, a07 - 2a15 + 4a23 != 0");
    c.trace.push_back("stage 2: remove every term of degree <= 7 outside xy^2 + y^4");
    std::vector<Exponent> model = model_monomials(cls);
    bool ok = eliminate<K>(
        n, [&](const Exponent& e) { return e.degree() <= 7 && std::find(model.begin(), model.end(), e) == model.end(); },
        14, judge);
    if (!ok) throw ContractViolation("III_* stage 2 obstructed although a07 - 2a15 + 4a23 = 0");
    K d9 = n.a(0, 9) - q<K>(2) * n.a(1, 7);
    if (rec.test("c09 - 2c17", d9)) return label("11_9", "c09 - 2c17 != 0");
    out("III_* with a05 = a07 - 2a15 + 4a23 = c09 - 2c17 = 0 (codimension above 6)");
  }

  void iv5() {
    auto n = norm(9);
    if (rec.test("a06", n.a(0, 6))) return label("12", "a06 != 0");
    K d = n.a(0, 9) - q<K>(5, 2) * n.a(1, 6) - q<K>(5, 6) * n.a(0, 7) * n.a(0, 7);
    if (rec.test("a09 - 5/2 a16 - 5/6 a07^2", d)) return label("13", "a06 = 0, a09 - 5/2 a16 - 5/6 a07^2 != 0");
    out("IV_5 with a06 = a09 - 5/2 a16 - 5/6 a07^2 = 0 (codimension above 6)");
  }

  void iv6() {
    auto n = norm(7);
    if (!rec.test("a07", n.a(0, 7))) return out("IV_6 with a07 = 0 (codimension above 6)");
    label("15", "a07 != 0");
    if (f.order() < 9) return flag("moduli_need_order_9");
    auto m = norm(9);
    if (!extend(m, {{0, 7}, {0, 9}}, 9)) throw ContractViolation("type 15 modulus reduction obstructed");
    K p = m.a(0, 7);
    modulus("alpha", m.a(0, 9) / (p * p * p));
  }

  void istar() {
    auto n = norm(6);
    if (rec.test("a31", n.a(3, 1))) return label("4_3", "a31 != 0");
    K a22 = n.a(2, 2);
    K d4 = n.a(4, 1) - q<K>(1, 3) * a22 * a22;
    int s4 = rec.sign("a41 - 1/3 a22^2", d4);
    if (s4 != 0) return label("4_4" + pm(s4), "a31 = 0, a41 - 1/3 a22^2 != 0");
    K d5 = n.a(5, 1) - q<K>(2, 3) * n.a(3, 2) * a22 + q<K>(1, 3) * n.a(1, 3) * a22 * a22;
    if (rec.test("a51 - 2/3 a32 a22 + 1/3 a13 a22^2", d5)) return label("4_5", "a51 - 2/3 a32 a22 + 1/3 a13 a22^2 != 0");
    out("I_* with a31 = a41 - 1/3 a22^2 = a51 - 2/3 a32 a22 + 1/3 a13 a22^2 = 0 (codimension above 6)");
  }

  void v1() {
    auto n = norm(5);
    int s = rec.sign("a05", n.a(0, 5));
    if (s != 0) return label("16" + pm(s), "a05 != 0");
    label("17", "a05 = 0");
  }

  void v2() {
    auto n = norm(7);
    K a5 = n.a(0, 5);
    if (!rec.test("(a05 - 3/2)(a05 - 9/5)", (a5 - q<K>(3, 2)) * (a5 - q<K>(9, 5))))
      return out("V_2 with a05 in {3/2, 9/5}");
    K d = n.a(0, 6) * (q<K>(5) * a5 - q<K>(9)) - q<K>(15) * n.a(1, 4) * a5;
    if (!rec.test("a06(5a05 - 9) - 15 a14 a05", d)) return out("V_2 with a06(5a05 - 9) - 15 a14 a05 = 0");
    label("18", "a05 not in {3/2, 9/5}, a06(5a05 - 9) - 15 a14 a05 != 0");
    flag("generic_moduli_assumed");
    modulus("alpha", a5);
    if (n.germ.order() < 7) return flag("moduli_need_order_7");
    if (!extend(n, {{0, 6}, {0, 7}}, 7)) throw ContractViolation("type 18 modulus reduction obstructed");
    K g = n.a(0, 6);
    modulus("beta", n.a(0, 7) / (g * g));
  }

  void vi() {
    auto n = norm(5);
    K kappa = n.a(3, 1), cc = n.a(2, 2);
    rec.test("a31", kappa);
    K k2 = kappa * kappa;
    K delta = q<K>(8) * cc * n.a(4, 1) / k2 - q<K>(12) * n.a(3, 2) / kappa - q<K>(4) * cc * cc * n.a(2, 3) / k2 +
              q<K>(4) * cc * n.a(1, 4) / kappa + (q<K>(3) + q<K>(2) * cc * cc * cc / k2) * n.a(0, 5);
    if (!rec.test("Delta", delta)) return out("VI with Delta = 0 (codimension above 6)");
    label("19", "Delta != 0");
    if (auto kr = as_rational(kappa); kr && sgn(*kr - 1) == 0) modulus("alpha", cc);
    else modulus("alpha^3", cc * cc * cc / k2);
  }
};

}  // namespace

template <class K>
Classification classify(const JetMap<K>& f, Judge<K>& judge) {
  Classification c;
  SpecifiedJetResult sj = classify_specified_jet(f, judge);
  c.certificate = sj.certificate;
  c.trace = sj.trace;
  c.specified_jet = sj.in_scope ? to_string(sj.cls) : "";
  if (sj.swapped) c.flags.push_back("component_swap");
  if (!sj.in_scope) {
    c.label = kOutOfScope;
    c.reason = sj.reason;
    return c;
  }
  switch (sj.cls) {
    case SpecifiedJet::Regular: c.label = "1"; break;
    case SpecifiedJet::Fold: c.label = "2"; break;
    case SpecifiedJet::Cusp: c.label = "3"; break;
    case SpecifiedJet::I2:
      c.label = sj.det_sign > 0 ? "4_2+" : "4_2-";
      c.trace.push_back(std::string("det H_lambda(0) ") + (sj.det_sign > 0 ? "> 0 -> lips" : "< 0 -> beaks"));
      break;
    default: {
      Discriminator<K> d{f, sj.cls, judge, c};
      try {
        d.run();
      } catch (const NotApplicable& e) {
        d.out(e.what());
      }
    }
  }
  if (c.in_scope()) c.codimension = codimension_of(c.label);
  return c;
}

SpecifiedJetResult classify_specified_jet(const PlaneGermJet& f) {
  ExactJudge j;
  return classify_specified_jet(f, j);
}

Classification classify(const PlaneGermJet& f) {
  ExactJudge j;
  return classify(f, j);
}

template SpecifiedJetResult classify_specified_jet(const JetMap<Rat>&, Judge<Rat>&);
template SpecifiedJetResult classify_specified_jet(const JetMap<RatFunc>&, Judge<RatFunc>&);
template Classification classify(const JetMap<Rat>&, Judge<Rat>&);
template Classification classify(const JetMap<RatFunc>&, Judge<RatFunc>&);

std::string replay_certificate(const Classification& c) {
  auto get = [&](const std::string& name) -> const CertEntry& {
    const CertEntry* e = c.find(name);
    if (!e) throw ContractViolation("certificate lacks " + name);
    return *e;
  };
  auto holds = [&](const std::string& name) { return get(name).holds; };
  auto pm = [&](const std::string& name) { return get(name).sign > 0 ? std::string("+") : std::string("-"); };
  const std::string oos = kOutOfScope;

  if (holds("lambda(0)")) return "1";
  if (!holds("rank df(0)")) return oos;
  if (holds("eta lambda(0)")) return "2";
  std::string cls;
  if (holds("d lambda(0)")) {
    if (holds(eta_name(2))) return "3";
    for (int k = 4; k <= 7 && cls.empty(); ++k)
      if (holds(eta_name(k - 1))) cls = "II_" + std::to_string(k);
    if (cls.empty()) return oos;
  } else {
    int det = get("det H_lambda(0)").sign;
    std::string rank = get("rank H_lambda(0)").value;
    if (rank == "2") {
      if (holds(eta_name(2))) return det > 0 ? "4_2+" : "4_2-";
      if (det > 0) return oos;
      if (holds(eta_name(3))) cls = "III_*";
      else if (holds(eta_name(4))) cls = "IV_5";
      else if (holds(eta_name(5))) cls = "IV_6";
      else return oos;
    } else if (rank == "1") {
      cls = holds(eta_name(2)) ? "I_*" : holds(eta_name(3)) ? "V_1" : "V_2";
    } else {
      if (!holds(eta_name(3))) return oos;
      cls = "VI";
    }
  }
  if (cls == "II_4") return "5";
  if (cls == "II_5") return holds("a07 - 5/8 a06^2") ? "6" : "7";
  if (cls == "II_6") {
    if (holds("a08 - 3/5 a07^2")) return "8" + pm("a08 - 3/5 a07^2");
    return holds("a09 - 7/25 a07^3") ? "9" : oos;
  }
  if (cls == "II_7") return holds("a09 - 7/12 a08^2") ? "10" + pm("a09 - 7/12 a08^2") : oos;
  if (cls == "III_*") {
    if (holds("a05")) return "11_5";
    if (holds("a07 - 2a15 + 4a23")) return "11_7";
    return holds("c09 - 2c17") ? "11_9" : oos;
  }
  if (cls == "IV_5") {
    if (holds("a06")) return "12";
    return holds("a09 - 5/2 a16 - 5/6 a07^2") ? "13" : oos;
  }
  if (cls == "IV_6") return holds("a07") ? "15" : oos;
  if (cls == "I_*") {
    if (holds("a31")) return "4_3";
    if (holds("a41 - 1/3 a22^2")) return "4_4" + pm("a41 - 1/3 a22^2");
    return holds("a51 - 2/3 a32 a22 + 1/3 a13 a22^2") ? "4_5" : oos;
  }
  if (cls == "V_1") return holds("a05") ? "16" + pm("a05") : "17";
  if (cls == "V_2") {
    const CertEntry* e = c.find("(a05 - 3/2)(a05 - 9/5)");
    if (!e) return oos;  // 4-jet (x, x^2y)
    if (!e->holds) return oos;
    return holds("a06(5a05 - 9) - 15 a14 a05") ? "18" : oos;
  }
  if (cls == "VI") {
    if (!c.find("Delta")) return oos;
    return holds("Delta") ? "19" : oos;
  }
  return oos;
}

std::optional<int> ak_type_of_function(const Jet2& g0) {
  if (g0.order() < 2) throw InsufficientOrder(2, "A_k type");
  if (sgn(g0.coeff(0, 0)) != 0) throw DomainError("function does not vanish at 0");
  if (sgn(g0.coeff(1, 0)) != 0 || sgn(g0.coeff(0, 1)) != 0) return std::nullopt;
  int r = g0.order();
  Rat A = g0.coeff(2, 0), B = g0.coeff(1, 1), C = g0.coeff(0, 2);
  if (sgn(4 * A * C - B * B) != 0) return 1;
  if (sgn(A) == 0 && sgn(B) == 0 && sgn(C) == 0) return std::nullopt;
  Jet2 g = g0;
  if (sgn(A) == 0) {
    g = compose(g0, Jet2::y(r), Jet2::x(r));
    std::swap(A, C);
  }
  // Quadratic part becomes A x^2.
  g = compose(g, Jet2::x(r) - Jet2::y(r) * (B / (2 * A)), Jet2::y(r));
  // Solve g_x(phi(y), y) = 0 for phi and restrict.
  Jet2 phi(r);
  for (int k = 0; k < r; ++k) {
    Jet2 gx = compose(g.dx(), phi.truncate(r - 1), Jet2::y(r - 1));
    Jet2 step(r);
    for (const auto& [e, c] : gx.terms()) step.add(e.i, e.j, c / (2 * A));
    phi = phi - step;
  }
  Jet2 res = compose(g, phi, Jet2::y(r));
  if (res.is_zero()) return std::nullopt;
  return res.low_degree() - 1;
}

bool crosscheck_4k(const PlaneGermJet& f) {
  Classification c = classify(f);
  if (c.label.rfind("4_", 0) != 0) throw ContractViolation("crosscheck_4k needs a germ of type 4_k, got " + c.label);
  int k = c.label[2] - '0';
  auto a = ak_type_of_function(lambda_of(f));
  return a && *a == k - 1 && sgn(eta_power_lambda(f, 2)) != 0;
}

json to_json(const Classification& c) {
  json j;
  j["label"] = c.label;
  if (!c.in_scope()) j["reason"] = c.reason;
  j["specified_jet"] = c.specified_jet;
  if (c.codimension >= 0) j["codimension"] = c.codimension;
  j["moduli"] = json::object();
  for (const auto& [k, v] : c.moduli) j["moduli"][k] = v;
  j["certificate"] = json::array();
  for (const auto& e : c.certificate) j["certificate"].push_back({{"predicate", e.predicate}, {"value", e.value}, {"holds", e.holds}});
  j["trace"] = c.trace;
  j["flags"] = c.flags;
  return j;
}

std::string to_text(const Classification& c) {
  std::ostringstream os;
  os << "label: " << c.label;
  if (c.in_scope()) os << " (A-cod " << c.codimension << ")";
  else os << " (" << c.reason << ")";
  os << "\nspecified jet: " << (c.specified_jet.empty() ? "-" : c.specified_jet) << "\n";
  for (const auto& e : c.certificate) os << "  " << e.predicate << " = " << e.value << (e.holds ? "  [nonzero]" : "  [zero]") << "\n";
  for (const auto& t : c.trace) os << "  > " << t << "\n";
  for (const auto& [k, v] : c.moduli) os << "  " << k << " = " << v << "\n";
  if (!c.flags.empty()) {
    os << "  flags:";
    for (const auto& f : c.flags) os << " " << f;
    os << "\n";
  }
  return os.str();
}

}  // namespace planegerm
