#include "planegerm/normalizer.hpp"

#include <algorithm>
#include <optional>

#include "planegerm/errors.hpp"

namespace planegerm {

std::string to_string(SpecifiedJet c) {
  switch (c) {
    case SpecifiedJet::Regular: return "regular";
    case SpecifiedJet::Fold: return "fold";
    case SpecifiedJet::Cusp: return "cusp";
    case SpecifiedJet::II4: return "II_4";
    case SpecifiedJet::II5: return "II_5";
    case SpecifiedJet::II6: return "II_6";
    case SpecifiedJet::II7: return "II_7";
    case SpecifiedJet::I2: return "I_2";
    case SpecifiedJet::IStar: return "I_*";
    case SpecifiedJet::III: return "III_*";
    case SpecifiedJet::IV5: return "IV_5";
    case SpecifiedJet::IV6: return "IV_6";
    case SpecifiedJet::V1: return "V_1";
    case SpecifiedJet::V2: return "V_2";
    case SpecifiedJet::VI: return "VI";
  }
  return "?";
}

bool is_stable(SpecifiedJet c) {
  return c == SpecifiedJet::Regular || c == SpecifiedJet::Fold || c == SpecifiedJet::Cusp;
}

Weights weights_of(SpecifiedJet c) {
  switch (c) {
    case SpecifiedJet::Fold: return {1, 1, 2};
    case SpecifiedJet::Cusp: return {2, 1, 3};
    case SpecifiedJet::II4: return {3, 1, 4};
    case SpecifiedJet::II5: return {4, 1, 5};
    case SpecifiedJet::II6: return {5, 1, 6};
    case SpecifiedJet::II7: return {6, 1, 7};
    case SpecifiedJet::I2:
    case SpecifiedJet::IStar: return {1, 1, 3};
    case SpecifiedJet::III: return {2, 1, 4};
    case SpecifiedJet::IV5: return {3, 1, 5};
    case SpecifiedJet::IV6: return {4, 1, 6};
    case SpecifiedJet::V1: return {3, 2, 8};
    case SpecifiedJet::V2: return {2, 1, 5};
    case SpecifiedJet::VI: return {1, 1, 4};
    case SpecifiedJet::Regular: break;
  }
  throw NotApplicable("no weights for " + to_string(c));
}

std::vector<Exponent> model_monomials(SpecifiedJet c) {
  switch (c) {
    case SpecifiedJet::Fold: return {{0, 2}};
    case SpecifiedJet::Cusp: return {{1, 1}, {0, 3}};
    case SpecifiedJet::II4: return {{1, 1}, {0, 4}};
    case SpecifiedJet::II5: return {{1, 1}, {0, 5}};
    case SpecifiedJet::II6: return {{1, 1}, {0, 6}};
    case SpecifiedJet::II7: return {{1, 1}, {0, 7}};
    case SpecifiedJet::I2: return {{0, 3}, {2, 1}};
    case SpecifiedJet::IStar: return {{0, 3}};
    case SpecifiedJet::III: return {{1, 2}, {0, 4}};
    case SpecifiedJet::IV5: return {{1, 2}, {0, 5}};
    case SpecifiedJet::IV6: return {{1, 2}, {0, 6}};
    case SpecifiedJet::V1: return {{2, 1}, {0, 4}};
    case SpecifiedJet::V2: return {{2, 1}, {1, 3}};
    case SpecifiedJet::VI: return {{0, 4}, {2, 2}, {3, 1}};
    case SpecifiedJet::Regular: break;
  }
  return {};
}

int model_degree(SpecifiedJet c) {
  int d = 1;
  for (const auto& e : model_monomials(c)) d = std::max(d, e.degree());
  return d;
}

namespace {

template <class K>
bool is_identity(const JetMap<K>& m) {
  return m == JetMap<K>::identity(m.order());
}

// The germ is (x, h) throughout; these helpers act on it and keep the record.
template <class K>
struct Work {
  JetMap<K>& g;
  ChangeRecord<K>& rec;
  int r() const { return g.order(); }

  void substitute(const JetMap<K>& s) {
    if (is_identity(s)) return;
    g = compose(g, s);
    rec.substitute(s);
  }
  void target(const JetMap<K>& p) {
    if (is_identity(p)) return;
    g = compose(p, g);
    rec.target(p);
  }
  // Y -> Y - h(X, 0).
  void kill_pure_x() {
    Jet<K> px(r());
    for (const auto& [e, c] : g.b.terms())
      if (e.j == 0) px.add(e.i, 0, c);
    if (px.is_zero()) return;
    target({Jet<K>::x(r()), Jet<K>::y(r()) - px});
  }
  void shift_y(const Jet<K>& m) {
    if (m.is_zero()) return;
    substitute({Jet<K>::x(r()), Jet<K>::y(r()) + m});
    kill_pure_x();
  }
  // Coefficient of x^a y^b goes to u c s^-a t^-b.
  void scale(const K& s, const K& t, const K& u) {
    int n = r();
    substitute({Jet<K>::x(n) * (K(1) / s), Jet<K>::y(n) * (K(1) / t)});
    target({Jet<K>::x(n) * s, Jet<K>::y(n) * u});
  }
};

template <class K>
K require_nonzero(Judge<K>& judge, const K& v, const std::string& what) {
  if (judge.is_zero(v)) throw ContractViolation(what + " vanishes");
  return v;
}

template <class K>
Jet<K> weighted_part(const Jet<K>& h, const Weights& w, int L) {
  Jet<K> out(h.order());
  for (const auto& [e, c] : h.terms())
    if (w.of(e) == L) out.add(e.i, e.j, c);
  return out;
}

// Gauss-Jordan with judged pivots; free unknowns are set to 0.
template <class K>
std::optional<std::vector<K>> solve(std::vector<std::vector<K>> A, std::vector<K> b, size_t n, Judge<K>& judge) {
  size_t m = A.size(), row = 0;
  std::vector<size_t> pivots;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t p = row;
    while (p < m && (is_structural_zero(A[p][col]) || judge.is_zero(A[p][col]))) ++p;
    if (p == m) continue;
    std::swap(A[p], A[row]);
    std::swap(b[p], b[row]);
    K inv = K(1) / A[row][col];
    for (size_t c = 0; c < n; ++c) A[row][c] = A[row][c] * inv;
    b[row] = b[row] * inv;
    for (size_t q = 0; q < m; ++q) {
      if (q == row || is_structural_zero(A[q][col])) continue;
      K f = A[q][col];
      for (size_t c = 0; c < n; ++c)
        if (!is_structural_zero(A[row][c])) A[q][c] = A[q][c] - f * A[row][c];
      b[q] = b[q] - f * b[row];
    }
    pivots.push_back(col);
    ++row;
  }
  for (size_t q = row; q < m; ++q)
    if (!is_structural_zero(b[q]) && !judge.is_zero(b[q])) return std::nullopt;
  std::vector<K> x(n, K(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
  return x;
}

// Monomials x^a y^b of the given weight (a, b >= 0).
std::vector<Exponent> of_weight(int wa, int wb, int L) {
  std::vector<Exponent> out;
  if (L < 0) return out;
  for (int a = 0; a * wa <= L; ++a)
    if ((L - a * wa) % wb == 0) out.push_back({a, (L - a * wa) / wb});
  return out;
}

template <class K>
Jet<K> power(const Jet<K>& h, int b) {
  Jet<K> out = Jet<K>::constant(K(1), h.order());
  for (int k = 0; k < b; ++k) out = out * h;
  return out;
}

template <class K>
Jet<K> mono(int i, int j, int order) {
  return Jet<K>::monomial(K(1), i, j, order);
}

// One weighted level.  Returns false when the targets are not in the span
// of the generators.
template <class K>
bool eliminate_level(Work<K>& w, const Weights& wt, int L, const std::function<bool(const Exponent&)>& is_target,
                     Judge<K>& judge) {
  int r = w.r();
  std::vector<Exponent> targets;
  for (const auto& e : of_weight(wt.wx, wt.wy, L))
    if (e.j >= 1 && e.degree() <= r && is_target(e)) targets.push_back(e);
  if (targets.empty()) return true;
  bool any = false;
  for (const auto& e : targets) any = any || !judge.is_zero(w.g.b.coeff(e.i, e.j));
  if (!any) return true;

  // h_D is a polynomial; lift it one order so its partials stay exact to order r.
  Jet<K> hD(r + 1);
  const Jet<K> part = weighted_part(w.g.b, wt, wt.D);
  for (const auto& [e, c] : part.terms()) hD.add(e.i, e.j, c);
  Jet<K> hDy = hD.dy(), hDx = hD.dx();
  hD = hD.truncate(r);
  enum Kind { Shift, Target, Mixed };
  struct Gen {
    Kind kind;
    Exponent e;
    Jet<K> image;
  };
  std::vector<Gen> gens;
  for (const auto& e : of_weight(wt.wx, wt.wy, L - wt.D + wt.wy))
    if (e.degree() >= 1) gens.push_back({Shift, e, mono<K>(e.i, e.j, r) * hDy});
  for (const auto& e : of_weight(wt.wx, wt.D, L))
    if (e.j >= 2 || (e.j == 1 && e.i >= 1)) gens.push_back({Target, e, mono<K>(e.i, 0, r) * power(hD, e.j)});
  for (const auto& e : of_weight(wt.wx, wt.D, wt.wx + L - wt.D))
    if (e.degree() >= 1 && !(e.i == 1 && e.j == 0))
      gens.push_back({Mixed, e, -(mono<K>(e.i, 0, r) * power(hD, e.j) * hDx)});

  std::vector<std::vector<K>> A(targets.size(), std::vector<K>(gens.size(), K(0)));
  std::vector<K> rhs(targets.size());
  for (size_t t = 0; t < targets.size(); ++t) {
    for (size_t g = 0; g < gens.size(); ++g) A[t][g] = weighted_part(gens[g].image, wt, L).coeff(targets[t].i, targets[t].j);
    rhs[t] = -w.g.b.coeff(targets[t].i, targets[t].j);
  }
  auto sol = solve(A, rhs, gens.size(), judge);
  if (!sol) return false;

  Jet<K> shift(r), tgt(r), mixed(r);
  for (size_t g = 0; g < gens.size(); ++g) {
    const K& c = (*sol)[g];
    if (is_structural_zero(c)) continue;
    const Exponent& e = gens[g].e;
    if (gens[g].kind == Shift) shift.add(e.i, e.j, c);
    else if (gens[g].kind == Target) tgt.add(e.i, e.j, c);
    else mixed.add(e.i, e.j, c);
  }
  w.shift_y(shift);
  if (!tgt.is_zero()) {
    w.target({Jet<K>::x(r), Jet<K>::y(r) + tgt});
    w.kill_pure_x();
  }
  if (!mixed.is_zero()) {
    w.target({Jet<K>::x(r) + mixed, Jet<K>::y(r)});
    // The first component is now x + P(x, h); straighten it.
    Jet<K> first = w.g.a;
    w.substitute(invert_map(JetMap<K>{first, Jet<K>::y(r)}));
    w.g.a = Jet<K>::x(r);
    w.kill_pure_x();
  }
  for (const auto& e : targets)
    if (!judge.is_zero(w.g.b.coeff(e.i, e.j)))
      throw ContractViolation("weighted elimination left x^" + std::to_string(e.i) + "y^" + std::to_string(e.j));
  return true;
}

template <class K>
void check_lower_weights(const Jet<K>& h, const Weights& wt, Judge<K>& judge, SpecifiedJet cls) {
  for (const auto& [e, c] : h.terms())
    if (e.j >= 1 && wt.of(e) < wt.D && !judge.is_zero(c))
      throw ContractViolation("germ is not of type " + to_string(cls) + ": term x^" + std::to_string(e.i) + "y^" +
                              std::to_string(e.j) + " below the weighted degree");
}

}  // namespace

template <class K>
Prenormal<K> prenormalize(const JetMap<K>& f, Judge<K>& judge, bool track) {
  int r = f.order();
  if (r < 1) throw InsufficientOrder(1, "prenormalization");
  if (!is_structural_zero(f.a.coeff(0, 0)) || !is_structural_zero(f.b.coeff(0, 0)))
    throw DomainError("germ does not fix the origin");
  Prenormal<K> out{f.truncate(r), false, ChangeRecord<K>(r, track)};
  Work<K> w{out.germ, out.record};
  bool f1_zero = judge.is_zero(f.a.coeff(1, 0)) && judge.is_zero(f.a.coeff(0, 1));
  if (f1_zero) {
    if (judge.is_zero(f.b.coeff(1, 0)) && judge.is_zero(f.b.coeff(0, 1)))
      throw NotApplicable("corank two germ cannot be prenormalized");
    w.target({Jet<K>::y(r), Jet<K>::x(r)});
    out.swapped = true;
  }
  const Jet<K> g1 = out.germ.a;
  JetMap<K> phi = !judge.is_zero(g1.coeff(1, 0)) ? JetMap<K>{g1, Jet<K>::y(r)} : JetMap<K>{g1, Jet<K>::x(r)};
  w.substitute(invert_map(phi));
  w.g.a = Jet<K>::x(r);
  K alpha = w.g.b.coeff(1, 0);
  if (!judge.is_zero(alpha)) w.target({Jet<K>::x(r), Jet<K>::y(r) - Jet<K>::x(r) * alpha});
  return out;
}

template <class K>
bool eliminate(NormalizedGerm<K>& n, const std::function<bool(const Exponent&)>& target, int max_weight,
               Judge<K>& judge) {
  Work<K> w{n.germ, n.record};
  const Weights wt = weights_of(n.cls);
  for (int L = wt.D + 1; L <= max_weight; ++L) {
    auto t = [&](const Exponent& e) { return e.j >= 1 && e.degree() <= w.r() && target(e); };
    if (!eliminate_level(w, wt, L, t, judge)) return false;
  }
  return true;
}

template <class K>
NormalizedGerm<K> reduce_to_specified_jet(const JetMap<K>& f, SpecifiedJet cls, Judge<K>& judge, bool track) {
  if (cls == SpecifiedJet::Regular) throw NotApplicable("regular germs have no specified jet");
  Prenormal<K> p = prenormalize(f, judge, track);
  NormalizedGerm<K> n{cls, p.germ, p.swapped, p.record, {"prenormal"}};
  Work<K> w{n.germ, n.record};
  int r = w.r();
  const Weights wt = weights_of(cls);
  int M = model_degree(cls);
  if (r < M) throw InsufficientOrder(M, "reduction to the " + to_string(cls) + " jet");
  w.kill_pure_x();
  auto c = [&](int i, int j) { return w.g.b.coeff(i, j); };
  auto one = K(1);

  switch (cls) {
    case SpecifiedJet::I2:
    case SpecifiedJet::IStar:
    case SpecifiedJet::VI: {
      int d = cls == SpecifiedJet::VI ? 4 : 3;
      K q = require_nonzero(judge, c(0, d), "leading y-power coefficient");
      K k = -c(1, d - 1) / (q * K(d));
      if (!is_structural_zero(k) && !judge.is_zero(k)) w.shift_y(Jet<K>::x(r) * k);
      break;
    }
    default: break;
  }
  check_lower_weights(w.g.b, wt, judge, cls);

  switch (cls) {
    case SpecifiedJet::Fold: {
      K q = require_nonzero(judge, c(0, 2), "y^2 coefficient");
      w.scale(one, one, one / q);
      break;
    }
    case SpecifiedJet::Cusp:
    case SpecifiedJet::II4:
    case SpecifiedJet::II5:
    case SpecifiedJet::II6:
    case SpecifiedJet::II7:
    case SpecifiedJet::III:
    case SpecifiedJet::IV5:
    case SpecifiedJet::IV6: {
      Exponent lead = model_monomials(cls)[0];
      K pc = require_nonzero(judge, c(lead.i, lead.j), "x y^k coefficient");
      K q = require_nonzero(judge, c(0, wt.D), "y^D coefficient");
      w.scale(pc / q, one, one / q);
      break;
    }
    case SpecifiedJet::I2: {
      K q = c(0, 3);
      K kappa = require_nonzero(judge, K(c(2, 1) / q), "x^2y coefficient");
      K s = one;
      if (auto kr = as_rational(kappa)) {
        Rat a = abs(*kr);
        if (auto sq = rational_sqrt(a)) s = K(*sq);
      }
      w.scale(s, one, one / q);
      break;
    }
    case SpecifiedJet::IStar: {
      if (!judge.is_zero(c(2, 1))) throw ContractViolation("germ is not of type I_*: cubic is not a cube");
      w.scale(one, one, one / c(0, 3));
      break;
    }
    case SpecifiedJet::V1: {
      K pc = require_nonzero(judge, c(2, 1), "x^2y coefficient");
      K q = require_nonzero(judge, c(0, 4), "y^4 coefficient");
      K t = pc / q;
      w.scale(t * t, t, t * t * t * t / q);
      break;
    }
    case SpecifiedJet::V2: {
      K pc = require_nonzero(judge, c(2, 1), "x^2y coefficient");
      if (judge.is_zero(c(1, 3))) throw NotApplicable("V_2 germ with 4-jet (x, x^2y) has codimension above 6");
      K rc = c(1, 3);
      w.scale(pc / rc, one, pc / (rc * rc));
      break;
    }
    case SpecifiedJet::VI: {
      K q = c(0, 4);
      K kappa = c(3, 1) / q;
      if (judge.is_zero(kappa)) throw NotApplicable("VI germ with vanishing x^3y coefficient has codimension above 6");
      K s = one;
      if (auto kr = as_rational(kappa))
        if (auto cb = rational_cbrt(*kr)) s = K(*cb);
      w.scale(s, one, one / q);
      break;
    }
    case SpecifiedJet::Regular: break;
  }
  n.stages.push_back("weighted degree " + std::to_string(wt.D));

  std::vector<Exponent> model = model_monomials(cls);
  std::function<bool(const Exponent&)> target = [&](const Exponent& e) {
    return e.degree() <= M && std::find(model.begin(), model.end(), e) == model.end();
  };
  int Lmax = 0;
  for (int i = 0; i <= M; ++i)
    for (int j = 0; i + j <= M; ++j) Lmax = std::max(Lmax, wt.of({i, j}));
  if (!eliminate(n, target, Lmax, judge))
    throw ContractViolation("reduction to the " + to_string(cls) + " jet is obstructed");
  for (const auto& [e, v] : n.germ.b.terms())
    if (target(e) && !judge.is_zero(v)) throw ContractViolation("reduction left a term of degree <= " + std::to_string(M));
  n.stages.push_back("basic");
  return n;
}

std::pair<PlaneGermJet, CoordChangeJet> prenormalize(const PlaneGermJet& f) {
  ExactJudge j;
  auto p = prenormalize(f, j, true);
  return {p.germ, p.record.change()};
}

NormalizedGerm<Rat> reduce_to_specified_jet(const PlaneGermJet& f, SpecifiedJet cls) {
  ExactJudge j;
  return reduce_to_specified_jet(f, cls, j, true);
}

template Prenormal<Rat> prenormalize(const JetMap<Rat>&, Judge<Rat>&, bool);
template Prenormal<RatFunc> prenormalize(const JetMap<RatFunc>&, Judge<RatFunc>&, bool);
template NormalizedGerm<Rat> reduce_to_specified_jet(const JetMap<Rat>&, SpecifiedJet, Judge<Rat>&, bool);
template NormalizedGerm<RatFunc> reduce_to_specified_jet(const JetMap<RatFunc>&, SpecifiedJet, Judge<RatFunc>&, bool);
template bool eliminate(NormalizedGerm<Rat>&, const std::function<bool(const Exponent&)>&, int, Judge<Rat>&);
template bool eliminate(NormalizedGerm<RatFunc>&, const std::function<bool(const Exponent&)>&, int,
                        Judge<RatFunc>&);

}  // namespace planegerm
