#pragma once

#include <array>
#include <vector>

#include "planegerm/jet.hpp"
#include "planegerm/judge.hpp"

namespace planegerm {

template <class K>
Jet<K> lambda_of(const JetMap<K>& f) {
  if (f.order() < 1) throw InsufficientOrder(1, "Jacobian determinant");
  Jet<K> f1x = f.a.dx(), f1y = f.a.dy(), f2x = f.b.dx(), f2y = f.b.dy();
  return f1x * f2y - f1y * f2x;
}

template <class K>
int corank_at_origin(const JetMap<K>& f, Judge<K>& judge) {
  if (f.order() < 1) throw InsufficientOrder(1, "corank");
  auto L = f.linear_part();
  bool zero = true;
  for (const auto& v : L) zero = zero && judge.is_zero(v);
  if (zero) return 2;
  return judge.is_zero(L[0] * L[3] - L[1] * L[2]) ? 1 : 0;
}

inline int corank_at_origin(const PlaneGermJet& f) {
  ExactJudge j;
  return corank_at_origin(f, j);
}

template <class K>
struct NullField {
  Jet<K> eta1, eta2;
  bool swapped = false;  // built from f2 because f1 has zero linear part
  int order() const { return std::min(eta1.order(), eta2.order()); }
};

// eta = (d g/dy, -d g/dx) for the submersive component g.
template <class K>
NullField<K> null_field(const JetMap<K>& f, Judge<K>& judge) {
  if (corank_at_origin(f, judge) != 1) throw NotApplicable("null field needs a corank-one germ");
  bool f1_zero = judge.is_zero(f.a.coeff(1, 0)) && judge.is_zero(f.a.coeff(0, 1));
  const Jet<K>& g = f1_zero ? f.b : f.a;
  return {g.dy(), -g.dx(), f1_zero};
}

inline NullField<Rat> null_field(const PlaneGermJet& f) {
  ExactJudge j;
  return null_field(f, j);
}

template <class K>
Jet<K> apply_field(const NullField<K>& eta, const Jet<K>& g) {
  return eta.eta1 * g.dx() + eta.eta2 * g.dy();
}

// Values eta^k lambda(0) for k = 0..kmax; needs order(f) >= kmax + 1.
template <class K>
std::vector<K> eta_powers_at_origin(const JetMap<K>& f, const NullField<K>& eta, int kmax) {
  if (f.order() < kmax + 1) throw InsufficientOrder(kmax + 1, "eta^" + std::to_string(kmax) + " lambda(0)");
  std::vector<K> out;
  Jet<K> g = lambda_of(f);
  out.push_back(g.coeff(0, 0));
  for (int k = 1; k <= kmax; ++k) {
    g = apply_field(eta, g);
    out.push_back(g.coeff(0, 0));
  }
  return out;
}

inline Rat eta_power_lambda(const PlaneGermJet& f, int k) {
  if (f.order() < k + 1) throw InsufficientOrder(k + 1, "eta^" + std::to_string(k) + " lambda(0)");
  return eta_powers_at_origin(f, null_field(f), k).back();
}

template <class K>
struct HessianData {
  std::array<std::array<K, 2>, 2> h;
  int rank = 0;
  K det;
};

template <class K>
HessianData<K> hessian_of(const Jet<K>& g, Judge<K>& judge) {
  if (g.order() < 2) throw InsufficientOrder(2, "Hessian");
  HessianData<K> d;
  d.h = {{{g.coeff(2, 0) * K(2), g.coeff(1, 1)}, {g.coeff(1, 1), g.coeff(0, 2) * K(2)}}};
  d.det = d.h[0][0] * d.h[1][1] - d.h[0][1] * d.h[1][0];
  if (!judge.is_zero(d.det)) d.rank = 2;
  else if (judge.is_zero(d.h[0][0]) && judge.is_zero(d.h[0][1]) && judge.is_zero(d.h[1][1])) d.rank = 0;
  else d.rank = 1;
  return d;
}

template <class K>
HessianData<K> hessian_lambda(const JetMap<K>& f, Judge<K>& judge) {
  if (f.order() < 3) throw InsufficientOrder(3, "Hessian of lambda");
  return hessian_of(lambda_of(f), judge);
}

inline HessianData<Rat> hessian_lambda(const PlaneGermJet& f) {
  ExactJudge j;
  return hessian_lambda(f, j);
}

}  // namespace planegerm
