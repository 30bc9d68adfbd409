#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "planegerm/jet.hpp"
#include "planegerm/judge.hpp"

namespace planegerm {

enum class SpecifiedJet { Regular, Fold, Cusp, II4, II5, II6, II7, I2, IStar, III, IV5, IV6, V1, V2, VI };

std::string to_string(SpecifiedJet c);
bool is_stable(SpecifiedJet c);

// Weights of x and y and the weighted degree D of the specified jet w.
struct Weights {
  int wx, wy, D;
  int of(const Exponent& e) const { return wx * e.i + wy * e.j; }
};
Weights weights_of(SpecifiedJet c);
// Monomials of w; their coefficients become 1 (I_2 and VI keep a free
// coefficient on x^2y, resp. x^2y^2 and x^3y).
std::vector<Exponent> model_monomials(SpecifiedJet c);
int model_degree(SpecifiedJet c);

// Source substitution sigma and target map psi, both composite:
// current germ = psi o f o sigma.
template <class K>
struct ChangeRecord {
  bool enabled = true;
  JetMap<K> sigma, psi;
  explicit ChangeRecord(int order, bool on = true)
      : enabled(on), sigma(JetMap<K>::identity(order)), psi(JetMap<K>::identity(order)) {}
  void substitute(const JetMap<K>& s) {
    if (enabled) sigma = compose(sigma, s);
  }
  void target(const JetMap<K>& p) {
    if (enabled) psi = compose(p, psi);
  }
  // As (phi, psi) with f -> psi o f o phi^{-1}.
  CoordChange<K> change() const { return {invert_map(sigma), psi}; }
};

template <class K>
struct Prenormal {
  JetMap<K> germ;
  bool swapped = false;
  ChangeRecord<K> record;
};

// (x, h) with h in m^2.
template <class K>
Prenormal<K> prenormalize(const JetMap<K>& f, Judge<K>& judge, bool track = true);

template <class K>
struct NormalizedGerm {
  SpecifiedJet cls;
  JetMap<K> germ;
  bool swapped = false;
  ChangeRecord<K> record;
  std::vector<std::string> stages;
  const Jet<K>& h() const { return germ.b; }
  K a(int i, int j) const { return germ.b.coeff(i, j); }
};

// Brings a prenormalizable germ whose invariant data match `cls` to
// (x, w + tail) with every monomial of degree <= deg(w) outside w removed.
template <class K>
NormalizedGerm<K> reduce_to_specified_jet(const JetMap<K>& f, SpecifiedJet cls, Judge<K>& judge, bool track = true);

// Further weighted elimination of every monomial for which `target` holds,
// level by level for weights D+1..max_weight.  Returns false when some
// target cannot be removed (the obstruction is then a nonzero invariant).
template <class K>
bool eliminate(NormalizedGerm<K>& n, const std::function<bool(const Exponent&)>& target, int max_weight,
               Judge<K>& judge);

// Convenience wrappers over Q.
std::pair<PlaneGermJet, CoordChangeJet> prenormalize(const PlaneGermJet& f);
NormalizedGerm<Rat> reduce_to_specified_jet(const PlaneGermJet& f, SpecifiedJet cls);

}  // namespace planegerm
