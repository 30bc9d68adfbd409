#include "planegerm/judge.hpp"

#include "planegerm/errors.hpp"

namespace planegerm {

void GenericJudge::record(const RatFunc& v) {
  for (const UPoly* p : {&v.num(), &v.den()}) {
    if (p->degree() < 1) continue;
    UPoly m = p->monic();
    bool seen = false;
    for (const auto& c : critical_) seen = seen || c == m;
    if (!seen) critical_.push_back(m);
    if (m.sign_at(sample_) == 0) throw SampleHitsRoot(m);
  }
}

bool GenericJudge::is_zero(const RatFunc& v) {
  if (v.is_zero()) return true;
  record(v);
  return false;
}

int GenericJudge::sign(const RatFunc& v) {
  if (v.is_zero()) return 0;
  record(v);
  return sgn(v.eval(sample_));
}

int RootJudge::sign(const RatFunc& v) {
  if (v.is_zero()) return 0;
  int sd = sign_at_root(v.den(), p_, root_);
  if (sd == 0) throw NotInvertible("rational function has a pole at the root");
  return sd * sign_at_root(v.num(), p_, root_);
}

}  // namespace planegerm
