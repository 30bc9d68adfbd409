#include "planegerm/ratfunc.hpp"

#include "planegerm/errors.hpp"

namespace planegerm {

RatFunc::RatFunc(const UPoly& num, const UPoly& den) {
  if (den.is_zero()) throw NotInvertible("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  UPoly g = gcd(num, den);
  UPoly n = divmod(num, g).first;
  UPoly d = divmod(den, g).first;
  Rat l = d.lead();
  num_ = n * (1 / l);
  den_ = d * (1 / l);
}

Rat RatFunc::eval(const Rat& t) const {
  Rat d = den_.eval(t);
  if (sgn(d) == 0) throw NotInvertible("rational function evaluated at a pole");
  return num_.eval(t) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_.degree() == 0 && b.den_.degree() == 0) return RatFunc(a.num_ * b.num_, UPoly(1), true);
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw NotInvertible("division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::str(const std::string& var) const {
  if (den_.degree() == 0) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace planegerm
