#pragma once

#include <string>

#include "planegerm/upoly.hpp"

namespace planegerm {

// Element of Q(u): num/den with den monic and gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const Rat& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(int c) : RatFunc(Rat(c)) {}          // NOLINT
  RatFunc(const UPoly& p) : num_(p), den_(1) {}  // NOLINT
  RatFunc(const UPoly& num, const UPoly& den);
  static RatFunc var() { return RatFunc(UPoly::var()); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  Rat constant() const { return num_.coeff(0); }

  // Throws NotInvertible when den vanishes at t.
  Rat eval(const Rat& t) const;

  RatFunc operator-() const { return RatFunc(-num_, den_, true); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string str(const std::string& var = "u") const;

 private:
  RatFunc(UPoly num, UPoly den, bool /*reduced*/) : num_(std::move(num)), den_(std::move(den)) {}
  UPoly num_, den_;
};

inline bool is_structural_zero(const RatFunc& r) { return r.is_zero(); }

}  // namespace planegerm
