#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planegerm/rational.hpp"

namespace planegerm {

// Dense univariate polynomial over Q; c_[k] is the coefficient of t^k.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rat& c);  // NOLINT: constants convert implicitly
  UPoly(int c) : UPoly(Rat(c)) {}
  explicit UPoly(std::vector<Rat> coeffs);
  static UPoly monomial(const Rat& c, int k);
  static UPoly var() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rat(0); }
  const Rat& lead() const { return c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& t) const;
  int sign_at(const Rat& t) const { return sgn(eval(t)); }
  UPoly derivative() const;
  UPoly monic() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rat& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rat& s) { return a *= s; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Euclidean division: a = q*b + r, deg r < deg b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);  // monic, gcd(0,0) = 0
UPoly square_free(const UPoly& p);          // monic

std::vector<UPoly> sturm_sequence(const UPoly& p);
// Number of distinct real roots of p in the half-open interval (lo, hi].
int count_roots(const std::vector<UPoly>& sturm, const Rat& lo, const Rat& hi);

// A real root of a square-free polynomial: exact (lo == hi) or the unique
// root in the open interval (lo, hi) with p(lo), p(hi) nonzero.
struct RealRoot {
  Rat lo, hi;
  bool exact() const { return lo == hi; }
};

Rat root_bound(const UPoly& p);
// All real roots of p (p nonzero), sorted; rational roots are detected and
// returned exactly when the coefficients are small enough to enumerate.
std::vector<RealRoot> isolate_real_roots(const UPoly& p);

// Shrinks the isolating interval of root r of squarefree p until it has
// width < width (no-op for exact roots).
RealRoot refine(const UPoly& p, RealRoot r, const Rat& width);

// Sign of q at the root r of the squarefree polynomial p.
int sign_at_root(const UPoly& q, const UPoly& p, const RealRoot& r);

}  // namespace planegerm
