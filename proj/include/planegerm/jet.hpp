#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "planegerm/errors.hpp"
#include "planegerm/rational.hpp"
#include "planegerm/ratfunc.hpp"

namespace planegerm {

struct Exponent {
  int i = 0, j = 0;
  int degree() const { return i + j; }
  auto operator<=>(const Exponent&) const = default;
};

inline std::string coeff_str(const Rat& c) { return to_string(c); }
inline std::string coeff_str(const RatFunc& c) { return c.str(); }

// Truncated bivariate power series sum c_ij x^i y^j with i + j <= order.
// Stored coefficients are never (structurally) zero.
template <class K>
class Jet {
 public:
  using Terms = std::map<Exponent, K>;

  explicit Jet(int order = 0) : order_(order) {
    if (order < 0) throw ContractViolation("negative jet order");
  }
  static Jet constant(const K& c, int order) {
    Jet j(order);
    j.set(0, 0, c);
    return j;
  }
  static Jet monomial(const K& c, int i, int k, int order) {
    Jet j(order);
    if (i + k <= order) j.set(i, k, c);
    return j;
  }
  static Jet x(int order) { return monomial(K(1), 1, 0, order); }
  static Jet y(int order) { return monomial(K(1), 0, 1, order); }

  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  K coeff(int i, int j) const {
    if (i + j > order_) throw InsufficientOrder(i + j, "coefficient of x^" + std::to_string(i) + "y^" + std::to_string(j));
    auto it = terms_.find({i, j});
    return it == terms_.end() ? K(0) : it->second;
  }
  K value_at_origin() const { return coeff(0, 0); }

  void set(int i, int j, const K& c) {
    if (i < 0 || j < 0) throw ContractViolation("negative exponent");
    if (i + j > order_) throw ContractViolation("term beyond jet order");
    if (is_structural_zero(c)) terms_.erase({i, j});
    else terms_[{i, j}] = c;
  }
  void add(int i, int j, const K& c) {
    if (i + j > order_ || is_structural_zero(c)) return;
    auto it = terms_.find({i, j});
    if (it == terms_.end()) {
      terms_.emplace(Exponent{i, j}, c);
      return;
    }
    it->second += c;
    if (is_structural_zero(it->second)) terms_.erase(it);
  }

  // Lowest total degree of a stored term (order + 1 when zero).
  int low_degree() const {
    int d = order_ + 1;
    for (const auto& [e, c] : terms_) d = std::min(d, e.degree());
    return d;
  }

  Jet truncate(int d) const {
    if (d > order_) throw InsufficientOrder(d, "truncation");
    Jet r(d);
    for (const auto& [e, c] : terms_)
      if (e.degree() <= d) r.terms_.emplace(e, c);
    return r;
  }
  // Truncates down to d when d < order; otherwise returns a copy.
  Jet at_most(int d) const { return d < order_ ? truncate(d) : *this; }

  Jet homogeneous(int d) const {
    Jet r(order_);
    for (const auto& [e, c] : terms_)
      if (e.degree() == d) r.terms_.emplace(e, c);
    return r;
  }

  Jet operator-() const {
    Jet r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  Jet& operator+=(const Jet& o) {
    if (o.order_ < order_) *this = truncate(o.order_);
    for (const auto& [e, c] : o.terms_) add(e.i, e.j, c);
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    if (o.order_ < order_) *this = truncate(o.order_);
    for (const auto& [e, c] : o.terms_) add(e.i, e.j, -c);
    return *this;
  }
  Jet& operator*=(const K& s) {
    if (is_structural_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const K& s) { return a *= s; }
  friend Jet operator*(const K& s, Jet a) { return a *= s; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r(std::min(a.order_, b.order_));
    for (const auto& [ea, ca] : a.terms_) {
      if (ea.degree() > r.order_) continue;
      for (const auto& [eb, cb] : b.terms_) {
        if (ea.degree() + eb.degree() > r.order_) continue;
        r.add(ea.i + eb.i, ea.j + eb.j, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const Jet& a, const Jet& b) { return a.order_ == b.order_ && a.terms_ == b.terms_; }

  Jet dx() const {
    if (order_ < 1) throw InsufficientOrder(1, "partial derivative");
    Jet r(order_ - 1);
    for (const auto& [e, c] : terms_)
      if (e.i > 0) r.set(e.i - 1, e.j, c * K(e.i));
    return r;
  }
  Jet dy() const {
    if (order_ < 1) throw InsufficientOrder(1, "partial derivative");
    Jet r(order_ - 1);
    for (const auto& [e, c] : terms_)
      if (e.j > 0) r.set(e.i, e.j - 1, c * K(e.j));
    return r;
  }

  // Degree-preserving substitution x -> s*x, y -> t*y.
  Jet scaled(const K& s, const K& t) const {
    Jet r(order_);
    for (const auto& [e, c] : terms_) {
      K f = c;
      for (int k = 0; k < e.i; ++k) f *= s;
      for (int k = 0; k < e.j; ++k) f *= t;
      r.set(e.i, e.j, f);
    }
    return r;
  }

  std::string str() const {
    std::vector<std::pair<Exponent, K>> v(terms_.begin(), terms_.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
      if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
      return a.first.i > b.first.i;
    });
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : v) {
      if (!first) os << " + ";
      first = false;
      std::string cs = coeff_str(c);
      bool unit = cs == "1";
      if (e.degree() == 0) {
        os << cs;
        continue;
      }
      if (cs == "-1") os << "-";
      else if (!unit) os << (cs.find_first_of("+ ") != std::string::npos ? "(" + cs + ")" : cs) << "*";
      if (e.i) os << "x" << (e.i > 1 ? "^" + std::to_string(e.i) : "");
      if (e.i && e.j) os << "*";
      if (e.j) os << "y" << (e.j > 1 ? "^" + std::to_string(e.j) : "");
    }
    return os.str();
  }

 private:
  int order_;
  Terms terms_;
};

using Jet2 = Jet<Rat>;

template <class K>
std::ostream& operator<<(std::ostream& os, const Jet<K>& j) {
  return os << j.str() << " [order " << j.order() << "]";
}

// a(sx, sy), truncated to the minimum of the three orders.
template <class K>
Jet<K> compose(const Jet<K>& a, const Jet<K>& sx, const Jet<K>& sy) {
  if (!is_structural_zero(sx.coeff(0, 0)) || !is_structural_zero(sy.coeff(0, 0)))
    throw DomainError("substituted series must have zero constant term");
  int r = std::min({a.order(), sx.order(), sy.order()});
  Jet<K> X = sx.at_most(r), Y = sy.at_most(r);
  int maxi = 0, maxj = 0;
  for (const auto& [e, c] : a.terms())
    if (e.degree() <= r) {
      maxi = std::max(maxi, e.i);
      maxj = std::max(maxj, e.j);
    }
  std::vector<Jet<K>> px{Jet<K>::constant(K(1), r)}, py{Jet<K>::constant(K(1), r)};
  for (int k = 1; k <= maxi; ++k) px.push_back(px.back() * X);
  for (int k = 1; k <= maxj; ++k) py.push_back(py.back() * Y);
  Jet<K> out(r);
  for (int j = 0; j <= maxj; ++j) {
    Jet<K> inner(r);
    bool any = false;
    for (const auto& [e, c] : a.terms())
      if (e.j == j && e.degree() <= r) {
        inner += px[e.i] * c;
        any = true;
      }
    if (any) out += j == 0 ? inner : inner * py[j];
  }
  return out;
}

// 1/a for a(0,0) != 0.
template <class K>
Jet<K> invert_unit(const Jet<K>& a) {
  K a0 = a.coeff(0, 0);
  if (is_structural_zero(a0)) throw NotAUnit("constant term is zero");
  K inv0 = K(1) / a0;
  int r = a.order();
  Jet<K> n = a;  // a = a0 (1 + m), m without constant term
  n.set(0, 0, K(0));
  Jet<K> m = n * inv0;
  // 1/(1+m) = sum (-m)^k
  Jet<K> acc = Jet<K>::constant(K(1), r);
  Jet<K> pw = Jet<K>::constant(K(1), r);
  for (int k = 1; k <= r; ++k) {
    pw = pw * m;
    if (pw.is_zero()) break;
    if (k % 2) acc -= pw;
    else acc += pw;
  }
  return acc * inv0;
}

// A pair of jets: a plane map-germ or one half of a coordinate change.
template <class K>
struct JetMap {
  Jet<K> a, b;
  int order() const { return std::min(a.order(), b.order()); }
  static JetMap identity(int order) { return {Jet<K>::x(order), Jet<K>::y(order)}; }
  JetMap truncate(int d) const { return {a.truncate(d), b.truncate(d)}; }
  JetMap at_most(int d) const { return {a.at_most(d), b.at_most(d)}; }
  std::array<K, 4> linear_part() const { return {a.coeff(1, 0), a.coeff(0, 1), b.coeff(1, 0), b.coeff(0, 1)}; }
  friend bool operator==(const JetMap& p, const JetMap& q) { return p.a == q.a && p.b == q.b; }
};

using PlaneGermJet = JetMap<Rat>;

template <class K>
std::ostream& operator<<(std::ostream& os, const JetMap<K>& m) {
  return os << "(" << m.a.str() << ", " << m.b.str() << ") [order " << m.order() << "]";
}

// F o G.
template <class K>
JetMap<K> compose(const JetMap<K>& F, const JetMap<K>& G) {
  return {compose(F.a, G.a, G.b), compose(F.b, G.a, G.b)};
}

// Compositional inverse of a map with zero constant term and invertible
// linear part, degree by degree.
template <class K>
JetMap<K> invert_map(const JetMap<K>& P) {
  if (!is_structural_zero(P.a.coeff(0, 0)) || !is_structural_zero(P.b.coeff(0, 0)))
    throw NotInvertible("map does not fix the origin");
  int r = P.order();
  auto L = P.linear_part();
  K det = L[0] * L[3] - L[1] * L[2];
  if (is_structural_zero(det)) throw NotInvertible("singular linear part");
  K i00 = L[3] / det, i01 = -L[1] / det, i10 = -L[2] / det, i11 = L[0] / det;
  JetMap<K> N = P.at_most(r);
  N.a.set(1, 0, K(0));
  N.a.set(0, 1, K(0));
  N.b.set(1, 0, K(0));
  N.b.set(0, 1, K(0));
  Jet<K> X = Jet<K>::x(r), Y = Jet<K>::y(r);
  auto apply_inv = [&](const Jet<K>& u, const Jet<K>& v) {
    return JetMap<K>{u * i00 + v * i01, u * i10 + v * i11};
  };
  JetMap<K> Q = apply_inv(X, Y);
  if (N.a.is_zero() && N.b.is_zero()) return Q;
  // step k fixes the degree k part, so it only needs the k-jets
  for (int k = 2; k <= r; ++k) {
    JetMap<K> NQ = compose(N.at_most(k), Q.at_most(k));
    JetMap<K> next = apply_inv(X.at_most(k) - NQ.a, Y.at_most(k) - NQ.b);
    Q = {Jet<K>(r), Jet<K>(r)};
    for (const auto& [e, c] : next.a.terms()) Q.a.set(e.i, e.j, c);
    for (const auto& [e, c] : next.b.terms()) Q.b.set(e.i, e.j, c);
  }
  return Q;
}

// (source phi, target psi) acting as f -> psi o f o phi^{-1}.
template <class K>
struct CoordChange {
  JetMap<K> source, target;
  int order() const { return std::min(source.order(), target.order()); }
  static CoordChange identity(int order) { return {JetMap<K>::identity(order), JetMap<K>::identity(order)}; }
};

using CoordChangeJet = CoordChange<Rat>;

template <class K>
CoordChange<K> invert_change(const CoordChange<K>& ch) {
  return {invert_map(ch.source), invert_map(ch.target)};
}

// second o first.
template <class K>
CoordChange<K> compose_changes(const CoordChange<K>& second, const CoordChange<K>& first) {
  return {compose(second.source, first.source), compose(second.target, first.target)};
}

template <class K>
JetMap<K> apply_change(const JetMap<K>& f, const CoordChange<K>& ch) {
  auto check = [](const JetMap<K>& m, const char* what) {
    auto L = m.linear_part();
    if (is_structural_zero(L[0] * L[3] - L[1] * L[2])) throw NotInvertible(std::string(what) + " has singular linear part");
  };
  check(ch.source, "source change");
  check(ch.target, "target change");
  return compose(ch.target, compose(f, invert_map(ch.source)));
}

}  // namespace planegerm
